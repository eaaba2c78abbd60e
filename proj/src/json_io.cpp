// SPDX-License-Identifier: Apache-2.0
#include "json_io.hpp"

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

namespace parikh {

using nlohmann::json;

namespace {

json vec_to_json(const Vec& v) { return json(v); }

Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers");
  Vec v;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ParseError("expected an integer entry");
    Int x = e.get<Int>();
    if (x < 0) throw ParseError("negative entry");
    v.push_back(x);
  }
  return v;
}

json semilinear_to_json(const SemilinearSet& s) {
  json comps = json::array();
  for (const LinearSet& c : s.components()) {
    json periods = json::array();
    for (const Vec& p : c.periods) periods.push_back(vec_to_json(p));
    comps.push_back({{"base", vec_to_json(c.base)}, {"periods", periods}});
  }
  return {{"dim", s.dim()}, {"components", comps}};
}

SemilinearSet semilinear_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim")) throw ParseError("semilinear set needs a dim field");
  int dim = j.at("dim").get<int>();
  SemilinearSet s(dim);
  for (const auto& c : j.value("components", json::array())) {
    Vec base = vec_from_json(c.at("base"));
    std::vector<Vec> periods;
    for (const auto& p : c.value("periods", json::array())) periods.push_back(vec_from_json(p));
    if (static_cast<int>(base.size()) != dim) throw ParseError("component dimension mismatch");
    s.add_component(LinearSet(std::move(base), std::move(periods)));
  }
  return s;
}

void automaton_to_json(const Automaton& a, json& j) {
  j["states"] = a.num_states();
  json alpha = json::array();
  for (char c : a.alphabet()) alpha.push_back(std::string(1, c));
  j["alphabet"] = alpha;
  j["initial"] = a.initial();
  j["finals"] = a.finals();
  json ts = json::array();
  for (const Transition& t : a.transitions()) {
    ts.push_back({{"from", t.from},
                  {"label", t.is_epsilon() ? std::string() : std::string(1, *t.label)},
                  {"to", t.to}});
  }
  j["transitions"] = ts;
}

Automaton automaton_from_json(const json& j) {
  try {
    int states = j.at("states").get<int>();
    std::vector<char> alphabet;
    for (const auto& s : j.at("alphabet")) {
      std::string letter = s.get<std::string>();
      if (letter.size() != 1) throw ParseError("alphabet letters must be single characters");
      alphabet.push_back(letter[0]);
    }
    StateId initial = j.at("initial").get<StateId>();
    std::vector<StateId> finals = j.at("finals").get<std::vector<StateId>>();
    std::vector<Transition> transitions;
    bool has_eps = false;
    for (const auto& t : j.at("transitions")) {
      std::string label = t.at("label").get<std::string>();
      if (label.size() > 1) throw ParseError("transition labels must be single characters");
      std::optional<char> l;
      if (label.empty())
        has_eps = true;
      else
        l = label[0];
      transitions.push_back({t.at("from").get<StateId>(), l, t.at("to").get<StateId>()});
    }
    return Automaton(states, std::move(alphabet), initial, std::move(finals),
                     std::move(transitions), has_eps);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad automaton: ") + e.what());
  } catch (const DimensionError& e) {
    throw ParseError(std::string("bad automaton: ") + e.what());
  }
}

json ca_to_json(const Ca& m, bool with_type) {
  json j;
  if (with_type) j["type"] = m.has_epsilon() ? "epsca" : "ca";
  automaton_to_json(m.automaton, j);
  j["constraint"] = semilinear_to_json(m.constraint);
  return j;
}

Ca ca_from_json(const json& j) {
  Automaton a = automaton_from_json(j);
  SemilinearSet c = semilinear_from_json(j.at("constraint"));
  try {
    return Ca(std::move(a), std::move(c));
  } catch (const DimensionError& e) {
    throw ParseError(std::string("bad CA: ") + e.what());
  }
}

}  // namespace

ModelKind model_kind(const Model& m) {
  struct Visitor {
    ModelKind operator()(const Pa&) const { return ModelKind::Pa; }
    ModelKind operator()(const Ca& c) const {
      return c.has_epsilon() ? ModelKind::EpsCa : ModelKind::Ca;
    }
    ModelKind operator()(const DetApa&) const { return ModelKind::DetApa; }
    ModelKind operator()(const BslLanguage&) const { return ModelKind::Bsl; }
    ModelKind operator()(const Cqdd&) const { return ModelKind::Cqdd; }
  };
  return std::visit(Visitor{}, m);
}

const char* model_kind_name(ModelKind k) {
  switch (k) {
    case ModelKind::Pa:
      return "pa";
    case ModelKind::Ca:
      return "ca";
    case ModelKind::EpsCa:
      return "epsca";
    case ModelKind::DetApa:
      return "detapa";
    case ModelKind::Bsl:
      return "bsl";
    case ModelKind::Cqdd:
      return "cqdd";
  }
  return "unknown";
}

Model load_model(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("model file must hold a JSON object");

  std::string type = j.value("type", std::string());
  if (type.empty()) {
    if (j.contains("socle"))
      type = "bsl";
    else if (j.contains("affine"))
      type = "detapa";
    else if (j.contains("vectors"))
      type = "pa";
    else if (j.contains("components"))
      type = "cqdd";
    else if (j.contains("transitions"))
      type = "ca";
    else
      throw ParseError("cannot determine the model kind");
  }

  try {
    if (type == "bsl") {
      std::vector<std::string> words;
      for (const auto& w : j.at("socle")) words.push_back(w.get<std::string>());
      return BslLanguage(Socle(std::move(words)), semilinear_from_json(j.at("iteration_set")));
    }
    if (type == "pa") {
      Automaton a = automaton_from_json(j);
      int dim = j.at("dim").get<int>();
      std::vector<Vec> vectors;
      for (const auto& v : j.at("vectors")) vectors.push_back(vec_from_json(v));
      return Pa(std::move(a), dim, std::move(vectors), semilinear_from_json(j.at("constraint")));
    }
    if (type == "ca" || type == "epsca") return ca_from_json(j);
    if (type == "detapa") {
      Automaton a = automaton_from_json(j);
      int dim = j.at("dim").get<int>();
      int nd = a.num_transitions();
      std::vector<AffineFn> affine(nd, AffineFn::identity(dim));
      std::vector<bool> seen(nd, false);
      for (const auto& f : j.at("affine")) {
        int t = f.at("t").get<int>();
        if (t < 0 || t >= nd || seen[t]) throw ParseError("bad affine transition index");
        seen[t] = true;
        json mj = f.at("M");
        IntMatrix m(dim, dim);
        if (static_cast<int>(mj.size()) != dim) throw ParseError("affine matrix row count");
        for (int r = 0; r < dim; ++r) {
          Vec row = vec_from_json(mj.at(r));
          if (static_cast<int>(row.size()) != dim) throw ParseError("affine matrix column count");
          for (int c = 0; c < dim; ++c) m.at(r, c) = row[c];
        }
        affine[t] = AffineFn(std::move(m), vec_from_json(f.at("v")));
      }
      for (bool s : seen)
        if (!s) throw ParseError("affine map missing for some transition");
      return DetApa(std::move(a), std::move(affine), semilinear_from_json(j.at("constraint")));
    }
    if (type == "cqdd") {
      Cqdd out;
      for (const auto& c : j.at("components")) out.components.emplace_back(ca_from_json(c));
      return out;
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad model: ") + e.what());
  } catch (const DimensionError& e) {
    throw ParseError(std::string("bad model: ") + e.what());
  }
  throw ParseError("unknown model type: " + type);
}

Model load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_model(ss.str());
}

std::string save_model(const Model& m) {
  struct Visitor {
    json operator()(const Pa& p) const {
      json j;
      j["type"] = "pa";
      automaton_to_json(p.automaton, j);
      j["dim"] = p.dim;
      json vs = json::array();
      for (const Vec& v : p.vectors) vs.push_back(vec_to_json(v));
      j["vectors"] = vs;
      j["constraint"] = semilinear_to_json(p.constraint);
      return j;
    }
    json operator()(const Ca& c) const { return ca_to_json(c, true); }
    json operator()(const DetApa& d) const {
      json j;
      j["type"] = "detapa";
      automaton_to_json(d.automaton, j);
      j["dim"] = d.dim();
      json fs = json::array();
      for (int t = 0; t < d.automaton.num_transitions(); ++t) {
        json rows = json::array();
        for (int r = 0; r < d.dim(); ++r) {
          json row = json::array();
          for (int c = 0; c < d.dim(); ++c) row.push_back(d.affine[t].m.at(r, c));
          rows.push_back(row);
        }
        fs.push_back({{"t", t}, {"M", rows}, {"v", vec_to_json(d.affine[t].v)}});
      }
      j["affine"] = fs;
      j["constraint"] = semilinear_to_json(d.constraint);
      return j;
    }
    json operator()(const BslLanguage& b) const {
      return {{"type", "bsl"},
              {"socle", b.socle.words},
              {"iteration_set", semilinear_to_json(b.iteration_set)}};
    }
    json operator()(const Cqdd& q) const {
      json comps = json::array();
      for (const FlatDetCa& c : q.components) comps.push_back(ca_to_json(c.ca, false));
      return {{"type", "cqdd"}, {"components", comps}};
    }
  };
  return std::visit(Visitor{}, m).dump(2) + "\n";
}

void save_model_file(const Model& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << save_model(m);
}

std::vector<char> model_alphabet(const Model& m) {
  struct Visitor {
    std::vector<char> operator()(const Pa& p) const { return p.automaton.alphabet(); }
    std::vector<char> operator()(const Ca& c) const { return c.automaton.alphabet(); }
    std::vector<char> operator()(const DetApa& d) const { return d.automaton.alphabet(); }
    std::vector<char> operator()(const BslLanguage& b) const { return b.socle.letters(); }
    std::vector<char> operator()(const Cqdd& q) const {
      std::set<char> set;
      for (const FlatDetCa& c : q.components) {
        const auto& a = c.ca.automaton.alphabet();
        set.insert(a.begin(), a.end());
      }
      return std::vector<char>(set.begin(), set.end());
    }
  };
  return std::visit(Visitor{}, m);
}

bool model_accepts(const Model& m, std::string_view w, const Caps& caps) {
  struct Visitor {
    std::string_view w;
    const Caps& caps;
    bool operator()(const Pa& p) const { return pa_accepts(p, w); }
    bool operator()(const Ca& c) const { return ca_accepts(c, w, caps); }
    bool operator()(const DetApa& d) const { return apa_accepts(d, w); }
    bool operator()(const BslLanguage& b) const { return bsl_member(b, w); }
    bool operator()(const Cqdd& q) const { return cqdd_accepts(q, w, caps); }
  };
  return std::visit(Visitor{w, caps}, m);
}

}  // namespace parikh
