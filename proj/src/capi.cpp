// SPDX-License-Identifier: Apache-2.0
#include "parikh_kit.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <json.hpp>
#include <set>
#include <sstream>

#include "dot.hpp"
#include "json_io.hpp"

using namespace parikh;

struct parikh_model {
  Model model;
};

namespace {

thread_local std::string g_last_error;

parikh_status fail(parikh_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

parikh_status run(const std::function<void()>& body) {
  try {
    body();
    return PARIKH_OK;
  } catch (const ParseError& e) {
    return fail(PARIKH_ERR_PARSE, e.what());
  } catch (const SolverCapExceeded& e) {
    return fail(PARIKH_ERR_SOLVER_CAP, e.what());
  } catch (const MonoidCapExceeded& e) {
    return fail(PARIKH_ERR_MONOID_CAP, e.what());
  } catch (const SupportEnumerationCapExceeded& e) {
    return fail(PARIKH_ERR_SUPPORT_CAP, e.what());
  } catch (const NotBoundedError& e) {
    return fail(PARIKH_ERR_NOT_BOUNDED, e.what());
  } catch (const SocleViolation& e) {
    return fail(PARIKH_ERR_SOCLE, e.what());
  } catch (const ConstraintDeterminismUnverified& e) {
    return fail(PARIKH_ERR_CONSTRAINT_DETERMINISM, e.what());
  } catch (const OverflowError& e) {
    return fail(PARIKH_ERR_OVERFLOW, e.what());
  } catch (const DimensionError& e) {
    return fail(PARIKH_ERR_DIMENSION, e.what());
  } catch (const Error& e) {
    return fail(PARIKH_ERR_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return fail(PARIKH_ERR_INTERNAL, e.what());
  }
}

Caps caps_from_config(const parikh_config* config) {
  Caps caps;
  if (!config) return caps;
  if (config->solver_cap > 0) caps.solver_cap = config->solver_cap;
  if (config->monoid_cap > 0) caps.monoid_cap = config->monoid_cap;
  if (config->support_cap > 0) caps.support_cap = config->support_cap;
  return caps;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Socle parse_socle(const char* text) {
  std::vector<std::string> words;
  std::string cur;
  for (const char* p = text; *p; ++p) {
    if (*p == ',') {
      words.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(*p);
    }
  }
  words.push_back(cur);
  return Socle(std::move(words));
}

nlohmann::json automaton_report(const Automaton& a) {
  return {{"states", a.num_states()}, {"transitions", a.num_transitions()}};
}

}  // namespace

extern "C" {

void parikh_config_defaults(parikh_config* config) {
  if (!config) return;
  const Caps& caps = default_caps();
  config->solver_cap = caps.solver_cap;
  config->monoid_cap = caps.monoid_cap;
  config->support_cap = caps.support_cap;
  config->cd_bound = 8;
  config->seed = 0;
}

parikh_status parikh_config_env(parikh_config* config) {
  if (!config) return fail(PARIKH_ERR_INVALID_ARGUMENT, "null config");
  const char* env = std::getenv("PARIKH_KIT_CAPS");
  if (!env) return PARIKH_OK;
  std::stringstream ss(env);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      return fail(PARIKH_ERR_INVALID_ARGUMENT, "PARIKH_KIT_CAPS entries must be key=value");
    std::string key = item.substr(0, eq);
    long long value = 0;
    try {
      value = std::stoll(item.substr(eq + 1));
    } catch (const std::exception&) {
      return fail(PARIKH_ERR_INVALID_ARGUMENT, "PARIKH_KIT_CAPS value for " + key);
    }
    if (value <= 0)
      return fail(PARIKH_ERR_INVALID_ARGUMENT, "PARIKH_KIT_CAPS caps must be positive");
    if (key == "solver")
      config->solver_cap = value;
    else if (key == "monoid")
      config->monoid_cap = value;
    else if (key == "support")
      config->support_cap = static_cast<int>(value);
    else if (key == "cd")
      config->cd_bound = static_cast<int>(value);
    else
      return fail(PARIKH_ERR_INVALID_ARGUMENT, "PARIKH_KIT_CAPS unknown key " + key);
  }
  return PARIKH_OK;
}

const char* parikh_last_error(void) { return g_last_error.c_str(); }

parikh_status parikh_model_from_json(const char* text, parikh_model** out) {
  if (!text || !out) return fail(PARIKH_ERR_INVALID_ARGUMENT, "null argument");
  return run([&] { *out = new parikh_model{load_model(text)}; });
}

parikh_status parikh_model_from_file(const char* path, parikh_model** out) {
  if (!path || !out) return fail(PARIKH_ERR_INVALID_ARGUMENT, "null argument");
  return run([&] { *out = new parikh_model{load_model_file(path)}; });
}

void parikh_model_free(parikh_model* model) { delete model; }

parikh_model_kind parikh_model_get_kind(const parikh_model* model) {
  switch (model_kind(model->model)) {
    case ModelKind::Pa:
      return PARIKH_MODEL_PA;
    case ModelKind::Ca:
      return PARIKH_MODEL_CA;
    case ModelKind::EpsCa:
      return PARIKH_MODEL_EPSCA;
    case ModelKind::DetApa:
      return PARIKH_MODEL_DETAPA;
    case ModelKind::Bsl:
      return PARIKH_MODEL_BSL;
    case ModelKind::Cqdd:
      return PARIKH_MODEL_CQDD;
  }
  return PARIKH_MODEL_PA;
}

parikh_status parikh_model_member(const parikh_model* model, const char* word,
                                  const parikh_config* config, int* accepted) {
  if (!model || !word || !accepted) return fail(PARIKH_ERR_INVALID_ARGUMENT, "null argument");
  return run([&] { *accepted = model_accepts(model->model, word, caps_from_config(config)) ? 1 : 0; });
}

parikh_status parikh_model_pipeline(const parikh_model* model, const char* socle,
                                    const parikh_config* config, parikh_model** cqdd_out,
                                    char** report_json_out) {
  if (!model || !cqdd_out) return fail(PARIKH_ERR_INVALID_ARGUMENT, "null argument");
  return run([&] {
    Caps caps = caps_from_config(config);
    nlohmann::json report;
    Cqdd result = [&]() -> Cqdd {
      if (const auto* bsl = std::get_if<BslLanguage>(&model->model)) {
        Ca epsca = canonical_epsca(*bsl, caps);
        report["canonical_epsca"] = automaton_report(epsca.automaton);
        DetApa apa = epsca_to_detapa(epsca, 0, /*trusted=*/true, caps);
        report["detapa"] = automaton_report(apa.automaton);
        report["detapa"]["dimension"] = apa.dim();
        return detapa_to_cqdd(apa, caps);
      }
      if (const auto* pa = std::get_if<Pa>(&model->model)) {
        if (!socle || !*socle)
          throw DimensionError("pipeline on a PA needs a socle argument");
        Socle s = parse_socle(socle);
        SemilinearSet e = pa_iteration_set(*pa, s, caps);
        report["iteration_set"] = {{"dim", e.dim()},
                                   {"components", e.components().size()}};
        BslLanguage b(s, std::move(e));
        Ca epsca = canonical_epsca(b, caps);
        report["canonical_epsca"] = automaton_report(epsca.automaton);
        DetApa apa = epsca_to_detapa(epsca, 0, /*trusted=*/true, caps);
        report["detapa"] = automaton_report(apa.automaton);
        report["detapa"]["dimension"] = apa.dim();
        return detapa_to_cqdd(apa, caps);
      }
      throw DimensionError("pipeline input must be a BSL or PA model");
    }();
    report["cqdd"] = {{"components", result.components.size()}};
    *cqdd_out = new parikh_model{Model(std::move(result))};
    if (report_json_out) *report_json_out = dup_string(report.dump(2) + "\n");
  });
}

parikh_status parikh_model_crosscheck(const parikh_model* a, const parikh_model* b, int max_len,
                                      const parikh_config* config, int* equal,
                                      char** counterexample_out) {
  if (!a || !b || !equal) return fail(PARIKH_ERR_INVALID_ARGUMENT, "null argument");
  return run([&] {
    Caps caps = caps_from_config(config);
    std::vector<char> sa = model_alphabet(a->model);
    std::vector<char> sb = model_alphabet(b->model);
    std::set<char> sset(sa.begin(), sa.end());
    for (char c : sb) sset.insert(c);
    std::vector<char> sigma(sset.begin(), sset.end());

    *equal = 1;
    std::string word;
    // Length-lexicographic sweep.
    auto rec = [&](auto&& self, int remaining) -> bool {
      if (remaining == 0) {
        bool in_a = model_accepts(a->model, word, caps);
        bool in_b = model_accepts(b->model, word, caps);
        if (in_a != in_b) {
          *equal = 0;
          if (counterexample_out) *counterexample_out = dup_string(word);
          return false;
        }
        return true;
      }
      for (char c : sigma) {
        word.push_back(c);
        bool ok = self(self, remaining - 1);
        word.pop_back();
        if (!ok) return false;
      }
      return true;
    };
    for (int len = 0; len <= max_len; ++len)
      if (!rec(rec, len)) break;
  });
}

parikh_status parikh_model_to_json(const parikh_model* model, char** out) {
  if (!model || !out) return fail(PARIKH_ERR_INVALID_ARGUMENT, "null argument");
  return run([&] { *out = dup_string(save_model(model->model)); });
}

parikh_status parikh_model_to_dot(const parikh_model* model, char** out) {
  if (!model || !out) return fail(PARIKH_ERR_INVALID_ARGUMENT, "null argument");
  return run([&] { *out = dup_string(dot_model(model->model)); });
}

void parikh_string_free(char* s) { std::free(s); }

}  // extern "C"
