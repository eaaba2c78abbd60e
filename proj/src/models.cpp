// SPDX-License-Identifier: Apache-2.0
#include "models.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace parikh {

Pa::Pa(Automaton a, int d, std::vector<Vec> vs, SemilinearSet c)
    : automaton(std::move(a)), dim(d), vectors(std::move(vs)), constraint(std::move(c)) {
  if (automaton.epsilon_allowed()) throw DimensionError("PA automaton must be epsilon-free");
  if (vectors.size() != static_cast<std::size_t>(automaton.num_transitions()))
    throw DimensionError("PA needs one vector per transition");
  for (const Vec& v : vectors)
    if (static_cast<int>(v.size()) != dim) throw DimensionError("PA vector dimension mismatch");
  if (constraint.dim() != dim) throw DimensionError("PA constraint dimension mismatch");
}

IntMatrix Pa::vector_matrix() const {
  IntMatrix m(dim, automaton.num_transitions());
  for (int t = 0; t < automaton.num_transitions(); ++t)
    for (int i = 0; i < dim; ++i) m.at(i, t) = vectors[t][i];
  return m;
}

Ca::Ca(Automaton a, SemilinearSet c) : automaton(std::move(a)), constraint(std::move(c)) {
  if (constraint.dim() != automaton.num_transitions())
    throw DimensionError("CA constraint dimension must equal the transition count");
}

bool Ca::has_epsilon() const {
  for (const Transition& t : automaton.transitions())
    if (t.is_epsilon()) return true;
  return false;
}

bool pa_is_deterministic(const Pa& m) {
  std::set<std::pair<StateId, char>> seen;
  for (const Transition& t : m.automaton.transitions())
    if (!seen.insert({t.from, *t.label}).second) return false;
  return true;
}

bool pa_accepts(const Pa& m, std::string_view w) {
  for (const Path& run : accepting_runs(m.automaton, w, 0)) {
    Vec sum(m.dim, 0);
    for (int id : run) vec_add_inplace(sum, m.vectors[id]);
    if (sl_member(m.constraint, sum)) return true;
  }
  return false;
}

namespace {

// Product of a (|w|+1)-state line automaton with the CA's automaton;
// epsilon-moves advance only the CA side. Transition ids map back to the
// CA's ids through `origin`.
struct LineProduct {
  Automaton automaton;
  std::vector<int> origin;
};

LineProduct line_product(const Automaton& a, std::string_view w) {
  int n = a.num_states();
  int levels = static_cast<int>(w.size()) + 1;
  auto node = [&](int level, StateId q) { return level * n + q; };
  std::vector<Transition> transitions;
  std::vector<int> origin;
  for (int level = 0; level < levels; ++level) {
    for (int id = 0; id < a.num_transitions(); ++id) {
      const Transition& t = a.transition(id);
      if (t.is_epsilon()) {
        transitions.push_back({node(level, t.from), t.label, node(level, t.to)});
        origin.push_back(id);
      } else if (level < levels - 1 && *t.label == w[level]) {
        transitions.push_back({node(level, t.from), t.label, node(level + 1, t.to)});
        origin.push_back(id);
      }
    }
  }
  std::vector<StateId> finals;
  for (StateId f : a.finals()) finals.push_back(node(levels - 1, f));
  Automaton prod(levels * n, a.alphabet(), node(0, a.initial()), std::move(finals),
                 std::move(transitions), a.epsilon_allowed());
  return {std::move(prod), std::move(origin)};
}

}  // namespace

bool ca_accepts(const Ca& m, std::string_view w, const Caps& caps) {
  if (!m.has_epsilon()) {
    for (const Path& run : accepting_runs(m.automaton, w, 0))
      if (sl_member(m.constraint, path_counts(m.automaton, run))) return true;
    return false;
  }
  LineProduct prod = line_product(m.automaton, w);
  SemilinearSet image = runs_parikh_image(prod.automaton, std::nullopt, caps);
  if (image.is_empty()) return false;
  // Transport product transition counts to original transition ids.
  IntMatrix transport(m.automaton.num_transitions(), prod.automaton.num_transitions());
  for (int pt = 0; pt < prod.automaton.num_transitions(); ++pt)
    transport.at(prod.origin[pt], pt) = 1;
  SemilinearSet counts = sl_linear_image(image, transport);
  // Nonemptiness of counts /\ constraint; point components shortcut to a
  // membership test.
  for (const LinearSet& c : counts.components()) {
    if (c.periods.empty()) {
      if (sl_member(m.constraint, c.base)) return true;
    } else {
      SemilinearSet one(counts.dim());
      one.add_component(c);
      if (!sl_intersect(one, m.constraint, caps).is_empty()) return true;
    }
  }
  return false;
}

Ca pa_to_ca(const Pa& m, const Caps& caps) {
  SemilinearSet pulled = sl_linear_preimage(m.constraint, m.vector_matrix(),
                                            m.automaton.num_transitions(), caps);
  return Ca(m.automaton, std::move(pulled));
}

Pa ca_to_pa(const Ca& m) {
  if (m.has_epsilon()) throw DimensionError("ca_to_pa needs an epsilon-free CA");
  int d = m.automaton.num_transitions();
  std::vector<Vec> vectors;
  for (int t = 0; t < d; ++t) vectors.push_back(unit_vec(d, t));
  return Pa(m.automaton, d, std::move(vectors), m.constraint);
}

bool pa_empty(const Pa& m, const Caps& caps) {
  SemilinearSet runs = runs_parikh_image(m.automaton, std::nullopt, caps);
  if (runs.is_empty()) return true;
  SemilinearSet sums = sl_linear_image(runs, m.vector_matrix());
  return sl_intersect(sums, m.constraint, caps).is_empty();
}

bool check_constraint_determinism(const Ca& m, int length_bound) {
  const std::vector<char>& sigma = m.automaton.alphabet();
  int eps_cap = m.automaton.num_states();
  std::string word;
  auto rec = [&](auto&& self) -> bool {
    std::vector<Path> runs = accepting_runs(m.automaton, word, eps_cap);
    bool first = true, verdict = false;
    for (const Path& run : runs) {
      bool in = sl_member(m.constraint, path_counts(m.automaton, run));
      if (first) {
        verdict = in;
        first = false;
      } else if (in != verdict) {
        return false;
      }
    }
    if (static_cast<int>(word.size()) == length_bound) return true;
    for (char a : sigma) {
      word.push_back(a);
      if (!self(self)) return false;
      word.pop_back();
    }
    return true;
  };
  return rec(rec);
}

}  // namespace parikh
