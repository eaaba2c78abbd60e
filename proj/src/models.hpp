// SPDX-License-Identifier: Apache-2.0
#ifndef PARIKH_MODELS_HPP
#define PARIKH_MODELS_HPP

#include <string_view>

#include "automaton.hpp"

namespace parikh {

// Parikh automaton: an epsilon-free automaton over letter/vector pairs and a
// semilinear constraint over N^dim. The pair alphabet is kept as the letter
// automaton plus one vector per transition.
struct Pa {
  Automaton automaton;
  int dim = 0;
  std::vector<Vec> vectors;  // one per transition, all of length dim
  SemilinearSet constraint{0};

  Pa(Automaton a, int d, std::vector<Vec> vs, SemilinearSet c);

  // Matrix whose column t is the vector of transition t (dim x |delta|).
  IntMatrix vector_matrix() const;
};

// Constrained automaton: constraint dimension equals the transition count.
// Epsilon transitions are permitted when the automaton allows them (eps-CA).
struct Ca {
  Automaton automaton;
  SemilinearSet constraint{0};

  Ca(Automaton a, SemilinearSet c);
  bool has_epsilon() const;
};

// At most one transition per (state, letter) pair.
bool pa_is_deterministic(const Pa& m);

// Exact membership by enumerating runs of length |w|.
bool pa_accepts(const Pa& m, std::string_view w);

// Exact membership. Epsilon-free: run enumeration. With epsilon: product
// with a line automaton for w, Parikh image, transport to original
// transition ids, intersect with the constraint, test nonemptiness.
bool ca_accepts(const Ca& m, std::string_view w, const Caps& caps = default_caps());

// Sigma-projection with the constraint pulled back through the vector matrix.
Ca pa_to_ca(const Pa& m, const Caps& caps = default_caps());

// Transition t relabeled (mu(t), e_t); the constraint is unchanged.
Pa ca_to_pa(const Ca& m);

// Emptiness of L(m): Parikh image of the runs, mapped to vector sums,
// intersected with the constraint.
bool pa_empty(const Pa& m, const Caps& caps = default_caps());

// Bounded verification that accepting runs with equal labels are not
// distinguished by the constraint (words up to length_bound, epsilon usage
// capped at |Q| per letter).
bool check_constraint_determinism(const Ca& m, int length_bound);

}  // namespace parikh

#endif
