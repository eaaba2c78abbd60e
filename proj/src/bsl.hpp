// SPDX-License-Identifier: Apache-2.0
#ifndef PARIKH_BSL_HPP
#define PARIKH_BSL_HPP

#include "models.hpp"

namespace parikh {

// A socle: the word list of a bounded language L subseteq w1*...wn*.
struct Socle {
  std::vector<std::string> words;

  Socle() = default;
  explicit Socle(std::vector<std::string> ws);
  int size() const { return static_cast<int>(words.size()); }
  std::vector<char> letters() const;
};

// A bounded semilinear language: socle plus iteration set over N^n.
struct BslLanguage {
  Socle socle;
  SemilinearSet iteration_set{0};

  BslLanguage(Socle s, SemilinearSet e);
};

// Some decomposition w = w1^i1 ... wn^in has (i1..in) in the iteration set.
bool bsl_member(const BslLanguage& b, std::string_view w);

// The automaton of n disjoint cycles labeled w1..wn whose anchors are chained
// by epsilon transitions into the final last anchor; accepts w1*...wn*.
// first_cycle_transitions receives the id of t_i per cycle when non-null.
// extra_letters widens the alphabet (the complement construction needs the
// full alphabet of the checked machine).
Automaton socle_automaton(const Socle& s, std::vector<int>* first_cycle_transitions = nullptr,
                          const std::vector<char>& extra_letters = {});

// The canonical eps-CA of the language: cycle automaton plus the constraint
// (#t_1..#t_n) in E pulled back through the coordinate projection.
Ca canonical_epsca(const BslLanguage& b, const Caps& caps = default_caps());

// L(m) subseteq w1*...wn*, decided through the complement DFA of the socle
// product and a PA emptiness check.
bool pa_socle_check(const Pa& m, const Socle& s, const Caps& caps = default_caps());

// Iter_S(L(m)): lift the PA to the socle alphabet (one transition per w_i
// block path), product with the order automaton for a1*...an*, then map the
// constrained Parikh image of runs to letter counts.
SemilinearSet pa_iteration_set(const Pa& m, const Socle& s, const Caps& caps = default_caps());

}  // namespace parikh

#endif
