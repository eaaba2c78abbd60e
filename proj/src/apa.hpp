// SPDX-License-Identifier: Apache-2.0
#ifndef PARIKH_APA_HPP
#define PARIKH_APA_HPP

#include "bsl.hpp"

namespace parikh {

// Total positive affine function x -> m.x + v.
struct AffineFn {
  IntMatrix m;
  Vec v;

  AffineFn() = default;
  AffineFn(IntMatrix mm, Vec vv);
  static AffineFn identity(int dim);
  int dim() const { return static_cast<int>(v.size()); }
  Vec apply(const Vec& x) const;
};

// (f <> g)(x) = g(f(x)).
AffineFn affine_compose(const AffineFn& f, const AffineFn& g);

// Deterministic affine Parikh automaton: a deterministic epsilon-free
// automaton, one affine function per transition, and a semilinear acceptance
// set for the value accumulated from 0.
struct DetApa {
  Automaton automaton;
  std::vector<AffineFn> affine;  // one per transition
  SemilinearSet constraint{0};

  // How constraint-determinism was established when this machine was built
  // from an eps-CA (bound of the verification, or a trusted construction).
  struct Provenance {
    bool trusted = false;
    int cd_bound = 0;
  } provenance;

  DetApa(Automaton a, std::vector<AffineFn> u, SemilinearSet c, Provenance p);
  DetApa(Automaton a, std::vector<AffineFn> u, SemilinearSet c)
      : DetApa(std::move(a), std::move(u), std::move(c), Provenance{}) {}
  int dim() const { return constraint.dim(); }
};

bool apa_accepts(const DetApa& m, std::string_view w);

// Closure of the transition matrices (plus identity) under product; throws
// MonoidCapExceeded if more than cap elements appear.
std::vector<IntMatrix> monoid_closure(const DetApa& m, Int cap);

// Lemma-1 style simulation of a constraint-deterministic eps-CA by a DetAPA
// over the subset automaton, with one counter block per source state plus a
// final-state component. The monoid of the result is finite.
DetApa epsca_to_detapa(const Ca& m, int cd_bound, bool trusted = false,
                       const Caps& caps = default_caps());

}  // namespace parikh

#endif
