// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "oracles.hpp"

using namespace parikh;
using namespace parikh::testing;

namespace {

BslLanguage anbn_bsl() {
  SemilinearSet e(2);
  e.add_component(LinearSet({0, 0}, {{1, 1}}));
  return BslLanguage(Socle({"a", "b"}), std::move(e));
}

IntMatrix random_matrix(std::mt19937& rng, int dim, Int max_entry) {
  IntMatrix m(dim, dim);
  std::uniform_int_distribution<Int> dist(0, max_entry);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m.at(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("affine_compose examples") {
  std::mt19937 rng(53);
  AffineFn id = AffineFn::identity(2);
  AffineFn g(random_matrix(rng, 2, 3), random_vec(rng, 2, 3));
  AffineFn idg = affine_compose(id, g);
  for (Int x = 0; x <= 5; ++x)
    for (Int y = 0; y <= 5; ++y) CHECK(idg.apply({x, y}) == g.apply({x, y}));

  AffineFn f1(IntMatrix::identity(2), {1, 2});
  AffineFn f2(IntMatrix::identity(2), {3, 0});
  AffineFn sum = affine_compose(f1, f2);
  CHECK(sum.m == IntMatrix::identity(2));
  CHECK(sum.v == Vec{4, 2});

  for (int round = 0; round < 20; ++round) {
    AffineFn a(random_matrix(rng, 2, 3), random_vec(rng, 2, 3));
    AffineFn b(random_matrix(rng, 2, 3), random_vec(rng, 2, 3));
    AffineFn ab = affine_compose(a, b);
    Vec x = random_vec(rng, 2, 5);
    CHECK(ab.apply(x) == b.apply(a.apply(x)));
  }
}

TEST_CASE("affine_compose is associative") {
  std::mt19937 rng(59);
  for (int round = 0; round < 10; ++round) {
    AffineFn a(random_matrix(rng, 3, 2), random_vec(rng, 3, 2));
    AffineFn b(random_matrix(rng, 3, 2), random_vec(rng, 3, 2));
    AffineFn c(random_matrix(rng, 3, 2), random_vec(rng, 3, 2));
    AffineFn left = affine_compose(affine_compose(a, b), c);
    AffineFn right = affine_compose(a, affine_compose(b, c));
    for (int i = 0; i < 10; ++i) {
      Vec x = random_vec(rng, 3, 4);
      CHECK(left.apply(x) == right.apply(x));
    }
  }
}

TEST_CASE("apa_accepts basics") {
  // DFA behavior with identity functions and 0 in C.
  Automaton a(2, {'a', 'b'}, 0, {1}, {{0, 'a', 1}, {1, 'b', 0}}, false);
  SemilinearSet c(1);
  c.add_component(LinearSet({0}, {{1}}));
  DetApa apa(a, {AffineFn::identity(1), AffineFn::identity(1)}, c);
  CHECK(apa_accepts(apa, "a"));
  CHECK_FALSE(apa_accepts(apa, "ab"));
  CHECK(apa_accepts(apa, "aba"));
  CHECK_FALSE(apa_accepts(apa, "b"));  // no run
  CHECK_FALSE(apa_accepts(apa, ""));   // initial not final
}

TEST_CASE("monoid_closure") {
  // All identity: {I}.
  Automaton a(1, {'a'}, 0, {0}, {{0, 'a', 0}}, false);
  SemilinearSet c(2);
  DetApa id_apa(a, {AffineFn::identity(2)}, c);
  CHECK(monoid_closure(id_apa, 100).size() == 1);

  // A strictly growing generator never saturates.
  IntMatrix grow(2, 2);
  grow.at(0, 0) = 1;
  grow.at(1, 0) = 1;
  grow.at(1, 1) = 1;
  DetApa grow_apa(a, {AffineFn(grow, {0, 0})}, c);
  CHECK_THROWS_AS(monoid_closure(grow_apa, 50), MonoidCapExceeded);

  // A permutation matrix of order 3 gives {I, P, P^2}.
  IntMatrix perm(3, 3);
  perm.at(0, 1) = 1;
  perm.at(1, 2) = 1;
  perm.at(2, 0) = 1;
  SemilinearSet c3(3);
  DetApa perm_apa(a, {AffineFn(perm, {0, 0, 0})}, c3);
  CHECK(monoid_closure(perm_apa, 100).size() == 3);
}

TEST_CASE("epsca_to_detapa on the canonical anbn eps-CA") {
  Ca ca = canonical_epsca(anbn_bsl());
  DetApa apa = epsca_to_detapa(ca, 8);
  CHECK(is_deterministic(apa.automaton));
  CHECK(apa.dim() == ca.automaton.num_states() * ca.automaton.num_transitions() + 1);

  for (const std::string& w : all_words({'a', 'b'}, 10))
    CHECK(apa_accepts(apa, w) == ca_accepts(ca, w));

  // Lemma-1 matrices: 0-1 with at most one nonzero per row, closed under
  // product.
  std::vector<IntMatrix> closure = monoid_closure(apa, 10000);
  for (const IntMatrix& m : closure) {
    for (int i = 0; i < m.rows(); ++i) {
      int nonzero = 0;
      for (int j = 0; j < m.cols(); ++j) {
        CHECK((m.at(i, j) == 0 || m.at(i, j) == 1));
        if (m.at(i, j) != 0) ++nonzero;
      }
      CHECK(nonzero <= 1);
    }
  }
}

TEST_CASE("epsca_to_detapa counter blocks track witness path counts") {
  Ca ca = canonical_epsca(anbn_bsl());
  const Automaton& a = ca.automaton;
  DetApa apa = epsca_to_detapa(ca, 8);
  SubsetAutomaton det = subset_automaton(a);
  int nd = a.num_transitions();

  for (const std::string& w : all_words({'a', 'b'}, 8)) {
    // Follow the subset automaton manually while evaluating the affine maps.
    StateId q = det.automaton.initial();
    Vec x(apa.dim(), 0);
    bool stuck = false;
    for (char ch : w) {
      int found = -1;
      for (int id : det.automaton.out(q))
        if (*det.automaton.transition(id).label == ch) found = id;
      if (found < 0) {
        stuck = true;
        break;
      }
      x = apa.affine[found].apply(x);
      q = det.automaton.transition(found).to;
    }
    if (stuck) continue;
    // Claim: for every member state, the counter block is the Parikh image
    // of some initial w-labeled path of the eps-automaton ending there.
    for (StateId member : det.subsets[q]) {
      Vec block(x.begin() + member * nd, x.begin() + (member + 1) * nd);
      bool matched = false;
      for (const Path& path : accepting_runs(
               Automaton(a.num_states(), a.alphabet(), a.initial(), {member},
                         a.transitions(), a.epsilon_allowed()),
               w, a.num_states()))
        if (path_counts(a, path) == block) matched = true;
      CHECK_MESSAGE(matched, "block of state ", member, " after ", w);
    }
  }
}

TEST_CASE("epsca_to_detapa round trips deterministic eps-free CA") {
  // a*b* DFA with counts constrained to equal a's and b's.
  Automaton a(2, {'a', 'b'}, 0, {0, 1}, {{0, 'a', 0}, {0, 'b', 1}, {1, 'b', 1}}, false);
  SemilinearSet c(3);
  c.add_component(LinearSet({0, 0, 0}, {{1, 1, 0}, {1, 0, 1}}));
  Ca ca(a, c);
  DetApa apa = epsca_to_detapa(ca, 8);
  for (const std::string& w : all_words({'a', 'b'}, 10))
    CHECK(apa_accepts(apa, w) == ca_accepts(ca, w));
}

TEST_CASE("epsca_to_detapa rejects unverified constraint-determinism") {
  Automaton par(2, {'a'}, 0, {1}, {{0, 'a', 1}, {0, 'a', 1}}, false);
  SemilinearSet c(2);
  c.add_component(LinearSet({1, 0}, {}));
  Ca ca(par, c);
  CHECK_THROWS_AS(epsca_to_detapa(ca, 3), ConstraintDeterminismUnverified);
  // The trusted escape hatch records its provenance.
  DetApa trusted = epsca_to_detapa(ca, 0, /*trusted=*/true);
  CHECK(trusted.provenance.trusted);
}

TEST_CASE("empty canonical language stays empty through the simulation") {
  BslLanguage b(Socle({"a", "b"}), SemilinearSet(2));
  Ca ca = canonical_epsca(b);
  DetApa apa = epsca_to_detapa(ca, 6);
  for (const std::string& w : all_words({'a', 'b'}, 6)) CHECK_FALSE(apa_accepts(apa, w));
}
