// SPDX-License-Identifier: Apache-2.0
#include "apa.hpp"

#include <algorithm>
#include <unordered_set>

namespace parikh {

AffineFn::AffineFn(IntMatrix mm, Vec vv) : m(std::move(mm)), v(std::move(vv)) {
  if (m.rows() != m.cols()) throw DimensionError("affine matrix must be square");
  if (m.rows() != static_cast<int>(v.size())) throw DimensionError("affine dimensions differ");
}

AffineFn AffineFn::identity(int dim) { return AffineFn(IntMatrix::identity(dim), Vec(dim, 0)); }

Vec AffineFn::apply(const Vec& x) const { return vec_add(m.apply(x), v); }

AffineFn affine_compose(const AffineFn& f, const AffineFn& g) {
  if (f.dim() != g.dim()) throw DimensionError("affine dimensions differ");
  return AffineFn(g.m.mul(f.m), vec_add(g.m.apply(f.v), g.v));
}

DetApa::DetApa(Automaton a, std::vector<AffineFn> u, SemilinearSet c, Provenance p)
    : automaton(std::move(a)), affine(std::move(u)), constraint(std::move(c)), provenance(p) {
  if (!is_deterministic(automaton)) throw DimensionError("DetAPA automaton must be deterministic");
  if (affine.size() != static_cast<std::size_t>(automaton.num_transitions()))
    throw DimensionError("DetAPA needs one affine function per transition");
  for (const AffineFn& f : affine)
    if (f.dim() != constraint.dim()) throw DimensionError("DetAPA affine dimension mismatch");
}

bool apa_accepts(const DetApa& m, std::string_view w) {
  StateId q = m.automaton.initial();
  Vec x(m.dim(), 0);
  for (char ch : w) {
    int found = -1;
    for (int id : m.automaton.out(q)) {
      if (*m.automaton.transition(id).label == ch) {
        found = id;
        break;
      }
    }
    if (found < 0) return false;
    x = m.affine[found].apply(x);
    q = m.automaton.transition(found).to;
  }
  return m.automaton.is_final(q) && sl_member(m.constraint, x);
}

std::vector<IntMatrix> monoid_closure(const DetApa& m, Int cap) {
  std::vector<IntMatrix> gens;
  {
    std::unordered_set<IntMatrix, IntMatrixHash> seen;
    for (const AffineFn& f : m.affine)
      if (seen.insert(f.m).second) gens.push_back(f.m);
  }
  std::unordered_set<IntMatrix, IntMatrixHash> closure;
  std::vector<IntMatrix> order;
  std::vector<IntMatrix> frontier;
  auto add = [&](IntMatrix mat) {
    if (closure.insert(mat).second) {
      if (static_cast<Int>(closure.size()) > cap)
        throw MonoidCapExceeded("matrix monoid closure exceeded the cap");
      order.push_back(mat);
      frontier.push_back(std::move(mat));
    }
  };
  add(IntMatrix::identity(m.dim()));
  for (const IntMatrix& g : gens) add(g);
  while (!frontier.empty()) {
    IntMatrix cur = std::move(frontier.back());
    frontier.pop_back();
    for (const IntMatrix& g : gens) add(cur.mul(g));
  }
  return order;
}

namespace {

// Per-(state, letter) shortest witness paths of the source automaton,
// computed once.
struct WitnessTable {
  // paths[p][letter][q]: lexicographically smallest shortest p -> q path
  // labeled exactly the letter, when it exists.
  std::vector<std::vector<std::vector<std::optional<Path>>>> paths;
};

WitnessTable witness_table(const Automaton& a) {
  int n = a.num_states();
  const std::vector<char>& sigma = a.alphabet();
  WitnessTable t;
  t.paths.assign(n, std::vector<std::vector<std::optional<Path>>>(
                        sigma.size(), std::vector<std::optional<Path>>(n)));
  for (int p = 0; p < n; ++p)
    for (std::size_t li = 0; li < sigma.size(); ++li)
      for (int q = 0; q < n; ++q) t.paths[p][li][q] = shortest_labeled_path(a, p, q, sigma[li]);
  return t;
}

}  // namespace

DetApa epsca_to_detapa(const Ca& m, int cd_bound, bool trusted, const Caps& caps) {
  if (!trusted && !check_constraint_determinism(m, cd_bound))
    throw ConstraintDeterminismUnverified(
        "constraint-determinism did not hold up to the verification bound");

  const Automaton& a = m.automaton;
  int nq = a.num_states();
  int nd = a.num_transitions();
  int dim = nq * nd + 1;
  const std::vector<char>& sigma = a.alphabet();
  auto letter_index = [&](char ch) {
    return std::lower_bound(sigma.begin(), sigma.end(), ch) - sigma.begin();
  };

  SubsetAutomaton det = subset_automaton(a);
  WitnessTable wit = witness_table(a);

  // Counter layout: block q occupies coordinates [q*nd, (q+1)*nd); the last
  // coordinate holds 1 + (smallest final member) for accepting subsets.
  std::vector<AffineFn> affine;
  for (int id = 0; id < det.automaton.num_transitions(); ++id) {
    const Transition& tbar = det.automaton.transition(id);
    const std::vector<StateId>& from_set = det.subsets[tbar.from];
    const std::vector<StateId>& to_set = det.subsets[tbar.to];
    auto li = letter_index(*tbar.label);

    IntMatrix mat(dim, dim);
    Vec shift(dim, 0);
    for (StateId q : to_set) {
      // Smallest source state with a witness path to q.
      StateId p = -1;
      for (StateId cand : from_set)
        if (wit.paths[cand][li][q].has_value()) {
          p = cand;
          break;
        }
      if (p < 0) throw Error("subset transition without witness");
      const Path& zeta = *wit.paths[p][li][q];
      // Transfer block p to block q and add the path's Parikh image.
      for (int e = 0; e < nd; ++e) mat.at(q * nd + e, p * nd + e) = 1;
      for (int e : zeta) shift[q * nd + e] += 1;
    }
    StateId smallest_final = -1;
    for (StateId q : to_set)
      if (a.is_final(q)) {
        smallest_final = q;
        break;
      }
    shift[dim - 1] = smallest_final >= 0 ? smallest_final + 1 : 0;
    affine.emplace_back(std::move(mat), std::move(shift));
  }

  // Acceptance set: one block-embedded copy of the constraint per possible
  // smallest final state, with the last coordinate pinned and every other
  // coordinate free; plus the zero vector if the constraint has it.
  SemilinearSet accept(dim);
  for (StateId q = 0; q < nq; ++q) {
    if (!a.is_final(q)) continue;
    for (const LinearSet& c : m.constraint.components()) {
      Vec base(dim, 0);
      for (int e = 0; e < nd; ++e) base[q * nd + e] = c.base[e];
      base[dim - 1] = q + 1;
      std::vector<Vec> periods;
      for (const Vec& p : c.periods) {
        Vec per(dim, 0);
        for (int e = 0; e < nd; ++e) per[q * nd + e] = p[e];
        periods.push_back(std::move(per));
      }
      for (int i = 0; i < dim - 1; ++i)
        if (i / nd != q) periods.push_back(unit_vec(dim, i));
      accept.add_component(LinearSet(std::move(base), std::move(periods)));
    }
  }
  if (sl_member(m.constraint, Vec(nd, 0)))
    accept.add_component(LinearSet(Vec(dim, 0), {}));

  (void)caps;
  return DetApa(std::move(det.automaton), std::move(affine), std::move(accept),
                DetApa::Provenance{trusted, cd_bound});
}

}  // namespace parikh
