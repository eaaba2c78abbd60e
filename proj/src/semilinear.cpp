// SPDX-License-Identifier: Apache-2.0
#include "semilinear.hpp"

#include <algorithm>
#include <unordered_set>

namespace parikh {

LinearSet::LinearSet(Vec b, std::vector<Vec> p) : base(std::move(b)) {
  for (Int x : base)
    if (x < 0) throw DimensionError("negative entry in base");
  for (Vec& v : p) {
    if (v.size() != base.size()) throw DimensionError("period dimension differs from base");
    for (Int x : v)
      if (x < 0) throw DimensionError("negative entry in period");
    if (!vec_is_zero(v)) periods.push_back(std::move(v));
  }
  std::sort(periods.begin(), periods.end());
  periods.erase(std::unique(periods.begin(), periods.end()), periods.end());
}

SemilinearSet::SemilinearSet(int dim, std::vector<LinearSet> components) : SemilinearSet(dim) {
  for (LinearSet& c : components) add_component(std::move(c));
}

void SemilinearSet::add_component(LinearSet c) {
  if (static_cast<int>(c.base.size()) != dim_)
    throw DimensionError("component dimension differs from set dimension");
  components_.push_back(std::move(c));
}

namespace {

// Does x - base decompose as a nonnegative combination of the periods?
// Depth-first over period coefficients; every period is nonzero, so each
// coefficient is bounded by the largest remaining coordinate.
bool component_member(const LinearSet& c, const Vec& x) {
  Vec rest(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    rest[i] = x[i] - c.base[i];
    if (rest[i] < 0) return false;
  }
  if (vec_is_zero(rest)) return true;
  if (c.periods.empty()) return false;

  // Memoize on (period index, remaining target) packed into one vector.
  std::unordered_set<Vec, VecHash> visited;

  auto rec = [&](auto&& self, std::size_t idx, Vec& r) -> bool {
    if (vec_is_zero(r)) return true;
    if (idx == c.periods.size()) return false;
    Vec key = r;
    key.push_back(static_cast<Int>(idx));
    if (!visited.insert(key).second) return false;
    const Vec& p = c.periods[idx];
    // Coefficient 0 first, then keep subtracting p while it fits.
    if (self(self, idx + 1, r)) return true;
    Vec cur = r;
    while (true) {
      bool fits = true;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        cur[i] -= p[i];
        if (cur[i] < 0) fits = false;
      }
      if (!fits) return false;
      if (vec_is_zero(cur)) return true;
      if (self(self, idx + 1, cur)) return true;
    }
  };
  return rec(rec, 0, rest);
}

// Affine pushforward of system solutions: base2 + periods2 where the
// inhomogeneous parts map through `shift + map(lambda)`.
Vec apply_combo(const Vec& shift, const std::vector<Vec>& gens, const Vec& coeffs,
                std::size_t offset) {
  Vec r = shift;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    Int k = coeffs[offset + j];
    if (k == 0) continue;
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = checked_add(r[i], checked_mul(k, gens[j][i]));
  }
  return r;
}

}  // namespace

bool sl_member(const SemilinearSet& s, const Vec& x) {
  if (static_cast<int>(x.size()) != s.dim()) throw DimensionError("sl_member dimension mismatch");
  for (const LinearSet& c : s.components())
    if (component_member(c, x)) return true;
  return false;
}

SemilinearSet sl_union(const SemilinearSet& s1, const SemilinearSet& s2) {
  if (s1.dim() != s2.dim()) throw DimensionError("sl_union dimension mismatch");
  SemilinearSet r = s1;
  for (const LinearSet& c : s2.components()) r.add_component(c);
  return r;
}

SemilinearSet sl_intersect(const SemilinearSet& s1, const SemilinearSet& s2, const Caps& caps) {
  if (s1.dim() != s2.dim()) throw DimensionError("sl_intersect dimension mismatch");
  int d = s1.dim();
  SemilinearSet out(d);
  for (const LinearSet& c1 : s1.components()) {
    for (const LinearSet& c2 : s2.components()) {
      // Solve c1 + P1.lambda = c2 + P2.mu over nonnegative (lambda, mu).
      std::size_t n1 = c1.periods.size(), n2 = c2.periods.size();
      SignedMatrix a(d, std::vector<Int>(n1 + n2, 0));
      std::vector<Int> b(d);
      for (int i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < n1; ++j) a[i][j] = c1.periods[j][i];
        for (std::size_t j = 0; j < n2; ++j) a[i][n1 + j] = -c2.periods[j][i];
        b[i] = c2.base[i] - c1.base[i];
      }
      NonnegSolutions sol = solve_nonneg_system(a, b, caps.solver_cap);
      for (const Vec& m : sol.minimal) {
        Vec base = apply_combo(c1.base, c1.periods, m, 0);
        std::vector<Vec> periods;
        for (const Vec& h : sol.basis) periods.push_back(apply_combo(Vec(d, 0), c1.periods, h, 0));
        out.add_component(LinearSet(std::move(base), std::move(periods)));
      }
    }
  }
  return out;
}

SemilinearSet sl_linear_image(const SemilinearSet& s, const IntMatrix& m) {
  if (m.cols() != s.dim()) throw DimensionError("sl_linear_image dimension mismatch");
  SemilinearSet out(m.rows());
  for (const LinearSet& c : s.components()) {
    Vec base = m.apply(c.base);
    std::vector<Vec> periods;
    for (const Vec& p : c.periods) periods.push_back(m.apply(p));
    out.add_component(LinearSet(std::move(base), std::move(periods)));
  }
  return out;
}

SemilinearSet sl_linear_preimage(const SemilinearSet& s, const IntMatrix& m, int n,
                                 const Caps& caps) {
  if (m.rows() != s.dim()) throw DimensionError("sl_linear_preimage dimension mismatch");
  if (m.cols() != n) throw DimensionError("sl_linear_preimage target dimension mismatch");
  int d = s.dim();
  SemilinearSet out(n);
  for (const LinearSet& c : s.components()) {
    // Solve m.x = base + P.lambda jointly over (x, lambda), then project to x.
    std::size_t np = c.periods.size();
    SignedMatrix a(d, std::vector<Int>(n + np, 0));
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
      for (std::size_t j = 0; j < np; ++j) a[i][n + j] = -c.periods[j][i];
    }
    NonnegSolutions sol = solve_nonneg_system(a, c.base, caps.solver_cap);
    for (const Vec& mi : sol.minimal) {
      Vec base(mi.begin(), mi.begin() + n);
      std::vector<Vec> periods;
      for (const Vec& h : sol.basis) periods.push_back(Vec(h.begin(), h.begin() + n));
      out.add_component(LinearSet(std::move(base), std::move(periods)));
    }
  }
  return out;
}

SemilinearSet sl_constrain(const SemilinearSet& s, const IntMatrix& v, const SemilinearSet& c,
                           const Caps& caps) {
  if (v.cols() != s.dim()) throw DimensionError("sl_constrain dimension mismatch");
  if (v.rows() != c.dim()) throw DimensionError("sl_constrain condition dimension mismatch");
  int d = c.dim();
  SemilinearSet out(s.dim());
  for (const LinearSet& cs : s.components()) {
    Vec vbase = v.apply(cs.base);
    std::vector<Vec> vper;
    for (const Vec& p : cs.periods) vper.push_back(v.apply(p));
    for (const LinearSet& cc : c.components()) {
      // v.base + v.P.lambda = cc.base + cc.Q.mu over nonnegative (lambda, mu).
      std::size_t n1 = cs.periods.size(), n2 = cc.periods.size();
      SignedMatrix a(d, std::vector<Int>(n1 + n2, 0));
      std::vector<Int> b(d);
      for (int i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < n1; ++j) a[i][j] = vper[j][i];
        for (std::size_t j = 0; j < n2; ++j) a[i][n1 + j] = -cc.periods[j][i];
        b[i] = cc.base[i] - vbase[i];
      }
      NonnegSolutions sol = solve_nonneg_system(a, b, caps.solver_cap);
      for (const Vec& m : sol.minimal) {
        Vec base = apply_combo(cs.base, cs.periods, m, 0);
        std::vector<Vec> periods;
        for (const Vec& h : sol.basis)
          periods.push_back(apply_combo(Vec(s.dim(), 0), cs.periods, h, 0));
        out.add_component(LinearSet(std::move(base), std::move(periods)));
      }
    }
  }
  return out;
}

std::vector<Vec> sl_enumerate(const SemilinearSet& s, Int bound) {
  std::vector<Vec> out;
  int d = s.dim();
  Vec x(d, 0);
  while (true) {
    if (sl_member(s, x)) out.push_back(x);
    int i = d - 1;
    while (i >= 0 && x[i] == bound) x[i--] = 0;
    if (i < 0) break;
    ++x[i];
  }
  return out;
}

bool sl_equal_up_to(const SemilinearSet& s1, const SemilinearSet& s2, Int bound) {
  if (s1.dim() != s2.dim()) throw DimensionError("sl_equal_up_to dimension mismatch");
  return sl_enumerate(s1, bound) == sl_enumerate(s2, bound);
}

}  // namespace parikh
