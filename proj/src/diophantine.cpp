// SPDX-License-Identifier: Apache-2.0
#include "diophantine.hpp"

#include <algorithm>
#include <unordered_set>

namespace parikh {

namespace {

// Residual A.y for the homogenized system, maintained incrementally.
Vec residual(const SignedMatrix& a, const std::vector<Int>& neg_b, const Vec& y) {
  std::size_t m = a.size();
  std::size_t n = y.size();  // includes the homogenization coordinate
  Vec r(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j + 1 < n; ++j) acc = checked_add(acc, checked_mul(a[i][j], y[j]));
    acc = checked_add(acc, checked_mul(neg_b[i], y[n - 1]));
    r[i] = acc;
  }
  return r;
}

Int dot(const Vec& a, const Vec& b) {
  Int acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = checked_add(acc, checked_mul(a[i], b[i]));
  return acc;
}

}  // namespace

NonnegSolutions solve_nonneg_system(const SignedMatrix& a, const std::vector<Int>& b, Int cap) {
  std::size_t m = a.size();
  if (m != b.size()) throw DimensionError("system row counts differ");
  std::size_t ncols = m == 0 ? 0 : a[0].size();
  for (const auto& row : a)
    if (row.size() != ncols) throw DimensionError("ragged system matrix");

  // Homogenize: solve [A | -b].(x, x0) = 0 with x0 frozen at <= 1. Minimal
  // solutions with x0 = 1 are the minimal inhomogeneous solutions; x0 = 0
  // gives the Hilbert basis of the homogeneous part.
  std::vector<Int> neg_b(m);
  for (std::size_t i = 0; i < m; ++i) neg_b[i] = -b[i];
  std::size_t n = ncols + 1;

  // Column images A.e_j used by the Contejean-Devie increment criterion.
  std::vector<Vec> col(n, Vec(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) col[j][i] = a[i][j];
    col[ncols][i] = neg_b[i];
  }

  NonnegSolutions out;
  std::vector<Vec> solutions;  // homogenized minimal solutions found so far

  auto dominated = [&](const Vec& y) {
    for (const Vec& s : solutions)
      if (vec_dominates(y, s)) return true;
    return false;
  };

  std::vector<Vec> frontier;
  for (std::size_t j = 0; j < n; ++j) frontier.push_back(unit_vec(n, j));

  Int explored = static_cast<Int>(frontier.size());
  while (!frontier.empty()) {
    // Collect solutions at this level before expanding; a level holds
    // vectors of one L1 norm, so collected solutions never dominate their
    // own level's other candidates improperly.
    std::vector<std::pair<Vec, Vec>> pending;  // (candidate, residual)
    for (Vec& y : frontier) {
      if (dominated(y)) continue;
      Vec r = residual(a, neg_b, y);
      if (vec_is_zero(r)) {
        solutions.push_back(y);
      } else {
        pending.emplace_back(std::move(y), std::move(r));
      }
    }

    std::unordered_set<Vec, VecHash> next;
    for (auto& [y, r] : pending) {
      if (dominated(y)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == ncols && y[ncols] >= 1) continue;  // freeze x0 at <= 1
        if (dot(r, col[j]) >= 0) continue;
        Vec z = y;
        z[j] += 1;
        if (dominated(z)) continue;
        if (next.insert(std::move(z)).second) {
          ++explored;
          if (explored > cap) throw SolverCapExceeded("solve_nonneg_system cap exceeded");
        }
      }
    }
    frontier.assign(next.begin(), next.end());
    // Deterministic level order irrespective of hashing.
    std::sort(frontier.begin(), frontier.end());
  }

  for (const Vec& s : solutions) {
    Vec x(s.begin(), s.end() - 1);
    if (s[ncols] == 1)
      out.minimal.push_back(std::move(x));
    else
      out.basis.push_back(std::move(x));
  }
  std::sort(out.minimal.begin(), out.minimal.end());
  std::sort(out.basis.begin(), out.basis.end());
  return out;
}

}  // namespace parikh
