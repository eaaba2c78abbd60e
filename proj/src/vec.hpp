// SPDX-License-Identifier: Apache-2.0
#ifndef PARIKH_VEC_HPP
#define PARIKH_VEC_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "ints.hpp"

namespace parikh {

// Vector over the nonnegative integers; the dimension is the length and may
// be zero (the one-point space {()}).
using Vec = std::vector<Int>;

inline Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector dimensions differ");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

inline void vec_add_inplace(Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector dimensions differ");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = checked_add(a[i], b[i]);
}

inline Vec vec_scale(const Vec& a, Int k) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], k);
  return r;
}

inline bool vec_is_zero(const Vec& a) {
  for (Int x : a)
    if (x != 0) return false;
  return true;
}

// Componentwise a >= b.
inline bool vec_dominates(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector dimensions differ");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

inline Vec unit_vec(std::size_t dim, std::size_t i) {
  Vec r(dim, 0);
  r[i] = 1;
  return r;
}

struct VecHash {
  std::size_t operator()(const Vec& v) const {
    std::size_t h = v.size();
    for (Int x : v) h = h * 1000003u + static_cast<std::size_t>(x) + 0x9e3779b9u;
    return h;
  }
};

// Dense matrix with nonnegative entries (vectors are columns, so a matrix
// maps N^cols to N^rows).
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols, Int fill = 0)
      : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimensions");
    if (fill < 0) throw DimensionError("matrix entries must be nonnegative");
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
  Int at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }

  Vec apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != cols_) throw DimensionError("matrix/vector dimensions differ");
    Vec r(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
      Int acc = 0;
      for (int j = 0; j < cols_; ++j) acc = checked_add(acc, checked_mul(at(i, j), x[j]));
      r[i] = acc;
    }
    return r;
  }

  // this * other
  IntMatrix mul(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw DimensionError("matrix dimensions differ");
    IntMatrix r(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        Int a = at(i, k);
        if (a == 0) continue;
        for (int j = 0; j < other.cols_; ++j)
          r.at(i, j) = checked_add(r.at(i, j), checked_mul(a, other.at(k, j)));
      }
    return r;
  }

  Vec column(int j) const {
    Vec r(rows_);
    for (int i = 0; i < rows_; ++i) r[i] = at(i, j);
    return r;
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

  const std::vector<Int>& raw() const { return entries_; }

 private:
  int rows_, cols_;
  std::vector<Int> entries_;
};

struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const {
    std::size_t h = static_cast<std::size_t>(m.rows()) * 31 + m.cols();
    for (Int x : m.raw()) h = h * 1000003u + static_cast<std::size_t>(x) + 0x9e3779b9u;
    return h;
  }
};

// Desk-scale guardrails shared by the search procedures.
struct Caps {
  Int solver_cap = 1000000;  // candidate vectors explored per linear system
  Int monoid_cap = 10000;    // elements of a matrix monoid closure
  int support_cap = 14;      // transitions per SCC in Parikh image supports
  Int plan_cap = 200000;     // condensation-DAG plans / emitted components
};

inline const Caps& default_caps() {
  static const Caps caps;
  return caps;
}

}  // namespace parikh

#endif
