// SPDX-License-Identifier: Apache-2.0
#ifndef PARIKH_SEMILINEAR_HPP
#define PARIKH_SEMILINEAR_HPP

#include <vector>

#include "diophantine.hpp"
#include "vec.hpp"

namespace parikh {

// A linear set base + periods*. Zero periods are stripped and duplicates
// merged on construction, which bounds the membership search.
struct LinearSet {
  Vec base;
  std::vector<Vec> periods;

  LinearSet() = default;
  LinearSet(Vec b, std::vector<Vec> p);
};

// Finite union of linear sets of a common dimension; an empty component list
// is the empty set.
class SemilinearSet {
 public:
  explicit SemilinearSet(int dim) : dim_(dim) {
    if (dim < 0) throw DimensionError("negative dimension");
  }
  SemilinearSet(int dim, std::vector<LinearSet> components);

  static SemilinearSet empty(int dim) { return SemilinearSet(dim); }
  static SemilinearSet point(Vec v) {
    SemilinearSet s(static_cast<int>(v.size()));
    s.add_component(LinearSet(std::move(v), {}));
    return s;
  }

  int dim() const { return dim_; }
  const std::vector<LinearSet>& components() const { return components_; }
  bool is_empty() const { return components_.empty(); }
  void add_component(LinearSet c);

 private:
  int dim_;
  std::vector<LinearSet> components_;
};

bool sl_member(const SemilinearSet& s, const Vec& x);
SemilinearSet sl_union(const SemilinearSet& s1, const SemilinearSet& s2);
SemilinearSet sl_intersect(const SemilinearSet& s1, const SemilinearSet& s2,
                           const Caps& caps = default_caps());
// Image under a nonnegative matrix (m.cols = s.dim).
SemilinearSet sl_linear_image(const SemilinearSet& s, const IntMatrix& m);
// Preimage {x in N^n : m.x in s} (m.rows = s.dim, m.cols = n).
SemilinearSet sl_linear_preimage(const SemilinearSet& s, const IntMatrix& m, int n,
                                 const Caps& caps = default_caps());
// {x in s : v.x in c} for a nonnegative matrix v (v.cols = s.dim). Solved in
// the generator coefficients, so large ambient dimensions stay cheap.
SemilinearSet sl_constrain(const SemilinearSet& s, const IntMatrix& v, const SemilinearSet& c,
                           const Caps& caps = default_caps());
// Exactly the members with every coordinate <= bound.
std::vector<Vec> sl_enumerate(const SemilinearSet& s, Int bound);
// Bounded membership equality (exact equality needs complementation, which
// is out of scope).
bool sl_equal_up_to(const SemilinearSet& s1, const SemilinearSet& s2, Int bound);

}  // namespace parikh

#endif
