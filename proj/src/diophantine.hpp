// SPDX-License-Identifier: Apache-2.0
#ifndef PARIKH_DIOPHANTINE_HPP
#define PARIKH_DIOPHANTINE_HPP

#include <vector>

#include "vec.hpp"

namespace parikh {

// Rows of a signed integer matrix; entries of A and b may be negative since
// systems arise as differences of generator contributions.
using SignedMatrix = std::vector<std::vector<Int>>;

struct NonnegSolutions {
  // Componentwise-minimal nonnegative solutions of A.x = b.
  std::vector<Vec> minimal;
  // Hilbert basis of A.x = 0, x >= 0 (minimal nonzero solutions).
  std::vector<Vec> basis;
};

// Solves A.x = b over the nonnegative integers. The full solution set is
// exactly the union of m + basis* over m in minimal. Throws SolverCapExceeded
// once more than cap candidate vectors have been explored.
NonnegSolutions solve_nonneg_system(const SignedMatrix& a, const std::vector<Int>& b,
                                    Int cap = default_caps().solver_cap);

}  // namespace parikh

#endif
