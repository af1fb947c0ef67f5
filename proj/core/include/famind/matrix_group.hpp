#pragma once

#include <cstdint>
#include <vector>

#include "famind/group.hpp"

namespace famind {

// Row-major n x n matrix over the p-element field; entries are reduced mod p
// on input.
using MatrixFp = std::vector<std::vector<uint64_t>>;

// Converts the generated matrix group to a permutation group via the action
// on the p^n - 1 nonzero column vectors (encoded base p, ascending). The
// action is faithful for any matrix group, so orders transfer exactly; tests
// cross-check against direct matrix enumeration for n <= 2. The result
// carries a MatrixGroupTag so Jordan probes can recover (n, p).
FiniteGroup make_matrix_group(int n, uint64_t p, const std::vector<MatrixFp>& generators,
                              size_t order_cap = kDefaultOrderCap);

}  // namespace famind
