#include "famind/matrix_group.hpp"

#include <string>

#include "famind/errors.hpp"

namespace famind {

namespace {

// Decodes point index + 1 into a vector over F_p, applies the matrix on the
// left, re-encodes. A zero image betrays a singular matrix.
Perm action_on_nonzero_vectors(int n, uint64_t p, const MatrixFp& m, size_t degree,
                               size_t matrix_index) {
  Perm perm(degree);
  std::vector<uint64_t> v(n), w(n);
  for (size_t point = 0; point < degree; ++point) {
    uint64_t enc = point + 1;
    for (int i = 0; i < n; ++i) {
      v[i] = enc % p;
      enc /= p;
    }
    uint64_t out_enc = 0;
    uint64_t power = 1;
    for (int i = 0; i < n; ++i) {
      uint64_t sum = 0;
      for (int j = 0; j < n; ++j) sum = (sum + m[i][j] * v[j]) % p;
      w[i] = sum;
      out_enc += sum * power;
      power *= p;
    }
    if (out_enc == 0)
      throw SingularMatrix("matrix " + std::to_string(matrix_index + 1) +
                           " kills a nonzero vector (not invertible mod " +
                           std::to_string(p) + ")");
    perm[point] = Point(out_enc - 1);
  }
  return perm;
}

}  // namespace

FiniteGroup make_matrix_group(int n, uint64_t p, const std::vector<MatrixFp>& generators,
                              size_t order_cap) {
  if (n < 1) throw InvalidArgument("matrix dimension must be positive");
  if (!is_prime_u64(p)) throw InvalidArgument(std::to_string(p) + " is not prime");

  uint64_t points = 1;
  for (int i = 0; i < n; ++i) {
    points *= p;
    if (points - 1 > uint64_t(kMaxDegree))
      throw CapExceeded("p^n - 1 = " + std::to_string(points - 1) +
                        " nonzero vectors exceed the permutation degree limit");
  }
  size_t degree = size_t(points - 1);

  std::vector<Perm> perms;
  perms.reserve(generators.size());
  for (size_t k = 0; k < generators.size(); ++k) {
    const MatrixFp& raw = generators[k];
    if (raw.size() != size_t(n))
      throw InvalidArgument("matrix " + std::to_string(k + 1) + " is not " +
                            std::to_string(n) + "x" + std::to_string(n));
    MatrixFp m(n, std::vector<uint64_t>(n));
    for (int i = 0; i < n; ++i) {
      if (raw[i].size() != size_t(n))
        throw InvalidArgument("matrix " + std::to_string(k + 1) + " is not " +
                              std::to_string(n) + "x" + std::to_string(n));
      for (int j = 0; j < n; ++j) m[i][j] = raw[i][j] % p;
    }
    perms.push_back(action_on_nonzero_vectors(n, p, m, degree, k));
  }

  return make_perm_group_impl(int(degree), perms, order_cap, MatrixGroupTag{n, p});
}

}  // namespace famind
