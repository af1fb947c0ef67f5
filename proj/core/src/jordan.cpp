#include "famind/jordan.hpp"

#include <algorithm>

#include "famind/errors.hpp"

namespace famind {

JordanResult jordan_index(const FiniteGroup& g) {
  JordanResult best;
  if (g.is_abelian()) {
    best.index = 1;
    best.witness = {whole_subgroup(g), 1};
    return best;
  }
  // The lattice lists are sorted by (size, members), so the first subgroup
  // of the winning size is the canonical witness.
  const Subgroup* winner = nullptr;
  std::vector<Subgroup> normals = normal_subgroups(g);
  for (const Subgroup& n : normals) {
    if (winner && n.order() <= winner->order()) continue;
    if (n.is_abelian()) winner = &n;
  }
  // The trivial subgroup is abelian and normal, so a winner always exists.
  best.index = g.order() / winner->order();
  best.witness = {*winner, best.index};
  return best;
}

bool jordan_check(const FiniteGroup& g, uint64_t d) {
  if (d < 1) throw InvalidArgument("jordan_check: d must be >= 1");
  return jordan_index(g).index <= d;
}

BigUint frobenius_bound(uint64_t n, size_t initial_bits) {
  const uint64_t exponent = 2 * n * n;
  if (exponent == 0) return BigUint(1);

  const uint64_t s = 8 * n;
  BigUint root = BigUint(s).isqrt();
  if (root * root == BigUint(s)) return (root + BigUint(1)).pow(exponent);

  // Exact expansion (1 + sqrt(s))^e = a + b sqrt(s) in Z[sqrt(s)] by binary
  // exponentiation. The fractional part lives entirely in b sqrt(s), which
  // is irrational, so ceil = a + ceil(b sqrt(s)).
  const BigUint big_s(s);
  BigUint a(1), b(0), base_a(1), base_b(1);
  for (uint64_t e = exponent; e;) {
    if (e & 1) {
      BigUint next_a = a * base_a + b * base_b * big_s;
      b = a * base_b + b * base_a;
      a = std::move(next_a);
    }
    e >>= 1;
    if (e) {
      BigUint next_a = base_a * base_a + base_b * base_b * big_s;
      base_b = (base_a * base_b) << 1;
      base_a = std::move(next_a);
    }
  }

  // Bracket sqrt(s) between dyadic rationals, doubling the precision until
  // the integer ceiling of b sqrt(s) is pinned. Terminates because b sqrt(s)
  // keeps a positive distance from every integer.
  for (size_t k = std::max<size_t>(initial_bits, 1);; k *= 2) {
    BigUint lower = (big_s << (2 * k)).isqrt();  // floor(2^k sqrt(s))
    BigUint lo = b * lower;
    BigUint hi = b * (lower + BigUint(1));
    BigUint half_up = (BigUint(1) << k) - BigUint(1);
    BigUint lo_ceil = (lo + half_up) >> k;
    BigUint hi_ceil = (hi + half_up) >> k;
    if (lo_ceil == hi_ceil) return a + lo_ceil;
  }
}

BigUint collins_bound(uint64_t n) {
  if (n < 71)
    throw OutOfRange("collins_bound is only the known optimal value for n >= 71, got " +
                     std::to_string(n));
  return big_factorial(n + 1);
}

Theorem3PrimeProbe theorem3prime_probe(const FiniteGroup& h, const Subgroup& n_sub) {
  const auto& tag = h.matrix_tag();
  if (!tag)
    throw InvalidArgument("theorem3prime_probe: group carries no matrix provenance tag");

  QuotientResult q = quotient(h, n_sub);
  if (q.group.order() % tag->p == 0)
    throw CharacteristicDividesOrder("quotient order " + std::to_string(q.group.order()) +
                                     " is divisible by the characteristic " +
                                     std::to_string(tag->p));
  Theorem3PrimeProbe probe;
  probe.n = tag->n;
  probe.p = tag->p;
  probe.quotient_order = q.group.order();
  probe.jordan = jordan_index(q.group);
  return probe;
}

}  // namespace famind
