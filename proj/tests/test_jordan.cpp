#include <doctest.h>

#include "famind/corpus.hpp"
#include "famind/errors.hpp"
#include "famind/jordan.hpp"
#include "famind/matrix_group.hpp"

using namespace famind;

TEST_CASE("jordan index examples") {
  JordanResult c6 = jordan_index(cyclic_group(6));
  CHECK(c6.index == 1);
  CHECK(c6.witness.abelian_normal_subgroup.order() == 6);

  JordanResult s3 = jordan_index(symmetric_group(3));
  CHECK(s3.index == 2);
  CHECK(s3.witness.abelian_normal_subgroup.order() == 3);

  JordanResult a5 = jordan_index(alternating_group(5));
  CHECK(a5.index == 60);
  CHECK(a5.witness.abelian_normal_subgroup.is_trivial());

  CHECK(jordan_index(symmetric_group(4)).index == 6);  // V4 is the largest abelian normal
}

TEST_CASE("jordan_check") {
  CHECK(jordan_check(symmetric_group(3), 2));
  CHECK_FALSE(jordan_check(alternating_group(5), 59));
  CHECK(jordan_check(alternating_group(5), 60));
  CHECK(jordan_check(cyclic_group(15), 1));
  CHECK_THROWS_AS(jordan_check(cyclic_group(2), 0), InvalidArgument);
}

TEST_CASE("jordan index is 1 exactly for abelian groups (corpus)") {
  CorpusSampler sampler(7);
  for (int i = 0; i < 30; ++i) {
    FiniteGroup g = sampler.random_group();
    CHECK((jordan_index(g).index == 1) == g.is_abelian());
  }
}

TEST_CASE("jordan_check is monotone in d") {
  FiniteGroup s4 = symmetric_group(4);
  uint64_t index = jordan_index(s4).index;
  for (uint64_t d = 1; d <= 2 * index; ++d)
    CHECK(jordan_check(s4, d) == (d >= index));
}

TEST_CASE("frobenius bound golden values") {
  CHECK(frobenius_bound(0) == BigUint(1));
  // ceil((sqrt(8)+1)^2) = ceil(9 + 2*sqrt(8)): 2*sqrt(8) is between 5 and 6
  // since 5^2 < 32 < 6^2, so the value lies in (14, 15).
  CHECK(frobenius_bound(1) == BigUint(15));
  // sqrt(16) = 4 exactly: (4+1)^8 = 390625
  CHECK(frobenius_bound(2) == BigUint(390625));
  // frozen from a 15000-digit decimal evaluation of (sqrt(24)+1)^18
  CHECK(frobenius_bound(3) == BigUint::from_decimal("74814184347879"));
  CHECK(frobenius_bound(8).to_decimal().substr(0, 24) == "139008452377144732764939");
  CHECK(frobenius_bound(71).to_decimal().size() == 14065);
}

TEST_CASE("frobenius bound is independent of the starting precision") {
  for (size_t bits : {1, 2, 3, 8, 64, 200})
    CHECK(frobenius_bound(1, bits) == BigUint(15));
  for (size_t bits : {1, 17, 64})
    CHECK(frobenius_bound(3, bits) == frobenius_bound(3));
}

TEST_CASE("frobenius bound is monotone for n <= 8") {
  for (uint64_t n = 0; n < 8; ++n)
    CHECK(frobenius_bound(n) < frobenius_bound(n + 1));
}

TEST_CASE("collins bound") {
  CHECK_THROWS_AS(collins_bound(70), OutOfRange);

  BigUint c71 = collins_bound(71);
  CHECK(c71.to_decimal().size() == 104);

  // Independent factorial oracle: Legendre's prime-power factorization of
  // 72! rebuilt with pow/mul, no sequential product.
  BigUint oracle(1);
  for (uint64_t p = 2; p <= 72; ++p) {
    if (!is_prime_u64(p)) continue;
    uint64_t e = 0;
    for (uint64_t q = p; q <= 72; q *= p) e += 72 / q;
    oracle = oracle * BigUint(p).pow(e);
  }
  CHECK(c71 == oracle);

  CHECK(collins_bound(100) == big_factorial(101));
}

TEST_CASE("theorem 3' probe on matrix groups") {
  FiniteGroup gl2_5 =
      make_matrix_group(2, 5, {{{2, 0}, {0, 1}}, {{4, 1}, {4, 0}}});
  REQUIRE(gl2_5.order() == 480);

  // G+ = SL2(F5); the quotient is the abelian determinant image C4.
  Subgroup sl2 = plus_subgroup(gl2_5, 5);
  CHECK(sl2.order() == 120);
  Theorem3PrimeProbe probe = theorem3prime_probe(gl2_5, sl2);
  CHECK(probe.n == 2);
  CHECK(probe.p == 5);
  CHECK(probe.quotient_order == 4);
  CHECK(probe.jordan.index == 1);
  CHECK(BigUint(probe.jordan.index) <= frobenius_bound(2));

  // quotient order divisible by the characteristic is rejected
  FiniteGroup sl2_grp = sl2.as_group();
  Subgroup z = center(sl2_grp);
  CHECK(z.order() == 2);
  CHECK_THROWS_AS(theorem3prime_probe(sl2_grp, z), CharacteristicDividesOrder);

  // 2-Sylow of GL2(F3) with its only odd-order quotient (the trivial one)
  FiniteGroup gl2_3 = make_matrix_group(2, 3, {{{2, 0}, {0, 1}}, {{2, 1}, {2, 0}}});
  FiniteGroup syl = sylow(gl2_3, 2).as_group();
  CHECK(syl.order() == 16);
  REQUIRE(syl.matrix_tag().has_value());
  Theorem3PrimeProbe p2 = theorem3prime_probe(syl, whole_subgroup(syl));
  CHECK(p2.quotient_order == 1);
  CHECK(p2.jordan.index == 1);

  // groups without matrix provenance are rejected
  CHECK_THROWS_AS(theorem3prime_probe(symmetric_group(4), trivial_subgroup(symmetric_group(4))),
                  InvalidArgument);
}

TEST_CASE("probe indexes stay within the bound on a matrix corpus") {
  // Odd-order quotients of 2-subgroups of GL2(F3) and GL2(F5) are trivial;
  // more interesting: quotients of GL2 itself with order prime to p.
  FiniteGroup gl2_3 = make_matrix_group(2, 3, {{{2, 0}, {0, 1}}, {{2, 1}, {2, 0}}});
  for (const Subgroup& n : normal_subgroups(gl2_3)) {
    FiniteGroup q_preview = quotient(gl2_3, n).group;
    if (q_preview.order() % 3 == 0) continue;
    Theorem3PrimeProbe probe = theorem3prime_probe(gl2_3, n);
    CHECK(BigUint(probe.jordan.index) <= frobenius_bound(2));
  }
}
