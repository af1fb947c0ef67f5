#include <doctest.h>

#include <map>

#include "famind/corpus.hpp"
#include "famind/factors.hpp"
#include "famind/matrix_group.hpp"

using namespace famind;

namespace {

FiniteGroup sl2(uint64_t p) {
  return make_matrix_group(2, p, {{{1, 1}, {0, 1}}, {{0, 1}, {p - 1, 0}}});
}

FiniteGroup gl2(uint64_t p, uint64_t primitive_root) {
  return make_matrix_group(
      2, p, {{{primitive_root, 0}, {0, 1}}, {{p - 1, 1}, {p - 1, 0}}});
}

std::vector<std::string> factor_names(const std::vector<SimpleFactorId>& factors) {
  std::vector<std::string> out;
  for (const auto& f : factors) out.push_back(f.display());
  return out;
}

}  // namespace

TEST_CASE("composition factors of SL2(F5)") {
  FiniteGroup g = sl2(5);
  REQUIRE(g.order() == 120);
  auto factors = composition_factors(g);
  REQUIRE(factors.size() == 2);
  CHECK(factors[0].kind == SimpleFactorId::Kind::Cyclic);
  CHECK(factors[0].order == BigUint(2));
  CHECK(factors[1].kind == SimpleFactorId::Kind::Lie);
  CHECK(factors[1].order == BigUint(60));
  REQUIRE(factors[1].witnesses.lie.size() == 1);
  CHECK(factors[1].witnesses.lie[0].display() == "A1(5)");
}

TEST_CASE("composition factors of cyclic and trivial groups") {
  auto c12 = composition_factors(cyclic_group(12));
  CHECK(factor_names(c12) == std::vector<std::string>{"C2", "C2", "C3"});
  CHECK(composition_factors(make_perm_group(1, {})).empty());
}

TEST_CASE("composition factors of symmetric groups") {
  auto s4 = composition_factors(symmetric_group(4));
  // C2 (sign), C3 and two C2 from V4 inside A4
  CHECK(factor_names(s4) == std::vector<std::string>{"C2", "C2", "C2", "C3"});

  auto s5 = composition_factors(symmetric_group(5));
  REQUIRE(s5.size() == 2);
  CHECK(s5[0].display() == "C2");
  CHECK(s5[1].order == BigUint(60));  // A5, identified by order with A1(5)
  CHECK(s5[1].kind == SimpleFactorId::Kind::Lie);
}

TEST_CASE("unidentified factors stay unidentified") {
  // A6 is simple of order 360; 360 is not an order in Sigma_5 and the
  // characteristic-3 catalogue is out of scope.
  auto a6 = composition_factors(alternating_group(6, 1000));
  REQUIRE(a6.size() == 1);
  CHECK(a6[0].kind == SimpleFactorId::Kind::Unidentified);
  CHECK(a6[0].order == BigUint(360));
  CHECK(a6[0].display() == "?(360)");
}

TEST_CASE("Jordan-Holder multisets are series-independent") {
  CorpusSampler sampler(99);
  std::vector<FiniteGroup> subjects = sampler.pool();
  subjects.push_back(direct_product(symmetric_group(3), cyclic_group(4)));
  subjects.push_back(direct_product(dihedral_group(4), cyclic_group(3)));
  for (int i = 0; i < 12; ++i) subjects.push_back(sampler.random_group());
  for (const FiniteGroup& g : subjects) {
    auto reference = composition_factors(g);
    for (uint64_t seed : {1ull, 7ull, 1234567ull}) {
      auto shuffled = composition_factors_seeded(g, seed);
      REQUIRE(shuffled.size() == reference.size());
      for (size_t k = 0; k < reference.size(); ++k) {
        CHECK(shuffled[k].kind == reference[k].kind);
        CHECK(shuffled[k].order == reference[k].order);
      }
    }
  }
}

TEST_CASE("simple quotients") {
  auto s3 = simple_quotients(symmetric_group(3));
  REQUIRE(s3.size() == 1);
  CHECK(s3[0].display() == "C2");

  auto c6 = simple_quotients(cyclic_group(6));
  CHECK(factor_names(c6) == std::vector<std::string>{"C2", "C3"});

  auto a5 = simple_quotients(alternating_group(5));
  REQUIRE(a5.size() == 1);
  CHECK(a5[0].kind == SimpleFactorId::Kind::Lie);
  CHECK(a5[0].order == BigUint(60));

  CHECK(simple_quotients(make_perm_group(1, {})).empty());
}

TEST_CASE("Lemme 1 desk check: matrix-group factors land in the catalogue") {
  struct Case {
    FiniteGroup group;
    uint64_t ell;
  };
  std::vector<Case> cases;
  cases.push_back({sl2(5), 5});
  cases.push_back({gl2(5, 2), 5});
  cases.push_back({sl2(7), 7});
  cases.push_back({gl2(7, 3), 7});
  const std::map<uint64_t, uint64_t> primitive_roots = {{5, 2}, {7, 3}, {11, 2}, {13, 2}};
  for (auto [ell, root] : primitive_roots)
    cases.push_back({make_matrix_group(1, ell, {{{root}}}), ell});

  for (const Case& c : cases) {
    SigmaCatalogue cat = sigma_catalogue(c.ell, BigUint(c.group.order()));
    for (const SimpleFactorId& f : composition_factors(c.group)) {
      if (f.kind == SimpleFactorId::Kind::Cyclic) continue;
      bool in_catalogue = false;
      for (const OrderEntry& e : cat.entries)
        if (e.order == f.order) in_catalogue = true;
      CHECK(in_catalogue);
    }
  }
}
