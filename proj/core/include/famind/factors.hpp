#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "famind/group.hpp"
#include "famind/hom.hpp"
#include "famind/lie_orders.hpp"

namespace famind {

// Identification label for a finite simple group, decided by order:
// abelian factors are cyclic of prime order; a non-abelian factor whose
// order occurs in some Sigma_ell catalogue (ell >= 5 a prime divisor of the
// order) is labeled with every catalogue witness of that order; anything
// else stays unidentified. Identification is order-level only -- the B/C
// coincidence keeps both witnesses, and no isomorphism claim beyond the
// order match is made.
struct SimpleFactorId {
  enum class Kind { Cyclic, Lie, Unidentified };

  Kind kind = Kind::Unidentified;
  BigUint order;
  OrderWitnesses witnesses;  // populated for Lie labels
  uint64_t ell = 0;          // the characteristic of the matching catalogue

  std::string display() const;

  // Equality used for quotient-set comparison: kind plus order. Witness
  // lists are determined by (kind, order) anyway.
  friend bool operator==(const SimpleFactorId& a, const SimpleFactorId& b) {
    return a.kind == b.kind && a.order == b.order;
  }
};

// Canonical multiset order: by order value, then kind.
bool factor_less(const SimpleFactorId& a, const SimpleFactorId& b);

SimpleFactorId label_simple_group(uint64_t order, bool abelian);

// Jordan-Holder factors as a canonically sorted multiset. The multiset is
// independent of the composition series chosen; composition_factors_seeded
// picks maximal normal subgroups at random so tests can exercise exactly
// that invariant.
std::vector<SimpleFactorId> composition_factors(const FiniteGroup& g);
std::vector<SimpleFactorId> composition_factors_seeded(const FiniteGroup& g, uint64_t seed);

// Isomorphism-class labels of G/M over all maximal normal subgroups M
// (quotients of G, not subquotients), sorted and deduplicated.
std::vector<SimpleFactorId> simple_quotients(const FiniteGroup& g);

}  // namespace famind
