#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "famind/bigint.hpp"

namespace famind {

// The thirteen series of finite simple groups of Lie type that occur in
// characteristic >= 5 (no Suzuki-Ree twists, which only exist in
// characteristic 2 and 3).
enum class Series { A, TwistedA, B, C, D, TwistedD, TripleD4, G2, F4, E6, TwistedE6, E7, E8 };

const char* series_name(Series s);
Series series_from_name(const std::string& name);  // ParseError on unknown

// One simple group of Lie type: a series, a rank, and the field size
// q = ell^f. Rank conventions deduplicate the classical isomorphism
// coincidences so every abstract group appears under exactly one spec:
// A starts at rank 1, 2A at 2, B at 2, C at 3 (B2 = C2), D and 2D at 4
// (D3 = A3, 2D3 = 2A3). The genuine B_n/C_n order coincidence survives as
// two distinct specs of equal order.
struct LieTypeSpec {
  Series series = Series::A;
  int rank = 1;
  uint64_t ell = 5;
  uint32_t f = 1;

  BigUint q() const { return big_pow(ell, f); }
  std::string display() const;  // e.g. "A1(25)", "2A2(5)", "3D4(7)"

  friend bool operator==(const LieTypeSpec&, const LieTypeSpec&) = default;
  friend auto operator<=>(const LieTypeSpec&, const LieTypeSpec&) = default;
};

// Throws InvalidRank / InvalidEll when the spec violates the conventions.
void validate_spec(const LieTypeSpec& spec);

// |H(F_q)| for H simply connected of the given type; the classical
// q^N * prod(q^d - eps) formulas.
BigUint order_simply_connected(const LieTypeSpec& spec);

// Order of the center of the simply connected form.
uint32_t center_order(const LieTypeSpec& spec);

// Order of the simple group (simply connected order / center, exact).
BigUint order_simple(const LieTypeSpec& spec);

// Witnesses attached to one order value: the cyclic group of order ell
// and/or Lie-type specs whose simple order equals it.
struct OrderWitnesses {
  bool cyclic = false;
  std::vector<LieTypeSpec> lie;

  bool empty() const { return !cyclic && lie.empty(); }
};

struct OrderEntry {
  BigUint order;
  OrderWitnesses witnesses;
};

// All orders of members of Sigma_ell up to `bound`, strictly increasing,
// each with every witness. Sigma_ell is the set of simple groups of Lie
// type in characteristic ell together with the cyclic group of order ell.
struct SigmaCatalogue {
  uint64_t ell = 0;
  BigUint bound;
  std::vector<OrderEntry> entries;
};

SigmaCatalogue sigma_catalogue(uint64_t ell, const BigUint& bound);

// Cross-characteristic order comparison. The theorem says the order sets of
// Sigma_ell and Sigma_ell' are disjoint for distinct ell, ell' >= 5; this
// operation verifies that claim up to a bound and reports any collision
// verbatim (a collision would falsify the implementation, not the theorem).
struct ArtinCollision {
  BigUint order;
  OrderWitnesses first;
  OrderWitnesses second;
};

struct ArtinReport {
  uint64_t ell1 = 0, ell2 = 0;
  BigUint bound;
  bool disjoint = true;
  std::vector<ArtinCollision> collisions;
};

ArtinReport artin_disjoint(uint64_t ell1, uint64_t ell2, const BigUint& bound);

// All witnesses in Sigma_ell with simple order exactly `order`; empty when
// the order does not occur. The B/C coincidence yields two witnesses.
OrderWitnesses identify_simple_by_order(const BigUint& order, uint64_t ell);

}  // namespace famind
