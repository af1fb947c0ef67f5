#pragma once

#include <cstdint>

#include "famind/bigint.hpp"
#include "famind/group.hpp"
#include "famind/hom.hpp"

namespace famind {

// Witness for the property (Jor_d): an abelian normal subgroup of index d.
struct JordanWitness {
  Subgroup abelian_normal_subgroup;
  uint64_t index = 0;
};

struct JordanResult {
  uint64_t index = 0;  // minimal (G:A) over abelian normal subgroups A
  JordanWitness witness;
};

// Exhaustive over the normal subgroup lattice; deterministic witness choice
// (largest abelian normal subgroup, least member list on ties).
JordanResult jordan_index(const FiniteGroup& g);

bool jordan_check(const FiniteGroup& g, uint64_t d);

// Smallest integer >= (sqrt(8n) + 1)^(2n^2), the classical explicit value
// valid in the Jordan theorem. Evaluated by bracketing sqrt(8n) between
// dyadic rationals tight enough to pin the integer ceiling; exact integer
// arithmetic throughout, never a machine float. `initial_bits` is the
// starting bracket precision (doubled until the ceiling is determined).
BigUint frobenius_bound(uint64_t n, size_t initial_bits = 64);

// (n+1)!, the known optimal Jordan constant for n >= 71. OutOfRange below
// 71, where no optimal value is claimed.
BigUint collins_bound(uint64_t n);

// Desk check of the prime-to-characteristic Jordan property: H must carry a
// matrix provenance tag (n, p); G = H/N must have order prime to p. Reports
// the Jordan index of G so tests can compare it against frobenius_bound(n).
struct Theorem3PrimeProbe {
  int n = 0;
  uint64_t p = 0;
  uint64_t quotient_order = 0;
  JordanResult jordan;
};

Theorem3PrimeProbe theorem3prime_probe(const FiniteGroup& h, const Subgroup& n_sub);

}  // namespace famind
