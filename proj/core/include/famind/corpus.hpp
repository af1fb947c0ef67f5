#pragma once

#include <cstdint>
#include <vector>

#include "famind/group.hpp"
#include "famind/hom.hpp"
#include "famind/independence.hpp"

namespace famind {

// Deterministic splitmix64 stream; self-contained so corpora reproduce
// bit-for-bit across compilers and standard libraries.
struct CorpusRng {
  uint64_t state = 0;

  explicit CorpusRng(uint64_t seed) : state(seed) {}
  uint64_t next();
  uint64_t below(uint64_t n);  // uniform-ish in [0, n)
};

FiniteGroup cyclic_group(size_t n, size_t order_cap = kDefaultOrderCap);
FiniteGroup dihedral_group(int n, size_t order_cap = kDefaultOrderCap);  // order 2n, n >= 3
FiniteGroup symmetric_group(int n, size_t order_cap = kDefaultOrderCap);
FiniteGroup alternating_group(int n, size_t order_cap = kDefaultOrderCap);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           size_t order_cap = kDefaultOrderCap);

// Seeded source of small test subjects: cyclic, dihedral, symmetric and
// alternating groups and direct products up to max_order, with surjections
// built as projections onto quotients by random normal subgroups.
class CorpusSampler {
public:
  explicit CorpusSampler(uint64_t seed, size_t max_order = 200);

  const std::vector<FiniteGroup>& pool() const { return pool_; }

  FiniteGroup random_group();
  GroupHom random_surjection(const FiniteGroup& domain);
  HomFamily random_family(int max_homs = 4);

  struct FrattiniTriple {
    FiniteGroup h;
    Subgroup i;
    uint64_t p = 2;
  };
  FrattiniTriple random_frattini_triple();

private:
  CorpusRng rng_;
  size_t max_order_;
  std::vector<FiniteGroup> pool_;
};

}  // namespace famind
