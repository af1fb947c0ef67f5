#include "famind/factors.hpp"

#include <algorithm>
#include <functional>

#include "famind/errors.hpp"

namespace famind {

std::string SimpleFactorId::display() const {
  switch (kind) {
    case Kind::Cyclic:
      return "C" + order.to_decimal();
    case Kind::Lie: {
      std::string out;
      for (size_t i = 0; i < witnesses.lie.size(); ++i) {
        if (i) out += "~";
        out += witnesses.lie[i].display();
      }
      return out;
    }
    case Kind::Unidentified:
      return "?(" + order.to_decimal() + ")";
  }
  return "?";
}

bool factor_less(const SimpleFactorId& a, const SimpleFactorId& b) {
  if (auto cmp = a.order <=> b.order; cmp != std::strong_ordering::equal)
    return cmp == std::strong_ordering::less;
  return a.kind < b.kind;
}

SimpleFactorId label_simple_group(uint64_t order, bool abelian) {
  SimpleFactorId id;
  id.order = BigUint(order);
  if (abelian) {
    if (!is_prime_u64(order))
      throw InvalidArgument("abelian simple group must have prime order, got " +
                            std::to_string(order));
    id.kind = SimpleFactorId::Kind::Cyclic;
    return id;
  }
  // By the cross-characteristic disjointness theorem at most one prime can
  // match; scan the primes >= 5 dividing the order.
  std::vector<uint64_t> primes = prime_factorization(order);
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (uint64_t p : primes) {
    if (p < 5) continue;
    OrderWitnesses w = identify_simple_by_order(id.order, p);
    w.cyclic = false;  // non-abelian, so the cyclic witness never applies
    if (!w.lie.empty()) {
      id.kind = SimpleFactorId::Kind::Lie;
      id.witnesses = std::move(w);
      id.ell = p;
      return id;
    }
  }
  id.kind = SimpleFactorId::Kind::Unidentified;
  return id;
}

namespace {

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

void collect_factors(const FiniteGroup& g, std::vector<SimpleFactorId>& out,
                     uint64_t* rng_state) {
  if (g.order() == 1) return;
  if (g.is_abelian()) {
    // The Jordan-Holder factors of an abelian group are one cyclic factor
    // per prime with multiplicity.
    for (uint64_t p : prime_factorization(g.order()))
      out.push_back(label_simple_group(p, true));
    return;
  }
  std::vector<Subgroup> maximal = maximal_normal_subgroups(g);
  size_t pick = maximal.size() - 1;  // canonical: largest order
  if (rng_state) pick = size_t(splitmix64(*rng_state) % maximal.size());
  const Subgroup& m = maximal[pick];
  FiniteGroup q = quotient(g, m).group;
  out.push_back(label_simple_group(q.order(), q.is_abelian()));
  collect_factors(m.as_group(), out, rng_state);
}

}  // namespace

std::vector<SimpleFactorId> composition_factors(const FiniteGroup& g) {
  std::vector<SimpleFactorId> out;
  collect_factors(g, out, nullptr);
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

std::vector<SimpleFactorId> composition_factors_seeded(const FiniteGroup& g, uint64_t seed) {
  std::vector<SimpleFactorId> out;
  uint64_t state = seed;
  collect_factors(g, out, &state);
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

std::vector<SimpleFactorId> simple_quotients(const FiniteGroup& g) {
  std::vector<SimpleFactorId> out;
  if (g.is_abelian()) {
    // Simple quotients of an abelian group: one C_p per prime divisor.
    std::vector<uint64_t> primes = prime_factorization(g.order());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (uint64_t p : primes) out.push_back(label_simple_group(p, true));
  } else {
    for (const Subgroup& m : maximal_normal_subgroups(g)) {
      FiniteGroup q = quotient(g, m).group;
      out.push_back(label_simple_group(q.order(), q.is_abelian()));
    }
  }
  std::sort(out.begin(), out.end(), factor_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace famind
