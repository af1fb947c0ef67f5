#include "famind/corpus.hpp"

#include <algorithm>

#include "famind/errors.hpp"

namespace famind {

uint64_t CorpusRng::next() {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

uint64_t CorpusRng::below(uint64_t n) { return n <= 1 ? 0 : next() % n; }

FiniteGroup cyclic_group(size_t n, size_t order_cap) {
  if (n < 1) throw InvalidArgument("cyclic group order must be positive");
  if (n > size_t(kMaxDegree))
    throw CapExceeded("cyclic group of order " + std::to_string(n) +
                      " exceeds the permutation degree limit");
  Perm cycle(n);
  for (size_t i = 0; i < n; ++i) cycle[i] = Point((i + 1) % n);
  return make_perm_group(int(n), {cycle}, order_cap);
}

FiniteGroup dihedral_group(int n, size_t order_cap) {
  if (n < 3) throw InvalidArgument("dihedral group needs n >= 3");
  Perm rotation(n), reflection(n);
  for (int i = 0; i < n; ++i) {
    rotation[i] = Point((i + 1) % n);
    reflection[i] = Point((n - i) % n);
  }
  return make_perm_group(n, {rotation, reflection}, order_cap);
}

FiniteGroup symmetric_group(int n, size_t order_cap) {
  if (n < 1) throw InvalidArgument("symmetric group needs n >= 1");
  if (n == 1) return make_perm_group(1, {}, order_cap);
  Perm transposition = perm_identity(n);
  std::swap(transposition[0], transposition[1]);
  Perm cycle(n);
  for (int i = 0; i < n; ++i) cycle[i] = Point((i + 1) % n);
  return make_perm_group(n, {transposition, cycle}, order_cap);
}

FiniteGroup alternating_group(int n, size_t order_cap) {
  if (n < 3) throw InvalidArgument("alternating group needs n >= 3");
  Perm three_cycle = perm_identity(n);
  three_cycle[0] = 1;
  three_cycle[1] = 2;
  three_cycle[2] = 0;
  if (n == 3) return make_perm_group(n, {three_cycle}, order_cap);
  // (1 2 3) together with (1 2 ... n) for odd n, (2 3 ... n) for even n.
  Perm big = perm_identity(n);
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i) big[i] = Point((i + 1) % n);
  } else {
    for (int i = 1; i < n; ++i) big[i] = Point(i == n - 1 ? 1 : i + 1);
  }
  return make_perm_group(n, {three_cycle, big}, order_cap);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, size_t order_cap) {
  int degree = a.degree() + b.degree();
  if (degree > kMaxDegree) throw CapExceeded("direct product degree too large");
  std::vector<Perm> gens;
  for (uint32_t id : a.generator_ids()) {
    Perm p = perm_identity(degree);
    auto src = a.perm(id);
    for (int i = 0; i < a.degree(); ++i) p[i] = src[i];
    gens.push_back(std::move(p));
  }
  for (uint32_t id : b.generator_ids()) {
    Perm p = perm_identity(degree);
    auto src = b.perm(id);
    for (int i = 0; i < b.degree(); ++i) p[a.degree() + i] = Point(a.degree() + src[i]);
    gens.push_back(std::move(p));
  }
  return make_perm_group(degree, gens, order_cap);
}

CorpusSampler::CorpusSampler(uint64_t seed, size_t max_order)
    : rng_(seed), max_order_(max_order) {
  for (size_t n : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 20})
    if (n <= max_order_) pool_.push_back(cyclic_group(n));
  for (int n : {3, 4, 5, 6, 7, 8})
    if (size_t(2 * n) <= max_order_) pool_.push_back(dihedral_group(n));
  for (int n : {3, 4, 5}) {
    size_t order = 1;
    for (int i = 2; i <= n; ++i) order *= i;
    if (order <= max_order_) pool_.push_back(symmetric_group(n));
  }
  for (int n : {4, 5}) {
    size_t order = 1;
    for (int i = 2; i <= n; ++i) order *= i;
    if (order / 2 <= max_order_) pool_.push_back(alternating_group(n));
  }
}

FiniteGroup CorpusSampler::random_group() {
  for (int attempt = 0; attempt < 32; ++attempt) {
    uint64_t shape = rng_.below(10);
    if (shape < 6) return pool_[rng_.below(pool_.size())];
    const FiniteGroup& a = pool_[rng_.below(pool_.size())];
    const FiniteGroup& b = pool_[rng_.below(pool_.size())];
    if (shape < 9) {
      if (a.order() * b.order() <= max_order_) return direct_product(a, b);
      continue;
    }
    const FiniteGroup& c = pool_[rng_.below(pool_.size())];
    if (a.order() * b.order() * c.order() <= max_order_)
      return direct_product(direct_product(a, b), c);
  }
  return pool_[rng_.below(pool_.size())];
}

GroupHom CorpusSampler::random_surjection(const FiniteGroup& domain) {
  std::vector<Subgroup> normals = normal_subgroups(domain);
  const Subgroup& n = normals[rng_.below(normals.size())];
  return quotient(domain, n).projection;
}

HomFamily CorpusSampler::random_family(int max_homs) {
  FiniteGroup domain = random_group();
  int k = 1 + int(rng_.below(uint64_t(max_homs)));
  std::vector<GroupHom> homs;
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) {
    homs.push_back(random_surjection(domain));
    labels.push_back(std::to_string(i + 1));
  }
  return make_family(std::move(domain), std::move(homs), std::move(labels));
}

CorpusSampler::FrattiniTriple CorpusSampler::random_frattini_triple() {
  FrattiniTriple triple;
  triple.h = random_group();
  std::vector<Subgroup> normals = normal_subgroups(triple.h);
  triple.i = normals[rng_.below(normals.size())];
  std::vector<uint64_t> primes = prime_factorization(triple.h.order());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  triple.p = primes.empty() ? 2 : primes[rng_.below(primes.size())];
  return triple;
}

}  // namespace famind
