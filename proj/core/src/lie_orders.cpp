#include "famind/lie_orders.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "famind/errors.hpp"
#include "famind/group.hpp"  // is_prime_u64

namespace famind {

const char* series_name(Series s) {
  switch (s) {
    case Series::A: return "A";
    case Series::TwistedA: return "2A";
    case Series::B: return "B";
    case Series::C: return "C";
    case Series::D: return "D";
    case Series::TwistedD: return "2D";
    case Series::TripleD4: return "3D4";
    case Series::G2: return "G2";
    case Series::F4: return "F4";
    case Series::E6: return "E6";
    case Series::TwistedE6: return "2E6";
    case Series::E7: return "E7";
    case Series::E8: return "E8";
  }
  return "?";
}

Series series_from_name(const std::string& name) {
  for (Series s : {Series::A, Series::TwistedA, Series::B, Series::C, Series::D,
                   Series::TwistedD, Series::TripleD4, Series::G2, Series::F4, Series::E6,
                   Series::TwistedE6, Series::E7, Series::E8}) {
    if (name == series_name(s)) return s;
  }
  throw ParseError("unknown series name '" + name + "'");
}

namespace {

struct SeriesInfo {
  int min_rank;       // lowest rank in the dedup convention
  int fixed_rank;     // 0 when the series has unbounded rank
};

SeriesInfo series_info(Series s) {
  switch (s) {
    case Series::A: return {1, 0};
    case Series::TwistedA: return {2, 0};
    case Series::B: return {2, 0};
    case Series::C: return {3, 0};
    case Series::D: return {4, 0};
    case Series::TwistedD: return {4, 0};
    case Series::TripleD4: return {4, 4};
    case Series::G2: return {2, 2};
    case Series::F4: return {4, 4};
    case Series::E6: return {6, 6};
    case Series::TwistedE6: return {6, 6};
    case Series::E7: return {7, 7};
    case Series::E8: return {8, 8};
  }
  return {1, 0};
}

// (q mod m)^e mod m
uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t m) {
  base %= m;
  uint64_t result = 1 % m;
  while (exp) {
    if (exp & 1) result = result * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return result;
}

uint64_t q_mod(const LieTypeSpec& spec, uint64_t m) { return mod_pow(spec.ell, spec.f, m); }

// gcd(m, q^n + delta) computed with small modular arithmetic only.
uint32_t gcd_with_q_power(uint64_t m, const LieTypeSpec& spec, uint64_t n, int64_t delta) {
  uint64_t r = mod_pow(q_mod(spec, m), n, m);
  r = (r + uint64_t(int64_t(m) + delta)) % m;
  return uint32_t(std::gcd(m, r));
}

}  // namespace

std::string LieTypeSpec::display() const {
  std::string out = series_name(series);
  SeriesInfo info = series_info(series);
  if (info.fixed_rank == 0) out += std::to_string(rank);
  out += "(" + q().to_decimal() + ")";
  return out;
}

void validate_spec(const LieTypeSpec& spec) {
  if (spec.ell < 5 || !is_prime_u64(spec.ell))
    throw InvalidEll("ell must be a prime >= 5, got " + std::to_string(spec.ell));
  if (spec.f < 1) throw InvalidRank("field exponent f must be positive");
  SeriesInfo info = series_info(spec.series);
  if (info.fixed_rank != 0) {
    if (spec.rank != info.fixed_rank)
      throw InvalidRank(std::string(series_name(spec.series)) + " has fixed rank " +
                        std::to_string(info.fixed_rank));
  } else if (spec.rank < info.min_rank) {
    throw InvalidRank(std::string(series_name(spec.series)) + " starts at rank " +
                      std::to_string(info.min_rank) + " (lower ranks coincide with other series)");
  }
}

BigUint order_simply_connected(const LieTypeSpec& spec) {
  validate_spec(spec);
  const BigUint q = spec.q();
  const uint64_t n = uint64_t(spec.rank);
  const BigUint one(1);

  auto qpow = [&](uint64_t e) { return q.pow(e); };
  auto minus = [&](uint64_t e) { return qpow(e) - one; };
  auto plus = [&](uint64_t e) { return qpow(e) + one; };

  switch (spec.series) {
    case Series::A: {
      BigUint out = qpow(n * (n + 1) / 2);
      for (uint64_t i = 2; i <= n + 1; ++i) out = out * minus(i);
      return out;
    }
    case Series::TwistedA: {
      BigUint out = qpow(n * (n + 1) / 2);
      for (uint64_t i = 2; i <= n + 1; ++i) out = out * (i % 2 == 0 ? minus(i) : plus(i));
      return out;
    }
    case Series::B:
    case Series::C: {
      BigUint out = qpow(n * n);
      for (uint64_t i = 1; i <= n; ++i) out = out * minus(2 * i);
      return out;
    }
    case Series::D: {
      BigUint out = qpow(n * (n - 1)) * minus(n);
      for (uint64_t i = 1; i <= n - 1; ++i) out = out * minus(2 * i);
      return out;
    }
    case Series::TwistedD: {
      BigUint out = qpow(n * (n - 1)) * plus(n);
      for (uint64_t i = 1; i <= n - 1; ++i) out = out * minus(2 * i);
      return out;
    }
    case Series::TripleD4:
      return qpow(12) * (qpow(8) + qpow(4) + one) * minus(6) * minus(2);
    case Series::G2:
      return qpow(6) * minus(6) * minus(2);
    case Series::F4:
      return qpow(24) * minus(2) * minus(6) * minus(8) * minus(12);
    case Series::E6: {
      BigUint out = qpow(36);
      for (uint64_t d : {2, 5, 6, 8, 9, 12}) out = out * minus(d);
      return out;
    }
    case Series::TwistedE6:
      return qpow(36) * minus(2) * plus(5) * minus(6) * minus(8) * plus(9) * minus(12);
    case Series::E7: {
      BigUint out = qpow(63);
      for (uint64_t d : {2, 6, 8, 10, 12, 14, 18}) out = out * minus(d);
      return out;
    }
    case Series::E8: {
      BigUint out = qpow(120);
      for (uint64_t d : {2, 8, 12, 14, 18, 20, 24, 30}) out = out * minus(d);
      return out;
    }
  }
  throw InvalidArgument("unreachable series");
}

uint32_t center_order(const LieTypeSpec& spec) {
  validate_spec(spec);
  const uint64_t n = uint64_t(spec.rank);
  switch (spec.series) {
    case Series::A: return gcd_with_q_power(n + 1, spec, 1, -1);
    case Series::TwistedA: return gcd_with_q_power(n + 1, spec, 1, +1);
    case Series::B:
    case Series::C:
    case Series::E7: return gcd_with_q_power(2, spec, 1, -1);
    case Series::D: return gcd_with_q_power(4, spec, n, -1);
    case Series::TwistedD: return gcd_with_q_power(4, spec, n, +1);
    case Series::E6: return gcd_with_q_power(3, spec, 1, -1);
    case Series::TwistedE6: return gcd_with_q_power(3, spec, 1, +1);
    case Series::TripleD4:
    case Series::G2:
    case Series::F4:
    case Series::E8: return 1;
  }
  throw InvalidArgument("unreachable series");
}

BigUint order_simple(const LieTypeSpec& spec) {
  auto [quot, rem] = order_simply_connected(spec).divmod(BigUint(center_order(spec)));
  if (!rem.is_zero())
    throw InvalidArgument("center does not divide the simply connected order for " +
                          spec.display());
  return quot;
}

namespace {

const Series kAllSeries[] = {Series::A, Series::TwistedA, Series::B,  Series::C,
                             Series::D, Series::TwistedD, Series::TripleD4, Series::G2,
                             Series::F4, Series::E6, Series::TwistedE6, Series::E7, Series::E8};

// Walks every spec with order_simple <= bound. Orders are strictly
// increasing in f at fixed (series, rank) and in rank at f = 1, so both
// loops cut off provably.
template <typename Fn>
void enumerate_specs(uint64_t ell, const BigUint& bound, Fn&& visit) {
  for (Series s : kAllSeries) {
    SeriesInfo info = series_info(s);
    for (int rank = info.min_rank;; ++rank) {
      LieTypeSpec base{s, rank, ell, 1};
      if (order_simple(base) > bound) break;
      for (uint32_t f = 1;; ++f) {
        LieTypeSpec spec{s, rank, ell, f};
        BigUint order = order_simple(spec);
        if (order > bound) break;
        visit(spec, std::move(order));
      }
      if (info.fixed_rank != 0) break;  // single rank
    }
  }
}

void sort_witnesses(OrderWitnesses& w) {
  std::sort(w.lie.begin(), w.lie.end());
}

}  // namespace

SigmaCatalogue sigma_catalogue(uint64_t ell, const BigUint& bound) {
  if (ell < 5 || !is_prime_u64(ell))
    throw InvalidEll("ell must be a prime >= 5, got " + std::to_string(ell));

  std::map<BigUint, OrderWitnesses> orders;
  if (BigUint(ell) <= bound) orders[BigUint(ell)].cyclic = true;
  enumerate_specs(ell, bound, [&](const LieTypeSpec& spec, BigUint order) {
    orders[std::move(order)].lie.push_back(spec);
  });

  SigmaCatalogue cat;
  cat.ell = ell;
  cat.bound = bound;
  for (auto& [order, witnesses] : orders) {
    sort_witnesses(witnesses);
    cat.entries.push_back({order, witnesses});
  }
  return cat;
}

ArtinReport artin_disjoint(uint64_t ell1, uint64_t ell2, const BigUint& bound) {
  if (ell1 == ell2)
    throw SamePrime("artin_disjoint needs two distinct primes, got " + std::to_string(ell1) +
                    " twice");
  SigmaCatalogue c1 = sigma_catalogue(ell1, bound);
  SigmaCatalogue c2 = sigma_catalogue(ell2, bound);

  ArtinReport report;
  report.ell1 = ell1;
  report.ell2 = ell2;
  report.bound = bound;
  size_t i = 0, j = 0;
  while (i < c1.entries.size() && j < c2.entries.size()) {
    auto cmp = c1.entries[i].order <=> c2.entries[j].order;
    if (cmp == std::strong_ordering::less) {
      ++i;
    } else if (cmp == std::strong_ordering::greater) {
      ++j;
    } else {
      report.collisions.push_back(
          {c1.entries[i].order, c1.entries[i].witnesses, c2.entries[j].witnesses});
      ++i;
      ++j;
    }
  }
  report.disjoint = report.collisions.empty();
  return report;
}

OrderWitnesses identify_simple_by_order(const BigUint& order, uint64_t ell) {
  if (ell < 5 || !is_prime_u64(ell))
    throw InvalidEll("ell must be a prime >= 5, got " + std::to_string(ell));
  OrderWitnesses out;
  if (order == BigUint(ell)) out.cyclic = true;
  enumerate_specs(ell, order, [&](const LieTypeSpec& spec, BigUint candidate) {
    if (candidate == order) out.lie.push_back(spec);
  });
  sort_witnesses(out);
  return out;
}

}  // namespace famind
