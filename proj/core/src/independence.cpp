#include "famind/independence.hpp"

#include <algorithm>
#include <set>

#include "famind/corpus.hpp"  // cyclic_group
#include "famind/errors.hpp"

namespace famind {

HomFamily make_family(FiniteGroup domain, std::vector<GroupHom> homs,
                      std::vector<std::string> labels) {
  if (homs.empty()) throw InvalidArgument("a family needs at least one homomorphism");
  if (labels.size() != homs.size())
    throw InvalidArgument("expected one label per homomorphism");
  for (const GroupHom& h : homs)
    if (!h.domain().same_object(domain))
      throw InvalidArgument("all homomorphisms must share the family domain");
  return HomFamily{std::move(domain), std::move(homs), std::move(labels)};
}

HomFamily normalize_family(const HomFamily& family) {
  std::vector<GroupHom> homs;
  homs.reserve(family.homs.size());
  for (const GroupHom& h : family.homs) homs.push_back(corestrict_to_image(h));
  return HomFamily{family.domain, std::move(homs), family.labels};
}

bool DiagonalImage::contains(const std::vector<uint32_t>& tuple) const {
  return std::binary_search(tuples.begin(), tuples.end(), tuple);
}

DiagonalImage diagonal_image(const HomFamily& family) {
  const size_t k = family.homs.size();
  std::vector<const std::vector<uint32_t>*> maps;
  maps.reserve(k);
  for (const GroupHom& h : family.homs) maps.push_back(&h.element_map());

  std::set<std::vector<uint32_t>> tuples;
  std::vector<uint32_t> tuple(k);
  for (uint32_t x = 0; x < family.domain.order(); ++x) {
    for (size_t i = 0; i < k; ++i) tuple[i] = (*maps[i])[x];
    tuples.insert(tuple);
  }

  DiagonalImage out;
  out.tuples.assign(tuples.begin(), tuples.end());
  out.product_order = BigUint(1);
  for (const GroupHom& h : family.homs)
    out.product_order = out.product_order * BigUint(image(h).order());
  return out;
}

bool check_R(const HomFamily& family) {
  DiagonalImage diag = diagonal_image(family);
  return BigUint(diag.order()) == diag.product_order;
}

BigUint ro_index(const HomFamily& family) {
  DiagonalImage diag = diagonal_image(family);
  auto [quot, rem] = diag.product_order.divmod(BigUint(diag.order()));
  // The diagonal image is a subgroup of the product of images, so the
  // division is exact.
  if (!rem.is_zero())
    throw InvalidArgument("diagonal order does not divide the product order");
  return quot;
}

std::vector<Subgroup> family_kernels(const HomFamily& family) {
  std::vector<Subgroup> out;
  out.reserve(family.homs.size());
  for (const GroupHom& h : family.homs) out.push_back(kernel(h));
  return out;
}

std::vector<Subgroup> family_coker_intersections(const HomFamily& family) {
  std::vector<Subgroup> kernels = family_kernels(family);
  std::vector<Subgroup> out;
  out.reserve(kernels.size());
  for (size_t i = 0; i < kernels.size(); ++i) {
    Subgroup acc = whole_subgroup(family.domain);
    for (size_t j = 0; j < kernels.size(); ++j)
      if (j != i) acc = intersect(acc, kernels[j]);
    out.push_back(std::move(acc));
  }
  return out;
}

bool check_R1(const HomFamily& family) {
  std::vector<Subgroup> kernels = family_kernels(family);
  std::vector<Subgroup> primes = family_coker_intersections(family);
  for (size_t i = 0; i < kernels.size(); ++i)
    if (product_set_size(kernels[i], primes[i]) != family.domain.order()) return false;
  return true;
}

bool check_R2(const HomFamily& family) {
  return independence_subgroup(family).is_whole_group();
}

Subgroup independence_subgroup(const HomFamily& family) {
  std::vector<uint32_t> seed;
  for (const Subgroup& np : family_coker_intersections(family))
    seed.insert(seed.end(), np.members().begin(), np.members().end());
  return subgroup_generated(family.domain, seed);
}

bool restriction_satisfies_R(const HomFamily& family, std::span<const uint32_t> members) {
  const size_t k = family.homs.size();
  std::vector<const std::vector<uint32_t>*> maps;
  maps.reserve(k);
  for (const GroupHom& h : family.homs) maps.push_back(&h.element_map());

  std::set<std::vector<uint32_t>> tuples;
  BigUint product(1);
  std::vector<uint32_t> tuple(k);
  std::set<uint32_t> image_set;
  for (size_t i = 0; i < k; ++i) {
    image_set.clear();
    for (uint32_t x : members) image_set.insert((*maps[i])[x]);
    product = product * BigUint(image_set.size());
  }
  for (uint32_t x : members) {
    for (size_t i = 0; i < k; ++i) tuple[i] = (*maps[i])[x];
    tuples.insert(tuple);
  }
  return BigUint(tuples.size()) == product;
}

std::optional<GoursatWitness> goursat_witness(const HomFamily& family, size_t i, size_t j) {
  if (i >= family.homs.size() || j >= family.homs.size() || i == j)
    throw InvalidArgument("goursat_witness needs two distinct valid indices");

  GroupHom rho_i = corestrict_to_image(family.homs[i]);
  GroupHom rho_j = corestrict_to_image(family.homs[j]);
  const FiniteGroup& img_i = rho_i.codomain();
  const FiniteGroup& img_j = rho_j.codomain();

  // Pair image order: |image_i| * |image_j| / |A| by Goursat; independent
  // exactly when the pair image fills the product.
  std::set<std::pair<uint32_t, uint32_t>> pair_image;
  const auto& map_i = rho_i.element_map();
  const auto& map_j = rho_j.element_map();
  for (uint32_t x = 0; x < family.domain.order(); ++x)
    pair_image.insert({map_i[x], map_j[x]});
  if (pair_image.size() == img_i.order() * img_j.order()) return std::nullopt;

  // A = image_i / rho_i(ker rho_j), with f_j induced through any lift.
  Subgroup ker_j = kernel(rho_j);
  std::vector<uint32_t> pushed;
  for (uint32_t x : ker_j.members()) pushed.push_back(map_i[x]);
  std::sort(pushed.begin(), pushed.end());
  pushed.erase(std::unique(pushed.begin(), pushed.end()), pushed.end());
  Subgroup obstruction = subgroup_from_members(img_i, pushed);

  QuotientResult q = quotient(img_i, obstruction);
  GroupHom f_i = q.projection;

  // f_j(g) = f_i(rho_i(x)) for any lift x of g through rho_j; well-defined
  // because rho_i(ker rho_j) was quotiented out.
  std::vector<uint32_t> f_j_images;
  f_j_images.reserve(img_j.generator_ids().size());
  for (uint32_t gen : img_j.generator_ids()) {
    uint32_t lift = UINT32_MAX;
    for (uint32_t x = 0; x < family.domain.order(); ++x)
      if (map_j[x] == gen) {
        lift = x;
        break;
      }
    f_j_images.push_back(f_i.map(map_i[lift]));
  }
  GroupHom f_j = make_hom_from_ids(img_j, q.group, std::move(f_j_images));

  return GoursatWitness{q.group, std::move(f_i), std::move(f_j)};
}

Lemma2Verdict lemma2_verdict(const HomFamily& family) {
  Lemma2Verdict verdict;
  const size_t k = family.homs.size();
  verdict.quotient_sets.reserve(k);
  for (const GroupHom& h : family.homs) {
    FiniteGroup img = corestrict_to_image(h).codomain();
    verdict.quotient_sets.push_back(simple_quotients(img));
  }

  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i + 1; j < k; ++j) {
      for (const SimpleFactorId& a : verdict.quotient_sets[i]) {
        for (const SimpleFactorId& b : verdict.quotient_sets[j]) {
          if (a.order != b.order) continue;  // distinct orders certify distinct groups
          bool unidentified = a.kind == SimpleFactorId::Kind::Unidentified ||
                              b.kind == SimpleFactorId::Kind::Unidentified;
          if (unidentified) {
            // Order-equal but not certifiably isomorphic or distinct.
            verdict.flagged.push_back({i, j, a});
          } else if (a.kind == b.kind) {
            verdict.collisions.push_back({i, j, a});
          } else {
            // Kind mismatch at equal order (cyclic vs Lie cannot happen;
            // conservative all the same).
            verdict.flagged.push_back({i, j, a});
          }
        }
      }
    }
  }

  verdict.applies = verdict.collisions.empty() && verdict.flagged.empty();
  verdict.r_holds = check_R(family);
  verdict.conclusion = verdict.applies ? Lemma2Verdict::Conclusion::Independent
                                       : Lemma2Verdict::Conclusion::Inconclusive;
  return verdict;
}

namespace {

uint64_t parse_prime_label(const std::string& label) {
  uint64_t value = 0;
  if (label.empty() || label.size() > 9)
    throw InvalidArgument("family label '" + label + "' is not a desk-scale prime");
  for (char c : label) {
    if (c < '0' || c > '9')
      throw InvalidArgument("family label '" + label + "' is not a prime");
    value = value * 10 + uint64_t(c - '0');
  }
  if (!is_prime_u64(value))
    throw InvalidArgument("family label '" + label + "' is not a prime");
  return value;
}

// Image of the subgroup generated by `domain_gens` under the hom, as a
// subgroup of the codomain.
Subgroup image_of_generated(const GroupHom& h, std::span<const uint32_t> domain_gens) {
  std::vector<uint32_t> image_gens;
  image_gens.reserve(domain_gens.size());
  for (uint32_t g : domain_gens) image_gens.push_back(h.map(g));
  return subgroup_generated(h.codomain(), image_gens);
}

bool order_is_power_of(size_t order, uint64_t p) {
  while (order % p == 0) order /= p;
  return order == 1;
}

}  // namespace

SemistableReport semistable_decompose(const HomFamily& family,
                                      const InertiaAssignment& inertia) {
  const size_t k = family.homs.size();
  for (size_t i = 0; i < k; ++i)
    if (!family.homs[i].is_surjective())
      throw NotSurjective("hom '" + family.labels[i] +
                          "' is not surjective; normalize the family first");

  for (const InertiaPlace& place : inertia.places) {
    if (place.residue_char == 0 || !is_prime_u64(place.residue_char))
      throw InvalidArgument("place '" + place.place + "' has non-prime residue characteristic");
    for (const auto& [label, gens] : place.generators_per_label) {
      if (std::find(family.labels.begin(), family.labels.end(), label) == family.labels.end())
        throw InvalidArgument("place '" + place.place + "' designates unknown label '" + label +
                              "'");
      for (uint32_t id : gens)
        if (id >= family.domain.order())
          throw ElementNotInGroup("inertia generator id out of range at place '" + place.place +
                                  "'");
    }
  }

  SemistableReport report;
  report.per_index.reserve(k);

  for (size_t i = 0; i < k; ++i) {
    const std::string& label = family.labels[i];
    uint64_t ell = parse_prime_label(label);
    const GroupHom& rho = family.homs[i];
    const FiniteGroup& g_ell = rho.codomain();

    std::vector<uint32_t> a_seed;  // domain elements, inertia at p_v = ell
    for (const InertiaPlace& place : inertia.places) {
      auto it = place.generators_per_label.find(label);
      if (it == place.generators_per_label.end()) continue;
      if (place.residue_char == ell) {
        a_seed.insert(a_seed.end(), it->second.begin(), it->second.end());
      } else {
        // (ST2) mirror: away from the residue characteristic the inertia
        // image must be an ell-group.
        Subgroup img = image_of_generated(rho, it->second);
        if (!order_is_power_of(img.order(), ell))
          throw SemistabilityViolated("inertia image at place '" + place.place +
                                      "' (p=" + std::to_string(place.residue_char) +
                                      ") has order " + std::to_string(img.order()) +
                                      ", not a power of " + std::to_string(ell));
      }
    }

    Subgroup closure = normal_closure(family.domain, a_seed);
    Subgroup a_part = image_of_generated(rho, closure.generator_ids());
    Subgroup plus_part = plus_subgroup(g_ell, ell);
    Subgroup cut = join(plus_part, a_part);  // G+ . A, normal
    QuotientResult h = quotient(g_ell, cut);

    bool lemma5_ok = true;
    for (const InertiaPlace& place : inertia.places) {
      auto it = place.generators_per_label.find(label);
      if (it == place.generators_per_label.end()) continue;
      for (uint32_t id : it->second)
        if (!cut.contains(rho.map(id))) lemma5_ok = false;
    }

    SemistableIndexReport idx;
    idx.label = label;
    idx.ell = ell;
    idx.image_order = g_ell.order();
    idx.a_part = std::move(a_part);
    idx.plus_part = std::move(plus_part);
    idx.h_group = h.group;
    idx.lemma5_ok = lemma5_ok;
    idx.h_jordan = jordan_index(h.group);
    report.per_index.push_back(std::move(idx));
  }

  // Lemma-4 containment at finite level: the diagonal image contains each
  // A_ell embedded in its own coordinate, hence their direct sum.
  DiagonalImage diag = diagonal_image(family);
  report.lemma4_contains = true;
  std::vector<uint32_t> tuple(k);
  for (size_t i = 0; i < k && report.lemma4_contains; ++i) {
    for (size_t j = 0; j < k; ++j) tuple[j] = family.homs[j].codomain().identity();
    for (uint32_t a : report.per_index[i].a_part.members()) {
      tuple[i] = a;
      if (!diag.contains(tuple)) {
        report.lemma4_contains = false;
        break;
      }
    }
  }
  return report;
}

HomFamily truncation_scenario(uint64_t p, int m, size_t order_cap) {
  if (p < 3 || !is_prime_u64(p) || p % 2 == 0)
    throw InvalidArgument("truncation_scenario needs an odd prime, got " + std::to_string(p));
  if (m < 1) throw InvalidArgument("truncation_scenario needs M >= 1");

  uint64_t top = 1;
  for (int i = 0; i < m; ++i) {
    top *= p;
    if (top > order_cap)
      throw CapExceeded("p^M = " + std::to_string(top) + " passes the order cap");
  }

  FiniteGroup domain = cyclic_group(size_t(top), order_cap);
  std::vector<GroupHom> homs;
  std::vector<std::string> labels;
  uint64_t target = 1;
  for (int i = 1; i <= m; ++i) {
    target *= p;
    FiniteGroup codomain = cyclic_group(size_t(target), order_cap);
    // Generator to generator; a homomorphism since the image order divides
    // the domain generator order.
    homs.push_back(
        make_hom_unchecked(domain, codomain, std::vector<uint32_t>(codomain.generator_ids())));
    labels.push_back(std::to_string(i));
  }
  return make_family(std::move(domain), std::move(homs), std::move(labels));
}

IndependenceReport analyze_family(const HomFamily& family, uint64_t seed) {
  HomFamily norm = normalize_family(family);
  const size_t k = norm.homs.size();

  IndependenceReport report;
  report.seed = seed;
  report.labels = norm.labels;
  report.domain_order = norm.domain.order();
  for (const GroupHom& h : norm.homs) report.image_orders.push_back(h.codomain().order());

  DiagonalImage diag = diagonal_image(norm);
  report.product_order = diag.product_order;
  report.diagonal_order = BigUint(diag.order());
  report.ro_index = report.product_order.divmod(report.diagonal_order).quot;
  report.satisfies_r = report.ro_index.is_one();
  report.r1 = check_R1(norm);
  report.r2 = check_R2(norm);

  report.gamma_prime = independence_subgroup(norm);
  report.gamma_prime_restriction_independent =
      restriction_satisfies_R(norm, report.gamma_prime.members());

  report.lemma2 = lemma2_verdict(norm);

  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i + 1; j < k; ++j) {
      IndependenceReport::PairSummary pair;
      pair.i = i;
      pair.j = j;
      auto witness = goursat_witness(norm, i, j);
      pair.independent = !witness.has_value();
      pair.common_quotient_order = witness ? witness->common_quotient.order() : 0;
      report.pairs.push_back(pair);
    }
  }
  return report;
}

}  // namespace famind
