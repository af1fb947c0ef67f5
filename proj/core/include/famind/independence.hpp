#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "famind/factors.hpp"
#include "famind/group.hpp"
#include "famind/hom.hpp"
#include "famind/jordan.hpp"

namespace famind {

// A common domain together with an indexed list of homomorphisms out of it;
// the object the independence criteria speak about.
struct HomFamily {
  FiniteGroup domain;
  std::vector<GroupHom> homs;
  std::vector<std::string> labels;
};

// Validates shape: at least one hom, all sharing `domain`, one label each.
HomFamily make_family(FiniteGroup domain, std::vector<GroupHom> homs,
                      std::vector<std::string> labels);

// Replaces every codomain by the image, so all homs become surjective. The
// criteria are stated for surjective families; every analysis runs this
// first.
HomFamily normalize_family(const HomFamily& family);

// The image of the domain under the tuple map x -> (rho_1(x), ..., rho_k(x)).
// Small by construction (at most |domain| tuples); the ambient product is
// never materialized, only its order is tracked.
struct DiagonalImage {
  std::vector<std::vector<uint32_t>> tuples;  // sorted lexicographically
  BigUint product_order;                      // prod over i of |rho_i(domain)|

  size_t order() const { return tuples.size(); }
  bool contains(const std::vector<uint32_t>& tuple) const;
};

DiagonalImage diagonal_image(const HomFamily& family);

// (R): the diagonal image equals the full product of images.
bool check_R(const HomFamily& family);

// Index of the diagonal image in the product of images; 1 exactly when (R)
// holds.
BigUint ro_index(const HomFamily& family);

// Kernels N_i and the complements N'_i = intersection of N_j over j != i
// (the whole group when the family has a single hom).
std::vector<Subgroup> family_kernels(const HomFamily& family);
std::vector<Subgroup> family_coker_intersections(const HomFamily& family);

// (R1): Gamma = N_i . N'_i for every i.  (R2): Gamma is generated by the
// N'_i. Both are equivalent to (R); the equivalence is a tested invariant.
bool check_R1(const HomFamily& family);
bool check_R2(const HomFamily& family);

// Gamma' = subgroup generated by all N'_i, the largest subgroup on which
// the restricted family is independent.
Subgroup independence_subgroup(const HomFamily& family);

// Whether the restriction of the family to the given member set satisfies
// (R), computed by counting restricted images and diagonal tuples. Cheap:
// nothing is materialized as a group.
bool restriction_satisfies_R(const HomFamily& family, std::span<const uint32_t> members);

// Goursat obstruction for the pair (i, j): when the pair image is not the
// full product, a nontrivial common quotient A with surjections f_i, f_j
// satisfying f_i o rho_i = f_j o rho_j. Built as A = image_i / rho_i(ker rho_j)
// with the induced maps; empty when the pair is independent.
struct GoursatWitness {
  FiniteGroup common_quotient;  // A, nontrivial
  GroupHom f_i;                 // image_i -> A
  GroupHom f_j;                 // image_j -> A
};

std::optional<GoursatWitness> goursat_witness(const HomFamily& family, size_t i, size_t j);

// The simple-quotient disjointness criterion. `applies` means condition (D)
// holds certifiably: no two indices share a simple quotient, and no
// comparison involved an unidentified label of equal order (those are
// flagged and conservatively void the certificate). When it applies the
// family is independent (the criterion is sufficient, not necessary).
struct Lemma2Verdict {
  struct SharedFactor {
    size_t i = 0, j = 0;
    SimpleFactorId factor;
  };

  bool applies = false;
  enum class Conclusion { Independent, Inconclusive } conclusion = Conclusion::Inconclusive;
  std::vector<SharedFactor> collisions;
  std::vector<SharedFactor> flagged;  // order-equal comparisons with unidentified labels
  std::vector<std::vector<SimpleFactorId>> quotient_sets;  // per index
  bool r_holds = false;  // actual check_R value, recorded for the soundness suite
};

Lemma2Verdict lemma2_verdict(const HomFamily& family);

// User-designated "inertia" subgroups: per place a residue characteristic
// and, per family label, a generating set (element ids of the domain).
// Labels absent at a place designate the trivial subgroup there.
struct InertiaPlace {
  std::string place;
  uint64_t residue_char = 0;
  std::map<std::string, std::vector<uint32_t>> generators_per_label;
};

struct InertiaAssignment {
  std::vector<InertiaPlace> places;
};

// The semistable decomposition at one index ell: A = image of the normal
// closure of the inertia at places with p_v = ell; G+ = subgroup generated
// by the ell-Sylows of the image; H = image/(G+ . A). lemma5_ok records that
// every designated inertia subgroup dies in H.
struct SemistableIndexReport {
  std::string label;
  uint64_t ell = 0;
  size_t image_order = 0;
  Subgroup a_part;     // A_ell, inside the image group
  Subgroup plus_part;  // G+_ell
  FiniteGroup h_group;
  bool lemma5_ok = false;
  JordanResult h_jordan;
};

struct SemistableReport {
  std::vector<SemistableIndexReport> per_index;
  bool lemma4_contains = false;  // diagonal image contains the direct sum of the A_ell
};

// Requires all homs surjective (NotSurjective otherwise; run
// normalize_family first) and labels that parse as primes. Throws
// SemistabilityViolated when an inertia image at p_v != ell is not an
// ell-group.
SemistableReport semistable_decompose(const HomFamily& family,
                                      const InertiaAssignment& inertia);

// The finite truncation of the cyclotomic counterexample: Gamma cyclic of
// order p^M with the canonical reductions onto cyclic groups of order p^i,
// i = 1..M. Its (RO) index is p^(M(M-1)/2), unbounded in M.
HomFamily truncation_scenario(uint64_t p, int m, size_t order_cap = kDefaultOrderCap);

// Everything above bundled into the full verdict on one family.
struct IndependenceReport {
  uint64_t seed = 0;
  std::vector<std::string> labels;
  size_t domain_order = 0;
  std::vector<size_t> image_orders;
  bool satisfies_r = false;
  BigUint product_order;
  BigUint diagonal_order;
  BigUint ro_index;
  bool r1 = false, r2 = false;
  Subgroup gamma_prime;
  bool gamma_prime_restriction_independent = false;
  Lemma2Verdict lemma2;

  struct PairSummary {
    size_t i = 0, j = 0;
    bool independent = false;
    size_t common_quotient_order = 0;  // |A| when dependent
  };
  std::vector<PairSummary> pairs;
};

IndependenceReport analyze_family(const HomFamily& family, uint64_t seed);

}  // namespace famind
