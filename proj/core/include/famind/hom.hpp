#pragma once

#include <memory>
#include <vector>

#include "famind/group.hpp"

namespace famind {

// A verified homomorphism between two enumerated groups, stored as one
// codomain element per domain generator. The full element map is
// materialized lazily (thread-safe, computed once) since many analyses only
// need generator images.
class GroupHom {
public:
  GroupHom() = default;

  const FiniteGroup& domain() const { return domain_; }
  const FiniteGroup& codomain() const { return codomain_; }
  const std::vector<uint32_t>& generator_images() const { return gen_images_; }

  uint32_t map(uint32_t domain_id) const { return element_map()[domain_id]; }
  const std::vector<uint32_t>& element_map() const;

  bool is_surjective() const;

private:
  GroupHom(FiniteGroup domain, FiniteGroup codomain, std::vector<uint32_t> gen_images);

  FiniteGroup domain_;
  FiniteGroup codomain_;
  std::vector<uint32_t> gen_images_;

  struct Lazy;
  std::shared_ptr<Lazy> lazy_;

  friend GroupHom make_hom_from_ids(const FiniteGroup&, const FiniteGroup&,
                                    std::vector<uint32_t>);
  friend GroupHom make_hom_unchecked(const FiniteGroup&, const FiniteGroup&,
                                     std::vector<uint32_t>);
};

// Builds a homomorphism from generator images, or throws NotAHomomorphism
// with a collision witness. Verification is the graph-subgroup test: the
// pairs (g_i, image_i) generate a subgroup of domain x codomain, which is
// the graph of a homomorphism exactly when it is functional over the domain.
GroupHom make_hom(const FiniteGroup& domain, const FiniteGroup& codomain,
                  const std::vector<Perm>& generator_images);
GroupHom make_hom_from_ids(const FiniteGroup& domain, const FiniteGroup& codomain,
                           std::vector<uint32_t> generator_image_ids);

// For maps that are homomorphisms by construction (projections,
// corestrictions); skips the graph test.
GroupHom make_hom_unchecked(const FiniteGroup& domain, const FiniteGroup& codomain,
                            std::vector<uint32_t> generator_image_ids);

GroupHom identity_hom(const FiniteGroup& g);
GroupHom compose(const GroupHom& outer, const GroupHom& inner);  // outer o inner

Subgroup kernel(const GroupHom& h);
Subgroup image(const GroupHom& h);

// Same map with the codomain shrunk to the image, whose generators are
// exactly the images of the domain generators (in order).
GroupHom corestrict_to_image(const GroupHom& h);

// Restriction to a subgroup of the domain, materialized as its own group.
GroupHom restrict_hom(const GroupHom& h, const Subgroup& sub);

struct QuotientResult {
  FiniteGroup group;
  GroupHom projection;
};

// Coset group under the left action of G on cosets of N, with canonical
// representatives (the least element of each coset) ordering the points.
// Quotient by the trivial subgroup returns G itself with the identity map.
QuotientResult quotient(const FiniteGroup& g, const Subgroup& n);

// Exhaustive multiplicativity check; test oracle, quadratic in |domain|.
bool hom_is_multiplicative(const GroupHom& h);

}  // namespace famind
