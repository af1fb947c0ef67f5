#include "famind/hom.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "famind/errors.hpp"

namespace famind {

struct GroupHom::Lazy {
  std::once_flag once;
  std::vector<uint32_t> map;
};

GroupHom::GroupHom(FiniteGroup domain, FiniteGroup codomain, std::vector<uint32_t> gen_images)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      gen_images_(std::move(gen_images)),
      lazy_(std::make_shared<Lazy>()) {}

const std::vector<uint32_t>& GroupHom::element_map() const {
  std::call_once(lazy_->once, [&] {
    const auto& gens = domain_.generator_ids();
    std::vector<uint32_t> map(domain_.order(), UINT32_MAX);
    std::vector<uint32_t> worklist;
    map[domain_.identity()] = codomain_.identity();
    worklist.push_back(domain_.identity());
    for (size_t pos = 0; pos < worklist.size(); ++pos) {
      uint32_t x = worklist[pos];
      for (size_t k = 0; k < gens.size(); ++k) {
        uint32_t y = domain_.mul(x, gens[k]);
        if (map[y] == UINT32_MAX) {
          map[y] = codomain_.mul(map[x], gen_images_[k]);
          worklist.push_back(y);
        }
      }
    }
    lazy_->map = std::move(map);
  });
  return lazy_->map;
}

bool GroupHom::is_surjective() const { return image(*this).order() == codomain_.order(); }

GroupHom make_hom_from_ids(const FiniteGroup& domain, const FiniteGroup& codomain,
                           std::vector<uint32_t> generator_image_ids) {
  const auto& gens = domain.generator_ids();
  if (generator_image_ids.size() != gens.size())
    throw InvalidArgument("expected " + std::to_string(gens.size()) +
                          " generator images, got " +
                          std::to_string(generator_image_ids.size()));
  for (uint32_t id : generator_image_ids)
    if (id >= codomain.order())
      throw ElementNotInGroup("generator image id " + std::to_string(id) + " out of range");

  // Graph-subgroup test, explored pair by pair. The reachable pairs are the
  // subgroup generated by (g_i, image_i); a second image for an already-seen
  // domain element is exactly a graph collision.
  std::vector<uint32_t> map(domain.order(), UINT32_MAX);
  std::vector<uint32_t> worklist;
  map[domain.identity()] = codomain.identity();
  worklist.push_back(domain.identity());
  for (size_t pos = 0; pos < worklist.size(); ++pos) {
    uint32_t x = worklist[pos];
    for (size_t k = 0; k < gens.size(); ++k) {
      uint32_t y = domain.mul(x, gens[k]);
      uint32_t image_y = codomain.mul(map[x], generator_image_ids[k]);
      if (map[y] == UINT32_MAX) {
        map[y] = image_y;
        worklist.push_back(y);
      } else if (map[y] != image_y) {
        throw NotAHomomorphism(
            "generator images extend to no homomorphism: domain element " +
            perm_to_string(domain.perm(y)) + " would need images " +
            perm_to_string(codomain.perm(map[y])) + " and " +
            perm_to_string(codomain.perm(image_y)));
      }
    }
  }
  return GroupHom(domain, codomain, std::move(generator_image_ids));
}

GroupHom make_hom(const FiniteGroup& domain, const FiniteGroup& codomain,
                  const std::vector<Perm>& generator_images) {
  std::vector<uint32_t> ids;
  ids.reserve(generator_images.size());
  for (const Perm& p : generator_images) ids.push_back(codomain.require(p));
  return make_hom_from_ids(domain, codomain, std::move(ids));
}

GroupHom make_hom_unchecked(const FiniteGroup& domain, const FiniteGroup& codomain,
                            std::vector<uint32_t> generator_image_ids) {
  return GroupHom(domain, codomain, std::move(generator_image_ids));
}

GroupHom identity_hom(const FiniteGroup& g) {
  return make_hom_unchecked(g, g, g.generator_ids());
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  if (!inner.codomain().same_object(outer.domain()))
    throw InvalidArgument("compose: inner codomain is not the outer domain");
  std::vector<uint32_t> images;
  images.reserve(inner.generator_images().size());
  for (uint32_t id : inner.generator_images()) images.push_back(outer.map(id));
  return make_hom_unchecked(inner.domain(), outer.codomain(), std::move(images));
}

Subgroup kernel(const GroupHom& h) {
  const auto& map = h.element_map();
  std::vector<uint32_t> members;
  uint32_t target = h.codomain().identity();
  for (uint32_t x = 0; x < map.size(); ++x)
    if (map[x] == target) members.push_back(x);
  return subgroup_from_members(h.domain(), members);
}

Subgroup image(const GroupHom& h) {
  return subgroup_generated(h.codomain(), h.generator_images());
}

GroupHom corestrict_to_image(const GroupHom& h) {
  if (h.is_surjective()) return h;
  std::vector<Perm> gen_perms;
  gen_perms.reserve(h.generator_images().size());
  for (uint32_t id : h.generator_images()) {
    auto s = h.codomain().perm(id);
    gen_perms.emplace_back(s.begin(), s.end());
  }
  FiniteGroup img = make_perm_group_impl(h.codomain().degree(), gen_perms,
                                         h.codomain().order(), h.codomain().matrix_tag());
  std::vector<uint32_t> ids;
  ids.reserve(gen_perms.size());
  for (const Perm& p : gen_perms) ids.push_back(img.require(p));
  return make_hom_unchecked(h.domain(), img, std::move(ids));
}

GroupHom restrict_hom(const GroupHom& h, const Subgroup& sub) {
  if (!sub.parent().same_object(h.domain()))
    throw InvalidArgument("restrict_hom: subgroup does not live in the domain");
  FiniteGroup small = sub.as_group();
  std::vector<uint32_t> images;
  images.reserve(small.generator_ids().size());
  for (uint32_t gen : small.generator_ids()) {
    uint32_t parent_id = h.domain().require(small.perm(gen));
    images.push_back(h.map(parent_id));
  }
  return make_hom_unchecked(small, h.codomain(), std::move(images));
}

QuotientResult quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!n.parent().same_object(g))
    throw InvalidArgument("quotient: subgroup does not live in the given group");
  if (!n.is_normal()) throw NotNormal("quotient: subgroup is not normal");

  if (n.is_trivial()) return {g, identity_hom(g)};

  size_t count = g.order() / n.order();
  if (count > size_t(kMaxDegree))
    throw CapExceeded("quotient index " + std::to_string(count) +
                      " exceeds the permutation degree limit");

  // Left cosets xN; ascending scan makes the least element the
  // representative and orders the cosets canonically.
  std::vector<uint32_t> coset_of(g.order(), UINT32_MAX);
  std::vector<uint32_t> reps;
  for (uint32_t x = 0; x < g.order(); ++x) {
    if (coset_of[x] != UINT32_MAX) continue;
    uint32_t id = uint32_t(reps.size());
    reps.push_back(x);
    for (uint32_t m : n.members()) coset_of[g.mul(x, m)] = id;
  }

  std::vector<Perm> gen_perms;
  for (uint32_t gen : g.generator_ids()) {
    Perm p(count);
    for (size_t c = 0; c < count; ++c) p[c] = Point(coset_of[g.mul(gen, reps[c])]);
    gen_perms.push_back(std::move(p));
  }

  FiniteGroup q = make_perm_group(int(count), gen_perms, g.order());
  std::vector<uint32_t> images;
  images.reserve(gen_perms.size());
  for (const Perm& p : gen_perms) images.push_back(q.require(p));
  return {q, make_hom_unchecked(g, q, std::move(images))};
}

bool hom_is_multiplicative(const GroupHom& h) {
  const auto& map = h.element_map();
  size_t n = h.domain().order();
  for (uint32_t x = 0; x < n; ++x)
    for (uint32_t y = 0; y < n; ++y)
      if (map[h.domain().mul(x, y)] != h.codomain().mul(map[x], map[y])) return false;
  return true;
}

}  // namespace famind
