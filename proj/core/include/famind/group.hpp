#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace famind {

// Points of the permutation domain, 0-based internally. File formats and all
// user-facing output use 1-based images.
using Point = uint16_t;
using Perm = std::vector<Point>;

inline constexpr size_t kDefaultOrderCap = 1000000;
inline constexpr int kMaxDegree = 65535;

Perm perm_identity(int degree);
// Left-action composition: (a*b)(p) = a[b[p]], i.e. b acts first. This is the
// convention under which the column-vector action of a matrix group is a
// homomorphism into the permutations of the nonzero vectors.
Perm perm_compose(std::span<const Point> a, std::span<const Point> b);
Perm perm_inverse(std::span<const Point> a);
bool perm_is_valid(std::span<const Point> p, int degree);
std::string perm_to_string(std::span<const Point> p);  // 1-based one-line form
uint64_t perm_order(std::span<const Point> p);         // lcm of cycle lengths

// Provenance tag for groups that came from a matrix construction; carried
// along so that Jordan probes know the ambient (n, p).
struct MatrixGroupTag {
  int n = 0;
  uint64_t p = 0;
};

class Subgroup;

// An explicitly enumerated finite permutation group. Elements are stored in
// one flat table sorted lexicographically by one-line form (so the identity
// is always element 0) and are referred to by index. Immutable after
// construction; handles share the underlying table, and every operation is a
// pure function of its inputs, so concurrent reads are safe.
class FiniteGroup {
public:
  FiniteGroup() = default;

  bool valid() const { return data_ != nullptr; }
  int degree() const;
  size_t order() const;
  const std::vector<uint32_t>& generator_ids() const;
  std::span<const Point> perm(uint32_t id) const;
  uint32_t identity() const { return 0; }

  uint32_t mul(uint32_t a, uint32_t b) const;  // a*b, b acts first
  uint32_t inverse(uint32_t a) const;
  uint32_t conjugate(uint32_t g, uint32_t x) const;  // g x g^-1
  uint32_t power(uint32_t x, uint64_t e) const;
  uint64_t element_order(uint32_t x) const;

  std::optional<uint32_t> find(std::span<const Point> p) const;
  uint32_t require(std::span<const Point> p) const;  // ElementNotInGroup

  bool is_abelian() const;
  const std::optional<MatrixGroupTag>& matrix_tag() const;

  // Conjugacy classes, each sorted ascending, ordered by least member.
  const std::vector<std::vector<uint32_t>>& conjugacy_classes() const;

  // All normal subgroups as sorted member lists, ordered by (size, members).
  // Computed once per group by closing the normal closures of single
  // conjugacy classes under join.
  const std::vector<std::vector<uint32_t>>& normal_subgroup_lists() const;

  bool same_object(const FiniteGroup& other) const { return data_ == other.data_; }

private:
  struct Data;
  std::shared_ptr<const Data> data_;

  const Data& d() const;
  friend FiniteGroup make_perm_group_impl(int, const std::vector<Perm>&, size_t,
                                          std::optional<MatrixGroupTag>);
};

FiniteGroup make_perm_group(int degree, const std::vector<Perm>& generators,
                            size_t order_cap = kDefaultOrderCap);

// Internal factory that also attaches a matrix provenance tag.
FiniteGroup make_perm_group_impl(int degree, const std::vector<Perm>& generators,
                                 size_t order_cap, std::optional<MatrixGroupTag> tag);

// A subgroup is a reference to its parent plus a closed, sorted member set
// and a small reduced generating set.
class Subgroup {
public:
  Subgroup() = default;
  Subgroup(FiniteGroup parent, std::vector<uint32_t> members, std::vector<uint32_t> gens);

  const FiniteGroup& parent() const { return parent_; }
  const std::vector<uint32_t>& members() const { return members_; }
  const std::vector<uint32_t>& generator_ids() const { return gens_; }
  size_t order() const { return members_.size(); }
  bool contains(uint32_t id) const;
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole_group() const { return members_.size() == parent_.order(); }
  bool is_normal() const;
  bool is_abelian() const;

  // Materializes the subgroup as a standalone group on the same points.
  // The reduced generators are used; a matrix tag on the parent is inherited
  // (a subgroup of a matrix group is a matrix group).
  FiniteGroup as_group() const;

private:
  FiniteGroup parent_;
  std::vector<uint32_t> members_;
  std::vector<uint32_t> gens_;
};

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_subgroup(const FiniteGroup& g);

// Closure of `seed` under multiplication. The returned subgroup's generator
// list is the subsequence of seed elements that actually enlarged the
// closure, so it stays short even when seed is a full member list.
Subgroup subgroup_generated(const FiniteGroup& g, std::span<const uint32_t> seed);

// Smallest normal subgroup containing seed. Throws ElementNotInGroup if a
// seed id is out of range.
Subgroup normal_closure(const FiniteGroup& g, std::span<const uint32_t> seed);

// Wraps an already-closed member set (verified by re-closing it).
Subgroup subgroup_from_members(const FiniteGroup& g, std::span<const uint32_t> members);

Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);
size_t product_set_size(const Subgroup& a, const Subgroup& b);  // |AB|
Subgroup center(const FiniteGroup& g);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& s);

// One Sylow p-subgroup, chosen deterministically (ascending scans); the
// trivial subgroup when p does not divide |G|.
Subgroup sylow(const FiniteGroup& g, uint64_t p);

// Subgroup generated by all ell-Sylow subgroups of G, written G^+. Normal,
// and equal to the normal closure of any single Sylow ell-subgroup.
Subgroup plus_subgroup(const FiniteGroup& g, uint64_t ell);

// Checks H = I . N_H(P) for P a Sylow p-subgroup of the normal subgroup I.
// The Frattini argument says this always holds; the operation exists as a
// self-test oracle, so it reports the pieces instead of asserting.
struct FrattiniReport {
  bool holds = false;
  size_t sylow_order = 0;
  size_t normalizer_order = 0;
  size_t product_size = 0;
};
FrattiniReport frattini_check(const FiniteGroup& h, const Subgroup& i, uint64_t p);

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g);
std::vector<Subgroup> maximal_normal_subgroups(const FiniteGroup& g);

// Every subgroup, by breadth-first single-element extensions. Exhaustive;
// meant for small groups only (the independence maximality checks cap at
// order 100).
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

std::vector<uint64_t> prime_factorization(uint64_t n);  // with multiplicity, ascending
bool is_prime_u64(uint64_t n);

}  // namespace famind
