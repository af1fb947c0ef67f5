#include "famind/group.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <unordered_set>

#include "famind/errors.hpp"

namespace famind {

// ---------------------------------------------------------------------------
// Permutation utilities

Perm perm_identity(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), Point(0));
  return p;
}

Perm perm_compose(std::span<const Point> a, std::span<const Point> b) {
  assert(a.size() == b.size());
  Perm out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

Perm perm_inverse(std::span<const Point> a) {
  Perm out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[a[i]] = Point(i);
  return out;
}

bool perm_is_valid(std::span<const Point> p, int degree) {
  if (p.size() != size_t(degree)) return false;
  std::vector<bool> seen(degree, false);
  for (Point image : p) {
    if (image >= degree || seen[image]) return false;
    seen[image] = true;
  }
  return true;
}

std::string perm_to_string(std::span<const Point> p) {
  std::string out = "[";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i] + 1);
  }
  out += "]";
  return out;
}

uint64_t perm_order(std::span<const Point> p) {
  std::vector<bool> seen(p.size(), false);
  uint64_t result = 1;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    uint64_t len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = p[j];
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

namespace {

struct PermHash {
  size_t operator()(const Perm& p) const {
    size_t h = 1469598103934665603ull;
    for (Point x : p) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

int compare_rows(const Point* a, const Point* b, int degree) {
  for (int i = 0; i < degree; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteGroup

struct FiniteGroup::Data {
  int degree = 1;
  size_t n = 0;
  std::vector<Point> flat;  // n * degree, rows sorted lexicographically
  std::vector<uint32_t> gens;
  std::vector<uint32_t> inv;
  std::optional<MatrixGroupTag> tag;

  mutable std::once_flag classes_once;
  mutable std::vector<std::vector<uint32_t>> classes;
  mutable std::once_flag normals_once;
  mutable std::vector<std::vector<uint32_t>> normals;

  const Point* row(uint32_t id) const { return flat.data() + size_t(id) * degree; }
};

const FiniteGroup::Data& FiniteGroup::d() const {
  if (!data_) throw InvalidArgument("operation on an empty group handle");
  return *data_;
}

int FiniteGroup::degree() const { return d().degree; }
size_t FiniteGroup::order() const { return d().n; }
const std::vector<uint32_t>& FiniteGroup::generator_ids() const { return d().gens; }

std::span<const Point> FiniteGroup::perm(uint32_t id) const {
  const Data& dd = d();
  assert(id < dd.n);
  return {dd.row(id), size_t(dd.degree)};
}

const std::optional<MatrixGroupTag>& FiniteGroup::matrix_tag() const { return d().tag; }

std::optional<uint32_t> FiniteGroup::find(std::span<const Point> p) const {
  const Data& dd = d();
  if (p.size() != size_t(dd.degree)) return std::nullopt;
  size_t lo = 0, hi = dd.n;
  while (lo < hi) {
    size_t mid = lo + (hi - lo) / 2;
    if (compare_rows(dd.row(uint32_t(mid)), p.data(), dd.degree) < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < dd.n && compare_rows(dd.row(uint32_t(lo)), p.data(), dd.degree) == 0)
    return uint32_t(lo);
  return std::nullopt;
}

uint32_t FiniteGroup::require(std::span<const Point> p) const {
  if (auto id = find(p)) return *id;
  throw ElementNotInGroup("permutation " + perm_to_string(p) + " is not in the group");
}

uint32_t FiniteGroup::mul(uint32_t a, uint32_t b) const {
  const Data& dd = d();
  thread_local Perm buf;
  buf.resize(dd.degree);
  const Point* pa = dd.row(a);
  const Point* pb = dd.row(b);
  for (int i = 0; i < dd.degree; ++i) buf[i] = pa[pb[i]];
  auto id = find(buf);
  assert(id.has_value());  // the element table is closed
  return *id;
}

uint32_t FiniteGroup::inverse(uint32_t a) const { return d().inv[a]; }

uint32_t FiniteGroup::conjugate(uint32_t g, uint32_t x) const {
  return mul(mul(g, x), inverse(g));
}

uint32_t FiniteGroup::power(uint32_t x, uint64_t e) const {
  uint32_t result = identity();
  uint32_t base = x;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

uint64_t FiniteGroup::element_order(uint32_t x) const { return perm_order(perm(x)); }

bool FiniteGroup::is_abelian() const {
  const auto& gens = generator_ids();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (mul(gens[i], gens[j]) != mul(gens[j], gens[i])) return false;
  return true;
}

FiniteGroup make_perm_group_impl(int degree, const std::vector<Perm>& generators,
                                 size_t order_cap, std::optional<MatrixGroupTag> tag) {
  if (degree < 1 || degree > kMaxDegree)
    throw InvalidArgument("degree must be in [1, " + std::to_string(kMaxDegree) + "], got " +
                          std::to_string(degree));
  for (size_t i = 0; i < generators.size(); ++i) {
    if (!perm_is_valid(generators[i], degree))
      throw InvalidPermutation("generator " + std::to_string(i + 1) +
                               " is not a bijection of {1.." + std::to_string(degree) + "}");
  }

  std::vector<Perm> elems;
  std::unordered_set<Perm, PermHash> seen;
  elems.push_back(perm_identity(degree));
  seen.insert(elems.front());
  for (size_t pos = 0; pos < elems.size(); ++pos) {
    for (const Perm& g : generators) {
      Perm w = perm_compose(elems[pos], g);
      if (seen.insert(w).second) {
        if (elems.size() + 1 > order_cap)
          throw CapExceeded("group enumeration passed the order cap of " +
                            std::to_string(order_cap));
        elems.push_back(std::move(w));
      }
    }
  }

  std::sort(elems.begin(), elems.end());

  auto data = std::make_shared<FiniteGroup::Data>();
  data->degree = degree;
  data->n = elems.size();
  data->flat.reserve(elems.size() * size_t(degree));
  for (const Perm& e : elems)
    data->flat.insert(data->flat.end(), e.begin(), e.end());
  data->tag = tag;

  FiniteGroup g;
  g.data_ = data;

  assert(g.find(perm_identity(degree)) == std::optional<uint32_t>(0));

  for (const Perm& gen : generators)
    data->gens.push_back(*g.find(gen));
  data->inv.resize(data->n);
  for (uint32_t id = 0; id < data->n; ++id)
    data->inv[id] = *g.find(perm_inverse(g.perm(id)));

  return g;
}

FiniteGroup make_perm_group(int degree, const std::vector<Perm>& generators,
                            size_t order_cap) {
  return make_perm_group_impl(degree, generators, order_cap, std::nullopt);
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(FiniteGroup parent, std::vector<uint32_t> members,
                   std::vector<uint32_t> gens)
    : parent_(std::move(parent)), members_(std::move(members)), gens_(std::move(gens)) {}

bool Subgroup::contains(uint32_t id) const {
  return std::binary_search(members_.begin(), members_.end(), id);
}

bool Subgroup::is_normal() const {
  for (uint32_t g : parent_.generator_ids())
    for (uint32_t s : gens_)
      if (!contains(parent_.conjugate(g, s))) return false;
  return true;
}

bool Subgroup::is_abelian() const {
  for (size_t i = 0; i < gens_.size(); ++i)
    for (size_t j = i + 1; j < gens_.size(); ++j)
      if (parent_.mul(gens_[i], gens_[j]) != parent_.mul(gens_[j], gens_[i])) return false;
  return true;
}

FiniteGroup Subgroup::as_group() const {
  std::vector<Perm> gen_perms;
  gen_perms.reserve(gens_.size());
  for (uint32_t id : gens_) {
    auto s = parent_.perm(id);
    gen_perms.emplace_back(s.begin(), s.end());
  }
  return make_perm_group_impl(parent_.degree(), gen_perms, parent_.order(),
                              parent_.matrix_tag());
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  return Subgroup(g, {g.identity()}, {});
}

Subgroup whole_subgroup(const FiniteGroup& g) {
  std::vector<uint32_t> members(g.order());
  std::iota(members.begin(), members.end(), 0);
  return Subgroup(g, std::move(members), g.generator_ids());
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const uint32_t> seed) {
  size_t n = g.order();
  for (uint32_t id : seed)
    if (id >= n) throw ElementNotInGroup("element id " + std::to_string(id) + " out of range");

  std::vector<uint8_t> in(n, 0);
  std::vector<uint32_t> list;
  std::vector<uint32_t> gens;
  in[g.identity()] = 1;
  list.push_back(g.identity());

  for (uint32_t s : seed) {
    if (in[s]) continue;
    gens.push_back(s);
    // Re-scan the whole closure with the enlarged generating set.
    for (size_t pos = 0; pos < list.size(); ++pos) {
      for (uint32_t gen : gens) {
        uint32_t y = g.mul(list[pos], gen);
        if (!in[y]) {
          in[y] = 1;
          list.push_back(y);
        }
      }
    }
  }

  std::sort(list.begin(), list.end());
  return Subgroup(g, std::move(list), std::move(gens));
}

Subgroup normal_closure(const FiniteGroup& g, std::span<const uint32_t> seed) {
  Subgroup h = subgroup_generated(g, seed);
  const auto& group_gens = g.generator_ids();
  while (true) {
    // Conjugating the subgroup generators by the group generators suffices:
    // if all such conjugates land inside, the subgroup is normal.
    std::vector<uint32_t> extra;
    for (uint32_t member : h.generator_ids())
      for (uint32_t gg : group_gens) {
        uint32_t c = g.conjugate(gg, member);
        if (!h.contains(c)) extra.push_back(c);
      }
    if (extra.empty()) break;
    std::vector<uint32_t> seed2(h.generator_ids());
    seed2.insert(seed2.end(), extra.begin(), extra.end());
    h = subgroup_generated(g, seed2);
  }
  return h;
}

Subgroup subgroup_from_members(const FiniteGroup& g, std::span<const uint32_t> members) {
  Subgroup h = subgroup_generated(g, members);
  if (h.order() != members.size())
    throw InvalidArgument("member set of size " + std::to_string(members.size()) +
                          " is not closed (closure has order " + std::to_string(h.order()) + ")");
  return h;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<uint32_t> common;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(common));
  return subgroup_from_members(a.parent(), common);
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<uint32_t> seed(a.generator_ids());
  seed.insert(seed.end(), b.generator_ids().begin(), b.generator_ids().end());
  return subgroup_generated(a.parent(), seed);
}

size_t product_set_size(const Subgroup& a, const Subgroup& b) {
  std::vector<uint32_t> common;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(common));
  return a.order() * b.order() / common.size();
}

Subgroup center(const FiniteGroup& g) {
  std::vector<uint32_t> members;
  for (uint32_t x = 0; x < g.order(); ++x) {
    bool central = true;
    for (uint32_t gen : g.generator_ids())
      if (g.mul(x, gen) != g.mul(gen, x)) {
        central = false;
        break;
      }
    if (central) members.push_back(x);
  }
  return subgroup_from_members(g, members);
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& s) {
  std::vector<uint32_t> members;
  for (uint32_t x = 0; x < g.order(); ++x) {
    bool normalizes = true;
    for (uint32_t gen : s.generator_ids())
      if (!s.contains(g.conjugate(x, gen))) {
        normalizes = false;
        break;
      }
    if (normalizes) members.push_back(x);
  }
  return subgroup_from_members(g, members);
}

// ---------------------------------------------------------------------------
// Conjugacy classes and the normal subgroup lattice

const std::vector<std::vector<uint32_t>>& FiniteGroup::conjugacy_classes() const {
  const Data& dd = d();
  std::call_once(dd.classes_once, [&] {
    size_t n = dd.n;
    std::vector<uint8_t> visited(n, 0);
    for (uint32_t x = 0; x < n; ++x) {
      if (visited[x]) continue;
      std::vector<uint32_t> orbit{x};
      visited[x] = 1;
      for (size_t pos = 0; pos < orbit.size(); ++pos) {
        for (uint32_t gen : dd.gens) {
          uint32_t y = conjugate(gen, orbit[pos]);
          if (!visited[y]) {
            visited[y] = 1;
            orbit.push_back(y);
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      dd.classes.push_back(std::move(orbit));
    }
  });
  return dd.classes;
}

const std::vector<std::vector<uint32_t>>& FiniteGroup::normal_subgroup_lists() const {
  const Data& dd = d();
  std::call_once(dd.normals_once, [&] {
    // Atoms: normal closures of single conjugacy classes. Every normal
    // subgroup is the join of the atoms of the classes it contains, so
    // closing the atom set under join enumerates the whole lattice.
    std::vector<std::pair<std::vector<uint32_t>, std::vector<uint32_t>>> atoms;
    {
      std::unordered_set<std::string> seen;
      for (const auto& cls : conjugacy_classes()) {
        uint32_t rep = cls.front();
        Subgroup nc = normal_closure(*this, std::span<const uint32_t>(&rep, 1));
        std::string key(reinterpret_cast<const char*>(nc.members().data()),
                        nc.members().size() * sizeof(uint32_t));
        if (seen.insert(key).second)
          atoms.emplace_back(nc.members(), nc.generator_ids());
      }
    }

    std::map<std::vector<uint32_t>, std::vector<uint32_t>> lattice;
    std::vector<const std::vector<uint32_t>*> queue;
    std::vector<uint32_t> trivial{identity()};
    auto [it, _] = lattice.emplace(trivial, std::vector<uint32_t>{});
    queue.push_back(&it->first);
    for (size_t pos = 0; pos < queue.size(); ++pos) {
      std::vector<uint32_t> base_gens = lattice.at(*queue[pos]);
      for (const auto& [amembers, agens] : atoms) {
        std::vector<uint32_t> seed = base_gens;
        seed.insert(seed.end(), agens.begin(), agens.end());
        Subgroup j = subgroup_generated(*this, seed);
        auto [jt, inserted] = lattice.emplace(j.members(), j.generator_ids());
        if (inserted) queue.push_back(&jt->first);
      }
    }

    for (auto& [members, gens] : lattice) dd.normals.push_back(members);
    std::sort(dd.normals.begin(), dd.normals.end(),
              [](const auto& a, const auto& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return a < b;
              });
  });
  return dd.normals;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g) {
  std::vector<Subgroup> out;
  for (const auto& members : g.normal_subgroup_lists())
    out.push_back(subgroup_from_members(g, members));
  return out;
}

std::vector<Subgroup> maximal_normal_subgroups(const FiniteGroup& g) {
  const auto& lists = g.normal_subgroup_lists();
  std::vector<Subgroup> out;
  for (size_t i = 0; i < lists.size(); ++i) {
    if (lists[i].size() == g.order()) continue;  // proper only
    bool maximal = true;
    for (size_t j = 0; j < lists.size(); ++j) {
      if (j == i || lists[j].size() == g.order() || lists[j].size() <= lists[i].size())
        continue;
      if (std::includes(lists[j].begin(), lists[j].end(), lists[i].begin(), lists[i].end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(subgroup_from_members(g, lists[i]));
  }
  return out;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  std::map<std::vector<uint32_t>, std::vector<uint32_t>> found;
  std::vector<const std::vector<uint32_t>*> queue;
  std::vector<uint32_t> trivial{g.identity()};
  auto [it, _] = found.emplace(trivial, std::vector<uint32_t>{});
  queue.push_back(&it->first);
  for (size_t pos = 0; pos < queue.size(); ++pos) {
    const std::vector<uint32_t>& members = *queue[pos];
    std::vector<uint32_t> gens = found.at(members);
    for (uint32_t x = 0; x < g.order(); ++x) {
      if (std::binary_search(members.begin(), members.end(), x)) continue;
      std::vector<uint32_t> seed = gens;
      seed.push_back(x);
      Subgroup h = subgroup_generated(g, seed);
      auto [ht, inserted] = found.emplace(h.members(), h.generator_ids());
      if (inserted) queue.push_back(&ht->first);
    }
  }
  std::vector<Subgroup> out;
  for (const auto& [members, gens] : found) out.push_back(Subgroup(g, members, gens));
  return out;
}

// ---------------------------------------------------------------------------
// Sylow machinery

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<uint64_t> prime_factorization(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

Subgroup sylow(const FiniteGroup& g, uint64_t p) {
  if (!is_prime_u64(p)) throw InvalidArgument("sylow: " + std::to_string(p) + " is not prime");
  size_t target = 1;
  {
    size_t n = g.order();
    while (n % p == 0) {
      n /= p;
      target *= p;
    }
  }
  Subgroup sub = trivial_subgroup(g);
  while (sub.order() < target) {
    Subgroup norm = normalizer(g, sub);
    bool grew = false;
    for (uint32_t x : norm.members()) {
      if (sub.contains(x)) continue;
      uint64_t m = g.element_order(x);
      if (m % p != 0) continue;
      uint64_t coprime_part = m;
      while (coprime_part % p == 0) coprime_part /= p;
      uint32_t y = g.power(x, coprime_part);
      if (sub.contains(y)) continue;
      std::vector<uint32_t> seed = sub.generator_ids();
      seed.push_back(y);
      sub = subgroup_generated(g, seed);
      grew = true;
      break;
    }
    // p divides [N_G(P):P] whenever P is a p-subgroup below full Sylow
    // order, so the scan always finds an extension.
    assert(grew);
    if (!grew) break;
  }
  return sub;
}

Subgroup plus_subgroup(const FiniteGroup& g, uint64_t ell) {
  Subgroup s = sylow(g, ell);
  if (s.is_trivial()) return s;
  return normal_closure(g, s.generator_ids());
}

FrattiniReport frattini_check(const FiniteGroup& h, const Subgroup& i, uint64_t p) {
  if (!i.parent().same_object(h))
    throw InvalidArgument("frattini_check: subgroup does not live in the given group");
  if (!i.is_normal()) throw NotNormal("frattini_check: I is not normal in H");

  FiniteGroup i_grp = i.as_group();
  Subgroup p_in_i = sylow(i_grp, p);
  std::vector<uint32_t> mapped_gens;
  std::vector<uint32_t> mapped_members;
  for (uint32_t id : p_in_i.generator_ids()) mapped_gens.push_back(h.require(i_grp.perm(id)));
  for (uint32_t id : p_in_i.members()) mapped_members.push_back(h.require(i_grp.perm(id)));
  std::sort(mapped_members.begin(), mapped_members.end());
  Subgroup p_sub(h, std::move(mapped_members), std::move(mapped_gens));

  Subgroup norm = normalizer(h, p_sub);
  FrattiniReport report;
  report.sylow_order = p_sub.order();
  report.normalizer_order = norm.order();
  report.product_size = product_set_size(i, norm);
  report.holds = report.product_size == h.order();
  return report;
}

}  // namespace famind
