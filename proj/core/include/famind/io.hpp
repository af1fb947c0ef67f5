#pragma once

#include <optional>
#include <string>

#include "famind/factors.hpp"
#include "famind/independence.hpp"
#include "famind/jordan.hpp"
#include "famind/lie_orders.hpp"

namespace famind {

// Global knobs shared by the CLI and the acceptance harness.
struct RunConfig {
  size_t order_cap = kDefaultOrderCap;
  uint64_t seed = 0;
  bool machine = false;
  int threads = 1;
  size_t bound_precision_bits = 64;
};

// Group file: {"degree": d, "generators": [[...], ...]} with 1-based images,
// or {"n": n, "p": p, "matrices": [[[...], ...], ...]} with entries reduced
// mod p. Throws ParseError on malformed input.
FiniteGroup parse_group_text(const std::string& text, size_t order_cap = kDefaultOrderCap);

// Family file: {"domain": <group>, "homs": [{"label": s, "codomain": <group>,
// "images": [<perm>, ...]}, ...]}. Every hom is verified; NotAHomomorphism
// propagates with its witness.
HomFamily parse_family_text(const std::string& text, size_t order_cap = kDefaultOrderCap);

// Inertia file: {"places": [{"place": s, "p": int,
// "subgroup_generators_per_label": {label: [<perm>, ...]}}]} where each
// <perm> must be an element of the family domain.
InertiaAssignment parse_inertia_text(const std::string& text, const HomFamily& family);

std::string render_family_text(const HomFamily& family);

// Renderers produce either an aligned text table or one line of canonical
// JSON (machine mode). Machine output re-parses and re-serializes
// byte-identically; all big integers are full decimal strings.
std::string render_sigma(const SigmaCatalogue& cat, bool machine);
std::string render_artin(const std::vector<ArtinReport>& reports, bool machine);
std::string render_independence(const IndependenceReport& report,
                                const SemistableReport* semistable, bool machine);
std::string render_factors(size_t group_order, const std::vector<SimpleFactorId>& factors,
                           bool machine);
std::string render_jordan(const JordanResult& result, std::optional<uint64_t> d_checked,
                          bool machine);
std::string render_bounds(uint64_t n, const BigUint& frobenius, const BigUint* collins,
                          bool machine);

}  // namespace famind
