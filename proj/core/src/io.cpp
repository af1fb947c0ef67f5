#include "famind/io.hpp"

#include <sstream>

#include <json.hpp>

#include "famind/errors.hpp"
#include "famind/matrix_group.hpp"

namespace famind {

using ordered_json = nlohmann::ordered_json;

namespace {

Perm parse_perm(const ordered_json& j, int degree, const std::string& what) {
  if (!j.is_array())
    throw ParseError(what + ": permutation must be an array of 1-based images");
  Perm p;
  p.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError(what + ": permutation entries must be integers");
    int64_t image = v.get<int64_t>();
    if (image < 1 || image > degree)
      throw ParseError(what + ": image " + std::to_string(image) + " outside 1.." +
                       std::to_string(degree));
    p.push_back(Point(image - 1));
  }
  if (p.size() != size_t(degree))
    throw ParseError(what + ": permutation has " + std::to_string(p.size()) +
                     " images, expected " + std::to_string(degree));
  return p;
}

ordered_json perm_to_json(std::span<const Point> p) {
  ordered_json out = ordered_json::array();
  for (Point x : p) out.push_back(int(x) + 1);
  return out;
}

FiniteGroup parse_group_json(const ordered_json& j, size_t order_cap) {
  if (!j.is_object()) throw ParseError("group object expected");
  if (j.contains("degree")) {
    if (!j["degree"].is_number_integer()) throw ParseError("\"degree\" must be an integer");
    int degree = j["degree"].get<int>();
    if (!j.contains("generators") || !j["generators"].is_array())
      throw ParseError("\"generators\" must be an array of permutations");
    std::vector<Perm> gens;
    for (const auto& g : j["generators"]) gens.push_back(parse_perm(g, degree, "generator"));
    return make_perm_group(degree, gens, order_cap);
  }
  if (j.contains("n")) {
    if (!j.contains("p") || !j.contains("matrices"))
      throw ParseError("matrix group needs \"n\", \"p\" and \"matrices\"");
    int n = j["n"].get<int>();
    uint64_t p = j["p"].get<uint64_t>();
    std::vector<MatrixFp> matrices;
    for (const auto& mj : j["matrices"]) {
      if (!mj.is_array()) throw ParseError("matrix must be an array of rows");
      MatrixFp m;
      for (const auto& row : mj) {
        if (!row.is_array()) throw ParseError("matrix row must be an array");
        std::vector<uint64_t> r;
        for (const auto& v : row) {
          int64_t entry = v.get<int64_t>();
          int64_t reduced = entry % int64_t(p);
          if (reduced < 0) reduced += int64_t(p);
          r.push_back(uint64_t(reduced));
        }
        m.push_back(std::move(r));
      }
      matrices.push_back(std::move(m));
    }
    return make_matrix_group(n, p, matrices, order_cap);
  }
  throw ParseError("group object needs either \"degree\" or \"n\"");
}

ordered_json group_to_json(const FiniteGroup& g) {
  ordered_json out;
  out["degree"] = g.degree();
  ordered_json gens = ordered_json::array();
  for (uint32_t id : g.generator_ids()) gens.push_back(perm_to_json(g.perm(id)));
  out["generators"] = gens;
  return out;
}

ordered_json parse_text(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("input is not valid JSON");
  return j;
}

ordered_json witnesses_to_json(const OrderWitnesses& w, uint64_t ell) {
  ordered_json out = ordered_json::array();
  if (w.cyclic) {
    ordered_json c;
    c["kind"] = "cyclic";
    c["ell"] = ell;
    out.push_back(c);
  }
  for (const LieTypeSpec& spec : w.lie) {
    ordered_json s;
    s["kind"] = "lie";
    s["series"] = series_name(spec.series);
    s["rank"] = spec.rank;
    s["ell"] = spec.ell;
    s["f"] = spec.f;
    out.push_back(s);
  }
  return out;
}

std::string witnesses_display(const OrderWitnesses& w, uint64_t ell) {
  std::string out;
  if (w.cyclic) out += "cyclic(" + std::to_string(ell) + ")";
  for (const LieTypeSpec& spec : w.lie) {
    if (!out.empty()) out += ",";
    out += spec.display();
  }
  return out;
}

ordered_json factor_to_json(const SimpleFactorId& f) {
  ordered_json out;
  switch (f.kind) {
    case SimpleFactorId::Kind::Cyclic: out["kind"] = "cyclic"; break;
    case SimpleFactorId::Kind::Lie: out["kind"] = "lie"; break;
    case SimpleFactorId::Kind::Unidentified: out["kind"] = "unidentified"; break;
  }
  out["order"] = f.order.to_decimal();
  if (f.kind == SimpleFactorId::Kind::Lie) {
    out["witnesses"] = witnesses_to_json(f.witnesses, f.ell);
    out["identified_by"] = "order";
  }
  return out;
}

ordered_json subgroup_to_json(const Subgroup& s) {
  ordered_json out;
  out["order"] = s.order();
  ordered_json gens = ordered_json::array();
  for (uint32_t id : s.generator_ids()) gens.push_back(perm_to_json(s.parent().perm(id)));
  out["generators"] = gens;
  return out;
}

std::string dump_line(const ordered_json& j) { return j.dump() + "\n"; }

}  // namespace

FiniteGroup parse_group_text(const std::string& text, size_t order_cap) {
  return parse_group_json(parse_text(text), order_cap);
}

HomFamily parse_family_text(const std::string& text, size_t order_cap) {
  ordered_json j = parse_text(text);
  if (!j.contains("domain")) throw ParseError("family file needs a \"domain\" group");
  FiniteGroup domain = parse_group_json(j["domain"], order_cap);
  if (!j.contains("homs") || !j["homs"].is_array() || j["homs"].empty())
    throw ParseError("family file needs a nonempty \"homs\" array");

  std::vector<GroupHom> homs;
  std::vector<std::string> labels;
  for (const auto& hj : j["homs"]) {
    if (!hj.contains("label") || !hj["label"].is_string())
      throw ParseError("every hom needs a string \"label\"");
    labels.push_back(hj["label"].get<std::string>());
    if (!hj.contains("codomain")) throw ParseError("every hom needs a \"codomain\" group");
    FiniteGroup codomain = parse_group_json(hj["codomain"], order_cap);
    if (!hj.contains("images") || !hj["images"].is_array())
      throw ParseError("every hom needs an \"images\" array, one per domain generator");
    std::vector<Perm> images;
    for (const auto& ij : hj["images"])
      images.push_back(parse_perm(ij, codomain.degree(), "image"));
    homs.push_back(make_hom(domain, codomain, images));
  }
  return make_family(std::move(domain), std::move(homs), std::move(labels));
}

InertiaAssignment parse_inertia_text(const std::string& text, const HomFamily& family) {
  ordered_json j = parse_text(text);
  if (!j.contains("places") || !j["places"].is_array())
    throw ParseError("inertia file needs a \"places\" array");
  InertiaAssignment out;
  for (const auto& pj : j["places"]) {
    InertiaPlace place;
    if (!pj.contains("place") || !pj["place"].is_string())
      throw ParseError("every place needs a string \"place\" name");
    place.place = pj["place"].get<std::string>();
    if (!pj.contains("p") || !pj["p"].is_number_integer())
      throw ParseError("place '" + place.place + "' needs an integer residue characteristic \"p\"");
    place.residue_char = pj["p"].get<uint64_t>();
    if (pj.contains("subgroup_generators_per_label")) {
      for (const auto& [label, gens] : pj["subgroup_generators_per_label"].items()) {
        std::vector<uint32_t> ids;
        for (const auto& gj : gens) {
          Perm p = parse_perm(gj, family.domain.degree(), "inertia generator");
          ids.push_back(family.domain.require(p));
        }
        place.generators_per_label[label] = std::move(ids);
      }
    }
    out.places.push_back(std::move(place));
  }
  return out;
}

std::string render_family_text(const HomFamily& family) {
  ordered_json out;
  out["domain"] = group_to_json(family.domain);
  ordered_json homs = ordered_json::array();
  for (size_t i = 0; i < family.homs.size(); ++i) {
    const GroupHom& h = family.homs[i];
    ordered_json hj;
    hj["label"] = family.labels[i];
    hj["codomain"] = group_to_json(h.codomain());
    ordered_json images = ordered_json::array();
    for (uint32_t id : h.generator_images()) images.push_back(perm_to_json(h.codomain().perm(id)));
    hj["images"] = images;
    homs.push_back(hj);
  }
  out["homs"] = homs;
  return dump_line(out);
}

std::string render_sigma(const SigmaCatalogue& cat, bool machine) {
  if (machine) {
    ordered_json out;
    out["ell"] = cat.ell;
    out["bound"] = cat.bound.to_decimal();
    ordered_json entries = ordered_json::array();
    for (const OrderEntry& e : cat.entries) {
      ordered_json ej;
      ej["order"] = e.order.to_decimal();
      ej["witnesses"] = witnesses_to_json(e.witnesses, cat.ell);
      entries.push_back(ej);
    }
    out["entries"] = entries;
    return dump_line(out);
  }
  std::string out;
  for (const OrderEntry& e : cat.entries)
    out += e.order.to_decimal() + "  " + witnesses_display(e.witnesses, cat.ell) + "\n";
  return out;
}

std::string render_artin(const std::vector<ArtinReport>& reports, bool machine) {
  if (machine) {
    ordered_json out = ordered_json::array();
    for (const ArtinReport& r : reports) {
      ordered_json rj;
      rj["ell1"] = r.ell1;
      rj["ell2"] = r.ell2;
      rj["bound"] = r.bound.to_decimal();
      rj["disjoint"] = r.disjoint;
      ordered_json cols = ordered_json::array();
      for (const ArtinCollision& c : r.collisions) {
        ordered_json cj;
        cj["order"] = c.order.to_decimal();
        cj["witnesses1"] = witnesses_to_json(c.first, r.ell1);
        cj["witnesses2"] = witnesses_to_json(c.second, r.ell2);
        cols.push_back(cj);
      }
      rj["collisions"] = cols;
      out.push_back(rj);
    }
    return dump_line(out);
  }
  std::string out;
  bool all_disjoint = true;
  for (const ArtinReport& r : reports) {
    out += std::to_string(r.ell1) + "," + std::to_string(r.ell2) + "  disjoint: " +
           (r.disjoint ? "yes" : "no") + "\n";
    for (const ArtinCollision& c : r.collisions) {
      out += "  collision at order " + c.order.to_decimal() + ": " +
             witnesses_display(c.first, r.ell1) + " vs " + witnesses_display(c.second, r.ell2) +
             "\n";
      all_disjoint = false;
    }
    all_disjoint = all_disjoint && r.disjoint;
  }
  out += std::string("disjoint: ") + (all_disjoint ? "yes" : "no") + "\n";
  return out;
}

std::string render_factors(size_t group_order, const std::vector<SimpleFactorId>& factors,
                           bool machine) {
  if (machine) {
    ordered_json out;
    out["group_order"] = group_order;
    ordered_json fs = ordered_json::array();
    for (const SimpleFactorId& f : factors) fs.push_back(factor_to_json(f));
    out["composition_factors"] = fs;
    return dump_line(out);
  }
  std::string out = "group order: " + std::to_string(group_order) + "\n";
  out += "composition factors (" + std::to_string(factors.size()) + "):\n";
  for (const SimpleFactorId& f : factors)
    out += "  " + f.display() + "  order " + f.order.to_decimal() + "\n";
  return out;
}

std::string render_jordan(const JordanResult& result, std::optional<uint64_t> d_checked,
                          bool machine) {
  if (machine) {
    ordered_json out;
    out["jordan_index"] = result.index;
    out["abelian_normal_subgroup"] = subgroup_to_json(result.witness.abelian_normal_subgroup);
    if (d_checked) {
      out["d"] = *d_checked;
      out["jordan_check"] = result.index <= *d_checked;
    }
    return dump_line(out);
  }
  std::string out = "jordan_index: " + std::to_string(result.index) + "\n";
  out += "abelian normal subgroup of order " +
         std::to_string(result.witness.abelian_normal_subgroup.order()) + "\n";
  if (d_checked)
    out += "jordan_check(" + std::to_string(*d_checked) +
           "): " + (result.index <= *d_checked ? "true" : "false") + "\n";
  return out;
}

std::string render_bounds(uint64_t n, const BigUint& frobenius, const BigUint* collins,
                          bool machine) {
  if (machine) {
    ordered_json out;
    out["n"] = n;
    out["frobenius_bound"] = frobenius.to_decimal();
    if (collins) out["collins_bound"] = collins->to_decimal();
    return dump_line(out);
  }
  std::string out = "frobenius_bound(" + std::to_string(n) + ") = " + frobenius.to_decimal() + "\n";
  if (collins)
    out += "collins_bound(" + std::to_string(n) + ") = " + collins->to_decimal() + "\n";
  return out;
}

namespace {

ordered_json lemma2_to_json(const Lemma2Verdict& v) {
  ordered_json out;
  out["applies"] = v.applies;
  out["conclusion"] =
      v.conclusion == Lemma2Verdict::Conclusion::Independent ? "independent" : "inconclusive";
  auto shared_list = [](const std::vector<Lemma2Verdict::SharedFactor>& list) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : list) {
      ordered_json sj;
      sj["i"] = s.i;
      sj["j"] = s.j;
      sj["factor"] = factor_to_json(s.factor);
      arr.push_back(sj);
    }
    return arr;
  };
  out["pairwise_collisions"] = shared_list(v.collisions);
  out["flagged_comparisons"] = shared_list(v.flagged);
  ordered_json sets = ordered_json::array();
  for (const auto& qs : v.quotient_sets) {
    ordered_json arr = ordered_json::array();
    for (const SimpleFactorId& f : qs) arr.push_back(factor_to_json(f));
    sets.push_back(arr);
  }
  out["simple_quotients"] = sets;
  return out;
}

ordered_json semistable_to_json(const SemistableReport& s) {
  ordered_json out;
  ordered_json per = ordered_json::array();
  for (const SemistableIndexReport& idx : s.per_index) {
    ordered_json ij;
    ij["label"] = idx.label;
    ij["ell"] = idx.ell;
    ij["image_order"] = idx.image_order;
    ij["a_order"] = idx.a_part.order();
    ij["plus_order"] = idx.plus_part.order();
    ij["h_order"] = idx.h_group.order();
    ij["lemma5_ok"] = idx.lemma5_ok;
    ij["h_jordan_index"] = idx.h_jordan.index;
    per.push_back(ij);
  }
  out["per_index"] = per;
  out["lemma4_contains"] = s.lemma4_contains;
  return out;
}

}  // namespace

std::string render_independence(const IndependenceReport& report,
                                const SemistableReport* semistable, bool machine) {
  if (machine) {
    ordered_json out;
    out["seed"] = report.seed;
    out["labels"] = report.labels;
    out["domain_order"] = report.domain_order;
    out["image_orders"] = report.image_orders;
    out["satisfies_R"] = report.satisfies_r;
    out["product_order"] = report.product_order.to_decimal();
    out["diagonal_order"] = report.diagonal_order.to_decimal();
    out["ro_index"] = report.ro_index.to_decimal();
    out["R1"] = report.r1;
    out["R2"] = report.r2;
    out["gamma_prime"] = subgroup_to_json(report.gamma_prime);
    out["gamma_prime_restriction_independent"] = report.gamma_prime_restriction_independent;
    out["lemma2"] = lemma2_to_json(report.lemma2);
    ordered_json pairs = ordered_json::array();
    for (const auto& p : report.pairs) {
      ordered_json pj;
      pj["i"] = p.i;
      pj["j"] = p.j;
      pj["independent"] = p.independent;
      if (!p.independent) pj["common_quotient_order"] = p.common_quotient_order;
      pairs.push_back(pj);
    }
    out["goursat"] = pairs;
    if (semistable) out["semistable"] = semistable_to_json(*semistable);
    return dump_line(out);
  }

  std::ostringstream out;
  out << "family: domain order " << report.domain_order << ", " << report.labels.size()
      << " homomorphism(s), seed " << report.seed << "\n";
  out << "image orders:";
  for (size_t i = 0; i < report.image_orders.size(); ++i)
    out << " " << report.labels[i] << ":" << report.image_orders[i];
  out << "\n";
  out << "product order:  " << report.product_order.to_decimal() << "\n";
  out << "diagonal order: " << report.diagonal_order.to_decimal() << "\n";
  out << "ro_index:       " << report.ro_index.to_decimal() << "\n";
  out << "satisfies (R):  " << (report.satisfies_r ? "yes" : "no") << "  (R1): "
      << (report.r1 ? "yes" : "no") << "  (R2): " << (report.r2 ? "yes" : "no") << "\n";
  out << "gamma_prime: order " << report.gamma_prime.order() << " (restriction independent: "
      << (report.gamma_prime_restriction_independent ? "yes" : "no") << ")\n";
  out << "lemma2: " << (report.lemma2.applies ? "applies -> independent" : "does not apply")
      << "\n";
  for (const auto& c : report.lemma2.collisions)
    out << "  shared simple quotient " << c.factor.display() << " between " << report.labels[c.i]
        << " and " << report.labels[c.j] << "\n";
  for (const auto& c : report.lemma2.flagged)
    out << "  unresolved order match " << c.factor.order.to_decimal() << " between "
        << report.labels[c.i] << " and " << report.labels[c.j] << "\n";
  for (const auto& p : report.pairs) {
    out << "pair (" << report.labels[p.i] << "," << report.labels[p.j] << "): ";
    if (p.independent)
      out << "independent\n";
    else
      out << "common quotient of order " << p.common_quotient_order << "\n";
  }
  if (semistable) {
    out << "semistable decomposition:\n";
    for (const SemistableIndexReport& idx : semistable->per_index) {
      out << "  ell=" << idx.ell << ": |G|=" << idx.image_order << " |A|=" << idx.a_part.order()
          << " |G+|=" << idx.plus_part.order() << " |H|=" << idx.h_group.order()
          << " lemma5: " << (idx.lemma5_ok ? "ok" : "VIOLATED")
          << " jordan(H)=" << idx.h_jordan.index << "\n";
    }
    out << "  lemma4 containment: " << (semistable->lemma4_contains ? "yes" : "no") << "\n";
  }
  return out.str();
}

}  // namespace famind
