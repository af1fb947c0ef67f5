// Command-line front end: file ingestion, dispatch to the library, and
// table/machine reporting. Output is assembled in full before printing so a
// failure never leaves a partial table on stdout.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "famind/corpus.hpp"
#include "famind/errors.hpp"
#include "famind/io.hpp"
#include "famind/parallel.hpp"

namespace {

using namespace famind;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file '" + path + "'");
  out << content;
}

std::vector<uint64_t> parse_ell_list(const std::string& s) {
  std::vector<uint64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoull(item));
  }
  if (out.empty()) throw ParseError("--ells needs a comma-separated list of primes");
  return out;
}

int run(int argc, char** argv) {
  RunConfig config;

  CLI::App app{"independence analysis for families of finite-group homomorphisms"};
  app.require_subcommand(1);
  app.add_flag("--machine", config.machine, "machine-readable (JSON) output");
  app.add_option("--seed", config.seed, "seed recorded in reports");
  app.add_option("--cap", config.order_cap, "group order cap (default 1000000)")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", config.threads, "worker threads for independent analyses")
      ->check(CLI::PositiveNumber);
  app.add_option("--precision-bits", config.bound_precision_bits,
                 "initial bracket precision for bound evaluation");

  std::string output;

  // sigma --ell L --bound B
  auto* sigma_cmd = app.add_subcommand("sigma", "orders of Sigma_ell up to a bound");
  uint64_t sigma_ell = 5;
  std::string sigma_bound = "1000000";
  sigma_cmd->add_option("--ell", sigma_ell, "characteristic (prime >= 5)")->required();
  sigma_cmd->add_option("--bound", sigma_bound, "order bound (decimal)")->required();
  sigma_cmd->callback([&] {
    SigmaCatalogue cat = sigma_catalogue(sigma_ell, BigUint::from_decimal(sigma_bound));
    output = render_sigma(cat, config.machine);
  });

  // artin --ells 5,7,11 --bound B
  auto* artin_cmd = app.add_subcommand("artin", "pairwise cross-characteristic disjointness");
  std::string artin_ells;
  std::string artin_bound = "1000000000000";
  artin_cmd->add_option("--ells", artin_ells, "comma-separated primes >= 5")->required();
  artin_cmd->add_option("--bound", artin_bound, "order bound (decimal)")->required();
  artin_cmd->callback([&] {
    std::vector<uint64_t> ells = parse_ell_list(artin_ells);
    BigUint bound = BigUint::from_decimal(artin_bound);
    std::vector<std::pair<uint64_t, uint64_t>> pairs;
    for (size_t i = 0; i < ells.size(); ++i)
      for (size_t j = i + 1; j < ells.size(); ++j) pairs.emplace_back(ells[i], ells[j]);
    std::vector<ArtinReport> reports = parallel_map<ArtinReport>(
        pairs.size(), config.threads,
        [&](size_t k) { return artin_disjoint(pairs[k].first, pairs[k].second, bound); });
    output = render_artin(reports, config.machine);
  });

  // indep --family FILE [--inertia FILE]
  auto* indep_cmd = app.add_subcommand("indep", "independence report for a family file");
  std::string family_path, inertia_path;
  indep_cmd->add_option("--family", family_path, "family file (JSON)")->required();
  indep_cmd->add_option("--inertia", inertia_path, "inertia assignment file (JSON)");
  indep_cmd->callback([&] {
    HomFamily family = parse_family_text(read_file(family_path), config.order_cap);
    IndependenceReport report = analyze_family(family, config.seed);
    if (!inertia_path.empty()) {
      InertiaAssignment inertia = parse_inertia_text(read_file(inertia_path), family);
      SemistableReport semistable = semistable_decompose(normalize_family(family), inertia);
      output = render_independence(report, &semistable, config.machine);
    } else {
      output = render_independence(report, nullptr, config.machine);
    }
  });

  // factors --group FILE
  auto* factors_cmd = app.add_subcommand("factors", "composition factors with Sigma_ell labels");
  std::string group_path;
  factors_cmd->add_option("--group", group_path, "group file (JSON)")->required();
  factors_cmd->callback([&] {
    FiniteGroup g = parse_group_text(read_file(group_path), config.order_cap);
    output = render_factors(g.order(), composition_factors(g), config.machine);
  });

  // jordan --group FILE [--d D]
  auto* jordan_cmd = app.add_subcommand("jordan", "minimal Jordan index of a group");
  std::string jordan_group_path;
  uint64_t jordan_d = 0;
  jordan_cmd->add_option("--group", jordan_group_path, "group file (JSON)")->required();
  auto* d_opt = jordan_cmd->add_option("--d", jordan_d, "check (Jor_d) for this d");
  jordan_cmd->callback([&] {
    FiniteGroup g = parse_group_text(read_file(jordan_group_path), config.order_cap);
    JordanResult result = jordan_index(g);
    std::optional<uint64_t> d;
    if (d_opt->count() > 0) d = jordan_d;
    output = render_jordan(result, d, config.machine);
  });

  // bounds --n N
  auto* bounds_cmd = app.add_subcommand("bounds", "explicit Jordan bounds");
  uint64_t bounds_n = 0;
  bounds_cmd->add_option("--n", bounds_n, "dimension")->required();
  bounds_cmd->callback([&] {
    BigUint frob = frobenius_bound(bounds_n, config.bound_precision_bits);
    if (bounds_n >= 71) {
      BigUint collins = collins_bound(bounds_n);
      output = render_bounds(bounds_n, frob, &collins, config.machine);
    } else {
      output = render_bounds(bounds_n, frob, nullptr, config.machine);
    }
  });

  // scenario --p P --M M [--out FILE]
  auto* scenario_cmd =
      app.add_subcommand("scenario", "cyclic truncation family with unbounded (RO) index");
  uint64_t scenario_p = 3;
  int scenario_m = 1;
  std::string scenario_out;
  scenario_cmd->add_option("--p", scenario_p, "odd prime")->required();
  scenario_cmd->add_option("--M", scenario_m, "number of levels")->required();
  scenario_cmd->add_option("--out", scenario_out, "write the family file here");
  scenario_cmd->callback([&] {
    HomFamily family = truncation_scenario(scenario_p, scenario_m, config.order_cap);
    if (!scenario_out.empty()) write_file(scenario_out, render_family_text(family));
    IndependenceReport report = analyze_family(family, config.seed);
    output = render_independence(report, nullptr, config.machine);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  std::fwrite(output.data(), 1, output.size(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const famind::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
