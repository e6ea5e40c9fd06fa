// Command-line front end: axiom checking, symmetric L1 embedding, the LP
// distortion oracle, phi tables and distortion sweeps over test families.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "divl1/embedding.hpp"
#include "divl1/generators.hpp"
#include "divl1/io.hpp"
#include "divl1/lp.hpp"
#include "divl1/phi.hpp"

namespace {

using namespace divl1;

constexpr int kExitPass = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitIoError = 2;

int cmd_check(const std::string& input, bool exhaustive) {
  const RawDiversity raw = diversity_from_json(read_file(input));
  const AxiomVerdict verdict = exhaustive ? check_axioms_exhaustive(raw.n, raw.table)
                                          : check_axioms_reduced(raw.n, raw.table);
  std::cout << (exhaustive ? "exhaustive" : "reduced") << " check on n=" << raw.n << ": "
            << verdict.describe() << "\n";
  return verdict ? kExitPass : kExitMathFailure;
}

int cmd_embed(const std::string& input, const std::string& weights_path,
              const std::string& coords_path) {
  const SymmetricProfile profile = profile_from_json(read_file(input));
  const ProfileVerdict verdict = validate_profile(profile);
  if (!verdict) {
    std::cout << "invalid profile: " << verdict.describe() << "\n";
    return kExitMathFailure;
  }
  const SymmetricEmbedding emb = build_symmetric_embedding(profile);
  if (!emb.weights_materialized)
    throw IoError("weighting too large to materialize for n = " + std::to_string(profile.n()));

  write_file(weights_path, weighting_to_json(emb.weights));
  write_file(coords_path, coordinates_to_csv(coordinates_from_weights(emb.weights)));

  std::cout << "splits: " << emb.weights.weights().size() << "\n";
  for (const auto& choice : emb.report.choices)
    std::cout << "  i=" << choice.i << " -> l=" << choice.ell
              << " lambda=" << format_double(choice.lambda)
              << " per-split weight=" << format_double(choice.per_split_weight) << "\n";
  std::cout << "measured distortion: " << format_double(emb.report.distortion) << "\n";
  std::cout << "certified bound: " << format_double(emb.report.certified_bound) << "\n";
  return kExitPass;
}

int cmd_optimal(const std::string& input, const std::string& witness_path,
                const std::string& dump_path) {
  const RawDiversity raw = diversity_from_json(read_file(input));
  if (raw.n > 8) throw IoError("optimal: n = " + std::to_string(raw.n) + " exceeds the LP cap 8");
  const FiniteDiversity div = raw.checked();

  if (!dump_path.empty())
    write_file(dump_path, dump_lp(make_split_distortion_lp(div, canonical_splits(div.n()))));

  const SplitDistortionResult result = optimal_split_distortion(div);
  if (!witness_path.empty()) write_file(witness_path, weighting_to_json(result.witness));
  std::cout << "optimal split distortion: " << format_double(result.distortion) << "\n";
  std::cout << "simplex iterations: " << result.solution.iterations << "\n";
  return kExitPass;
}

int cmd_tables(int n, const std::string& out) {
  write_file(out, phi_table_to_csv(make_phi_table(n)));
  std::cout << "wrote phi/psi tables for n=" << n << " to " << out << "\n";
  return kExitPass;
}

struct SweepRow {
  int n = 0;
  std::string instance;
  double distortion = 0.0;
  std::optional<double> lp;
  double certified = 0.0;
};

void append_symmetric_instance(std::vector<SweepRow>& rows, int n, const std::string& label,
                               const SymmetricProfile& profile, bool with_lp) {
  SweepRow row;
  row.n = n;
  row.instance = label;
  const SymmetricEmbedding emb = build_symmetric_embedding(profile, 0);  // report only
  row.distortion = emb.report.distortion;
  row.certified = kCertifiedDistortionBound;
  if (with_lp && n <= 8)
    row.lp = optimal_split_distortion(diversity_from_profile(profile)).distortion;
  rows.push_back(std::move(row));
}

void append_diversity_instance(std::vector<SweepRow>& rows, int n, const std::string& label,
                               const FiniteDiversity& div, bool with_lp) {
  SweepRow row;
  row.n = n;
  row.instance = label;
  const double gamma = skewness(div);
  const SymmetricEmbedding emb = build_symmetric_embedding(symmetrize(div));
  if (!emb.weights_materialized)
    throw IoError("sweep: weighting too large to materialize for n = " + std::to_string(n));
  row.distortion = distortion(div, emb.weights).distortion;
  row.certified = kCertifiedDistortionBound * gamma;
  if (with_lp && n <= 8) row.lp = optimal_split_distortion(div).distortion;
  rows.push_back(std::move(row));
}

int cmd_sweep(int nmax, const std::string& family, std::uint64_t seed, bool with_lp,
              const std::string& out) {
  const int overall_cap = with_lp ? 12 : 30;
  if (nmax < 2 || nmax > overall_cap)
    throw IoError("sweep: nmax must be in [2, " + std::to_string(overall_cap) +
                  (with_lp ? "] when --lp is set" : "]"));

  std::vector<SweepRow> rows;
  if (family == "truncation") {
    for (int n = 2; n <= nmax; ++n)
      for (int i = 1; i <= n - 1; ++i)
        append_symmetric_instance(rows, n, "i=" + std::to_string(i), truncation_diversity(n, i),
                                  with_lp);
  } else if (family == "random-subadditive") {
    for (int n = 2; n <= nmax; ++n)
      for (int r = 0; r < 5; ++r) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(r);
        append_symmetric_instance(rows, n, "seed=" + std::to_string(s),
                                  random_subadditive_profile(n, s), with_lp);
      }
  } else if (family == "phi-rows") {
    for (int n = 2; n <= nmax; ++n)
      for (int ell = 1; ell <= n - 1; ++ell) {
        Eigen::VectorXd f(n);
        for (int k = 0; k < n; ++k) f(k) = phi(n, ell, k);
        append_symmetric_instance(rows, n, "l=" + std::to_string(ell), SymmetricProfile{f}, with_lp);
      }
  } else if (family == "diameter" || family == "l1" || family == "tsp" || family == "steiner") {
    const int family_cap = family == "steiner" ? 10 : family == "tsp" ? 13 : 16;
    for (int n = 2; n <= std::min(nmax, family_cap); ++n)
      for (int r = 0; r < 3; ++r) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(r);
        const int dim = 1 + r % 3;
        FiniteDiversity div = [&] {
          if (family == "diameter") return diameter_diversity(random_point_set(n, dim, s));
          if (family == "l1") return l1_box_diversity(random_point_set(n, dim, s));
          if (family == "tsp") return tsp_diversity(random_euclidean_metric(n, s));
          return steiner_diversity(random_euclidean_metric(n, s));
        }();
        append_diversity_instance(rows, n, "seed=" + std::to_string(s) + ";dim=" + std::to_string(dim),
                                  div, with_lp);
      }
  } else {
    throw IoError("sweep: unknown family \"" + family + "\"");
  }

  std::ostringstream csv;
  csv << "n,family,instance,distortion,lp_optimal,certified_bound\n";
  for (const auto& row : rows) {
    csv << row.n << "," << family << "," << row.instance << "," << format_double(row.distortion)
        << "," << (row.lp ? format_double(*row.lp) : std::string{}) << ","
        << format_double(row.certified) << "\n";
  }
  write_file(out, csv.str());
  std::cout << "wrote " << rows.size() << " rows to " << out << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite diversities: axiom checking, constant-distortion L1 embedding of "
               "symmetric diversities, and an LP oracle for optimal split distortion"};
  app.require_subcommand(1);

  std::string input, weights_path, coords_path, witness_path, dump_path, out, family;
  bool exhaustive = false, with_lp = false;
  int n = 0, nmax = 0;
  std::uint64_t seed = 0;

  auto* check = app.add_subcommand("check", "Check the diversity axioms on a JSON diversity");
  check->add_option("--input", input, "diversity JSON file")->required();
  check->add_flag("--exhaustive", exhaustive, "run the 8^n exhaustive triple check");

  auto* embed = app.add_subcommand("embed", "Embed a symmetric profile into L1 split weights");
  embed->add_option("--input", input, "profile JSON file")->required();
  embed->add_option("--weights", weights_path, "output split-weighting JSON")->required();
  embed->add_option("--coords", coords_path, "output coordinates CSV")->required();

  auto* optimal = app.add_subcommand("optimal", "LP-optimal split distortion (n <= 8)");
  optimal->add_option("--input", input, "diversity JSON file")->required();
  optimal->add_option("--witness", witness_path, "output witness weighting JSON");
  optimal->add_option("--dump-lp", dump_path, "dump the LP in plain text");

  auto* tables = app.add_subcommand("tables", "Emit phi/psi/capped-psi tables as CSV");
  tables->add_option("--n", n, "ground set size (2..64)")->required();
  tables->add_option("--out", out, "output CSV path")->required();

  auto* sweep = app.add_subcommand("sweep", "Distortion sweep over a test family");
  sweep->add_option("--nmax", nmax, "largest ground set size")->required();
  sweep->add_option("--family", family,
                    "truncation|random-subadditive|phi-rows|diameter|l1|tsp|steiner")
      ->required();
  sweep->add_option("--seed", seed, "random seed")->required();
  sweep->add_flag("--lp", with_lp, "also solve the LP oracle (n <= 8 rows only)");
  sweep->add_option("--out", out, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitIoError;
  }

  try {
    if (check->parsed()) return cmd_check(input, exhaustive);
    if (embed->parsed()) return cmd_embed(input, weights_path, coords_path);
    if (optimal->parsed()) return cmd_optimal(input, witness_path, dump_path);
    if (tables->parsed()) return cmd_tables(n, out);
    if (sweep->parsed()) return cmd_sweep(nmax, family, seed, with_lp, out);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitIoError;
  }
  return kExitIoError;
}
