// Command-line surface for the carries-chain library: exact transition
// matrices, character tables, identity verification batteries, seeded Monte
// Carlo validation, and total-variation curves.
//
// Exit codes: 0 success, 1 verification/statistical failure, 2 usage error.
// Output format: JSON envelope (default) or CSV via --format / CARRIES_FORMAT.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <carries/carries.hpp>

namespace {

using carries::json;

constexpr double kZThreshold = 4.0;

std::string resolve_format(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("CARRIES_FORMAT")) {
    const std::string v(env);
    if (v == "json" || v == "csv") return v;
  }
  return "json";
}

void emit(const std::string& format, const json& envelope_json,
          const std::string& csv) {
  if (format == "csv")
    std::cout << csv;
  else
    std::cout << envelope_json.dump(2) << '\n';
}

int run_limits(const std::string& format) {
  const json payload{
      {"brute_force_cap", carries::kDefaultBruteForceCap},
      {"group_algebra_cap", carries::kDefaultGroupAlgebraCap}};
  std::string csv = carries::csv_line({"limit", "value"});
  csv += carries::csv_line({"brute_force_cap",
                            std::to_string(carries::kDefaultBruteForceCap)});
  csv += carries::csv_line({"group_algebra_cap",
                            std::to_string(carries::kDefaultGroupAlgebraCap)});
  emit(format, carries::envelope("limits", json::object(), payload), csv);
  return 0;
}

int run_matrix(int n, long b, unsigned long power, const std::string& format) {
  const carries::Matrix<carries::Rational> result =
      carries::holte_matrix(n, b).entries().pow(power);
  const json params{{"n", n}, {"b", b}, {"power", power}};
  const json payload{{"matrix", carries::matrix_json(result)}};
  emit(format, carries::envelope("matrix", params, payload),
       carries::matrix_csv(result));
  return 0;
}

int run_foulkes(int n, const std::string& check, const std::string& format) {
  const carries::FoulkesTable table = carries::foulkes_table_recursive(n);

  std::vector<carries::CheckOutcome> outcomes;
  const auto compare_against = [&](const std::string& name, auto&& formula) {
    carries::CheckOutcome c;
    c.identity = "recurrence table equals " + name + " on all entries";
    c.passed = true;
    for (int k = 0; k < n && c.passed; ++k)
      for (int j = 1; j <= n; ++j)
        if (table.value(k, j) != formula(n, k, j)) {
          c.passed = false;
          c.detail = "mismatch at (k, j) = (" + std::to_string(k) + ", " +
                     std::to_string(j) + ")";
          break;
        }
    outcomes.push_back(std::move(c));
  };
  if (check == "closed" || check == "all")
    compare_against("the alternating-sum closed form",
                    [](int nn, int k, int j) {
                      return carries::foulkes_closed(nn, k, j);
                    });
  if (check == "alt" || check == "all")
    compare_against("the Eulerian-expansion formula",
                    [](int nn, int k, int j) {
                      return carries::foulkes_alt_closed(nn, k, j);
                    });

  const json params{{"n", n}, {"check", check}};
  json payload{{"table", carries::foulkes_json(table)}};
  if (!outcomes.empty())
    payload["checks"] = carries::outcomes_json(outcomes);
  emit(format, carries::envelope("foulkes", params, payload),
       carries::foulkes_csv(table));

  if (!carries::all_passed(outcomes)) {
    for (const auto& c : outcomes)
      if (!c.passed)
        std::cerr << "check failed: " << c.identity << " (" << c.detail
                  << ")\n";
    return 1;
  }
  return 0;
}

int run_verify(int n, long b, const std::string& suite, int group_cap,
               const std::string& format) {
  const std::vector<carries::CheckOutcome> outcomes =
      carries::run_verify_suite(suite, n, b, group_cap);
  const bool ok = carries::all_passed(outcomes);
  const json params{
      {"n", n}, {"b", b}, {"suite", suite}, {"group_cap", group_cap}};
  const json payload{{"outcomes", carries::outcomes_json(outcomes)},
                     {"all_passed", ok}};
  emit(format, carries::envelope("verify", params, payload),
       carries::outcomes_csv(outcomes));
  return ok ? 0 : 1;
}

int run_simulate(const std::string& mode, int n, long b, unsigned long r,
                 std::uint64_t samples, std::uint64_t seed, bool strict,
                 const std::string& format) {
  double worst_z = 0.0;
  json payload;
  std::string csv;
  if (mode == "carries") {
    carries::SimulationConfig cfg;
    cfg.n = n;
    cfg.b = b;
    cfg.r = r;
    cfg.samples = samples;
    cfg.seed = seed;
    const std::vector<carries::MomentReport> reports =
        carries::moment_comparison(cfg);
    worst_z = carries::max_abs_z(reports);
    payload = json{{"mode", mode},
                   {"reports", carries::moment_reports_json(reports)}};
    csv = carries::moment_reports_csv(reports);
  } else {  // shuffles
    const std::vector<carries::FrequencyCell> cells =
        carries::descent_histogram_report(n, b, r, samples, seed);
    worst_z = carries::max_abs_z(cells);
    payload = json{{"mode", mode},
                   {"histogram", carries::frequency_cells_json(cells)},
                   {"exact_gf",
                    carries::descent_gf_json(carries::descent_gf(n, b, r))}};
    csv = carries::frequency_cells_csv(cells);
  }
  payload["max_abs_z"] = worst_z;
  payload["z_threshold"] = kZThreshold;
  payload["within_threshold"] = worst_z < kZThreshold;

  const json params{{"mode", mode},     {"n", n},       {"b", b},
                    {"r", r},           {"samples", samples},
                    {"seed", seed},     {"strict", strict}};
  emit(format, carries::envelope("simulate", params, payload), csv);

  if (strict && worst_z >= kZThreshold) {
    std::cerr << "statistical failure: max |z| = " << worst_z << " >= "
              << kZThreshold << "\n";
    return 1;
  }
  return 0;
}

int run_tv(int n, long b, unsigned long kmax, const std::string& format) {
  json values = json::array();
  std::string csv = carries::csv_line({"k", "tv", "approx"});
  for (unsigned long k = 0; k <= kmax; ++k) {
    const carries::Rational tv = carries::tv_distance(n, b, k);
    values.push_back(json{{"k", k},
                          {"tv", carries::rational_json(tv)},
                          {"approx", tv.approx()}});
    csv += carries::csv_line({std::to_string(k), tv.to_string(),
                              carries::float_repr(tv.approx())});
  }
  const json params{{"n", n}, {"b", b}, {"kmax", kmax}};
  emit(format, carries::envelope("tv", params, json{{"values", values}}), csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact computations for the base-b carries chain: transition matrix, "
      "character-table eigenstructure, idempotent checks, shuffle "
      "statistics, and total-variation curves."};
  app.require_subcommand(0, 1);

  bool limits = false;
  app.add_flag("--limits", limits,
               "print the enumeration caps (brute force, group algebra) and "
               "exit");
  std::string format;
  app.add_option("--format", format,
                 "output format; default from CARRIES_FORMAT or json")
      ->check(CLI::IsMember({"json", "csv"}));

  int matrix_n = 0;
  long matrix_b = 0;
  unsigned long matrix_power = 1;
  CLI::App* matrix_cmd = app.add_subcommand(
      "matrix", "exact carries transition matrix (optionally a power of it)");
  matrix_cmd->fallthrough();
  matrix_cmd->add_option("--n", matrix_n, "number of summands")
      ->required()
      ->check(CLI::PositiveNumber);
  matrix_cmd->add_option("--b", matrix_b, "base")
      ->required()
      ->check(CLI::Range(2L, 1000000L));
  matrix_cmd->add_option("--power", matrix_power, "matrix power (default 1)");

  int foulkes_n = 0;
  std::string foulkes_check = "recursive";
  CLI::App* foulkes_cmd = app.add_subcommand(
      "foulkes", "character table whose rows are the left eigenvectors");
  foulkes_cmd->fallthrough();
  foulkes_cmd->add_option("--n", foulkes_n, "number of cards")
      ->required()
      ->check(CLI::PositiveNumber);
  foulkes_cmd
      ->add_option("--check", foulkes_check,
                   "cross-check the recurrence table against closed formulas "
                   "(recursive = construct only)")
      ->check(CLI::IsMember({"recursive", "closed", "alt", "all"}));

  int verify_n = 0;
  long verify_b = 10;
  std::string verify_suite = "all";
  int verify_group_cap = carries::kDefaultGroupAlgebraCap;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "run a named identity battery; exit 0 iff all pass");
  verify_cmd->fallthrough();
  verify_cmd->add_option("--n", verify_n, "size parameter")
      ->required()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--b", verify_b, "base (default 10)")
      ->check(CLI::Range(2L, 1000000L));
  verify_cmd
      ->add_option("--suite", verify_suite,
                   "identity battery to run (default all)")
      ->check(CLI::IsMember(carries::verify_suite_names()));
  verify_cmd->add_option(
      "--group-cap", verify_group_cap,
      "override the group-algebra cap (raises the idempotent-suite limit)");

  std::string sim_mode;
  int sim_n = 0;
  long sim_b = 0;
  unsigned long sim_r = 1;
  std::uint64_t sim_samples = 0;
  std::uint64_t sim_seed = 0;
  bool sim_strict = false;
  CLI::App* sim_cmd = app.add_subcommand(
      "simulate",
      "seeded Monte Carlo comparison against the exact values");
  sim_cmd->fallthrough();
  sim_cmd->add_option("--mode", sim_mode, "carries | shuffles")
      ->required()
      ->check(CLI::IsMember({"carries", "shuffles"}));
  sim_cmd->add_option("--n", sim_n, "summands / deck size")
      ->required()
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--b", sim_b, "base")
      ->required()
      ->check(CLI::Range(2L, 1000000L));
  sim_cmd->add_option("--r", sim_r, "observation lag / shuffle exponent "
                                    "(default 1)");
  sim_cmd->add_option("--samples", sim_samples, "number of replications")
      ->required()
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--seed", sim_seed, "PRNG seed (default 0)");
  sim_cmd->add_flag("--strict", sim_strict,
                    "exit 1 if any |z| >= " + std::to_string(kZThreshold));

  int tv_n = 0;
  long tv_b = 0;
  unsigned long tv_kmax = 0;
  CLI::App* tv_cmd = app.add_subcommand(
      "tv", "exact total-variation distance to stationarity for k = 0..kmax");
  tv_cmd->fallthrough();
  tv_cmd->add_option("--n", tv_n, "number of summands")
      ->required()
      ->check(CLI::PositiveNumber);
  tv_cmd->add_option("--b", tv_b, "base")
      ->required()
      ->check(CLI::Range(2L, 1000000L));
  tv_cmd->add_option("--kmax", tv_kmax, "largest step count")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message and usage hint to stderr
    return 2;
  }

  const std::string fmt = resolve_format(format);
  try {
    if (limits) return run_limits(fmt);
    if (matrix_cmd->parsed())
      return run_matrix(matrix_n, matrix_b, matrix_power, fmt);
    if (foulkes_cmd->parsed()) return run_foulkes(foulkes_n, foulkes_check, fmt);
    if (verify_cmd->parsed())
      return run_verify(verify_n, verify_b, verify_suite, verify_group_cap,
                        fmt);
    if (sim_cmd->parsed())
      return run_simulate(sim_mode, sim_n, sim_b, sim_r, sim_samples, sim_seed,
                          sim_strict, fmt);
    if (tv_cmd->parsed()) return run_tv(tv_n, tv_b, tv_kmax, fmt);
    std::cerr << app.help();
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
