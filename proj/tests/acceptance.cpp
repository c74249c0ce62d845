// Acceptance battery: twelve self-contained criteria, each printed as one
// PASS/FAIL line with its wall-clock time against a fixed budget. A
// criterion fails on any inexact value or on a blown budget; the process
// exits nonzero if anything fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

#include <carries/carries.hpp>

namespace {

using carries::Int;
using carries::Rational;
using json = nlohmann::ordered_json;

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string command =
      std::string(CARRIES_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  CliResult result;
  if (pipe == nullptr) return result;
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
    result.out.append(buffer, got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

// --------------------------------------------------------------------------
// Criterion bodies. Each returns true on success and may leave an
// explanation in `detail` on failure.
// --------------------------------------------------------------------------

/// 1. The CLI (not the library directly) reproduces the fixed 5-card
/// character table and the symbolic 3-summand matrix for every base 2..12.
bool criterion_cli_tables(std::string& detail) {
  const CliResult foulkes = run_cli("foulkes --n 5 --check all");
  if (foulkes.exit_code != 0) {
    detail = "foulkes --n 5 exited with " + std::to_string(foulkes.exit_code);
    return false;
  }
  const long expected_table[5][5] = {
      {1, -1, 1, -1, 1},    //
      {-4, 2, 2, -10, 26},  //
      {6, 0, -6, 0, 66},    //
      {-4, -2, 2, 10, 26},  //
      {1, 1, 1, 1, 1},      //
  };
  try {
    const json env = json::parse(foulkes.out);
    const json& rows = env.at("payload").at("table").at("rows");
    if (rows.size() != 5) {
      detail = "character table does not have 5 rows";
      return false;
    }
    for (int k = 0; k < 5; ++k)
      for (int j = 1; j <= 5; ++j)
        if (rows[k].at("values")[j - 1].get<std::string>() !=
            std::to_string(expected_table[k][j - 1])) {
          detail = "table mismatch at (k, j) = (" + std::to_string(k) + ", " +
                   std::to_string(j) + ")";
          return false;
        }
  } catch (const std::exception& e) {
    detail = std::string("foulkes JSON: ") + e.what();
    return false;
  }

  for (long b = 2; b <= 12; ++b) {
    const long b2 = b * b;
    const long numerators[3][3] = {
        {b2 + 3 * b + 2, 4 * b2 - 4, b2 - 3 * b + 2},
        {b2 - 1, 4 * b2 + 2, b2 - 1},
        {b2 - 3 * b + 2, 4 * b2 - 4, b2 + 3 * b + 2},
    };
    const CliResult matrix =
        run_cli("matrix --n 3 --b " + std::to_string(b));
    if (matrix.exit_code != 0) {
      detail = "matrix --n 3 --b " + std::to_string(b) + " exited with " +
               std::to_string(matrix.exit_code);
      return false;
    }
    try {
      const json env = json::parse(matrix.out);
      const json& rows = env.at("payload").at("matrix");
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          const Rational got(Int(rows[i][j].at("num").get<std::string>()),
                             Int(rows[i][j].at("den").get<std::string>()));
          if (got != Rational(numerators[i][j], 6 * b2)) {
            detail = "matrix mismatch at b = " + std::to_string(b) +
                     ", entry (" + std::to_string(i) + ", " +
                     std::to_string(j) + ")";
            return false;
          }
        }
    } catch (const std::exception& e) {
      detail = std::string("matrix JSON: ") + e.what();
      return false;
    }
  }
  return true;
}

/// 2. The recurrence table equals both closed forms on every entry, n <= 8.
bool criterion_triple_formulas(std::string& detail) {
  for (int n = 1; n <= 8; ++n) {
    const carries::FoulkesTable table = carries::foulkes_table_recursive(n);
    for (int k = 0; k < n; ++k)
      for (int j = 1; j <= n; ++j) {
        const Int& v = table.value(k, j);
        if (v != carries::foulkes_closed(n, k, j) ||
            v != carries::foulkes_alt_closed(n, k, j)) {
          detail = "disagreement at (n, k, j) = (" + std::to_string(n) +
                   ", " + std::to_string(k) + ", " + std::to_string(j) + ")";
          return false;
        }
      }
  }
  return true;
}

/// 3. V M = D V and M U = U D for n <= 6, b in {2,3,5,10}; V U = n! I for
/// n <= 8.
bool criterion_eigenstructure(std::string& detail) {
  for (int n = 1; n <= 6; ++n)
    for (long b : {2L, 3L, 5L, 10L}) {
      const carries::CheckResult left = carries::left_eigen_check(n, b);
      if (!left.ok) {
        detail = left.detail;
        return false;
      }
      const carries::CheckResult right = carries::right_eigen_check(n, b);
      if (!right.ok) {
        detail = right.detail;
        return false;
      }
    }
  for (int n = 1; n <= 8; ++n) {
    const carries::CheckResult dual = carries::duality_check(n);
    if (!dual.ok) {
      detail = dual.detail;
      return false;
    }
  }
  return true;
}

/// 4. |det| of the character table equals 2! 3! ... n! for n <= 8.
bool criterion_determinant(std::string& detail) {
  for (int n = 1; n <= 8; ++n) {
    const carries::TableDeterminant det = carries::table_determinant(n);
    if (det.abs_value != det.expected_abs) {
      detail = "n = " + std::to_string(n) + ": det = " +
               det.signed_value.get_str() + ", expected |det| = " +
               det.expected_abs.get_str();
      return false;
    }
  }
  if (carries::table_determinant(5).abs_value != 34560) {
    detail = "n = 5 determinant is not 34560";
    return false;
  }
  return true;
}

/// 5. Branching (n <= 8), regular character (n <= 8), and the power-map
/// character identity (n <= 7, M <= 5).
bool criterion_character_rules(std::string& detail) {
  for (int n = 2; n <= 8; ++n) {
    const carries::CheckResult branch = carries::branching_check(n);
    if (!branch.ok) {
      detail = branch.detail;
      return false;
    }
  }
  for (int n = 1; n <= 8; ++n) {
    const carries::CheckResult regular = carries::regular_character_check(n);
    if (!regular.ok) {
      detail = "n = " + std::to_string(n) + ": " + regular.detail;
      return false;
    }
  }
  for (int n = 1; n <= 7; ++n)
    for (int m = 0; m <= 5; ++m) {
      const carries::CheckResult chi = carries::permutation_character_check(n, m);
      if (!chi.ok) {
        detail = "n = " + std::to_string(n) + ": " + chi.detail;
        return false;
      }
    }
  return true;
}

/// 6. The three right-eigenvector formulas agree, and each eigenvector is
/// n! times the corresponding idempotent value column, for n <= 8.
bool criterion_right_eigenvectors(std::string& detail) {
  for (int n = 1; n <= 8; ++n) {
    const carries::IdempotentValueTable table = carries::idempotent_values(n);
    const Rational nfact{carries::factorial(static_cast<unsigned>(n))};
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        const Rational holte = carries::right_eig_holte(n, j, i);
        if (holte != carries::right_eig_simple_stirling(n, j, i) ||
            holte != carries::right_eig_simple(n, j, i)) {
          detail = "formula disagreement at (n, j, i) = (" +
                   std::to_string(n) + ", " + std::to_string(j) + ", " +
                   std::to_string(i) + ")";
          return false;
        }
        if (holte != nfact * table.value(n - j, i)) {
          detail = "eigenvector/idempotent bridge fails at (n, j, i) = (" +
                   std::to_string(n) + ", " + std::to_string(j) + ", " +
                   std::to_string(i) + ")";
          return false;
        }
      }
  }
  return true;
}

/// 7. Convolution idempotency and completeness on S_n for n <= 6
/// (n = 7 opt-in via CARRIES_ACCEPT_GROUP_N7=1).
bool criterion_idempotency(std::string& detail) {
  const bool with_n7 = std::getenv("CARRIES_ACCEPT_GROUP_N7") != nullptr;
  const int max_n = with_n7 ? 7 : 6;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<carries::GroupAlgebraElement> e;
    for (int k = 1; k <= n; ++k)
      e.push_back(carries::idempotent_element(n, k, max_n));
    const carries::GroupAlgebraElement zero(n);
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l) {
        const carries::GroupAlgebraElement product =
            carries::convolve(e[k - 1], e[l - 1]);
        const carries::GroupAlgebraElement& expected =
            (k == l) ? e[k - 1] : zero;
        if (!(product == expected)) {
          detail = "E_" + std::to_string(k) + " * E_" + std::to_string(l) +
                   " wrong on S_" + std::to_string(n);
          return false;
        }
      }
    if (!(carries::idempotent_sum(n, max_n) ==
          carries::GroupAlgebraElement::unit(n))) {
      detail = "idempotent sum is not the unit on S_" + std::to_string(n);
      return false;
    }
  }
  return true;
}

/// 8. Closed-form carry moments equal exact chain computations on the whole
/// grid n in {2..6}, b in {2,10}, s, r <= 5, with the required positivity.
bool criterion_covariances(std::string& detail) {
  try {
    for (int n = 2; n <= 6; ++n)
      for (long b : {2L, 10L}) {
        for (unsigned long r = 1; r <= 5; ++r) {
          if (carries::exact_cov_stationary(n, b, r).sign() <= 0) {
            detail = "stationary covariance not positive at n = " +
                     std::to_string(n) + ", b = " + std::to_string(b) +
                     ", r = " + std::to_string(r);
            return false;
          }
          for (unsigned long s = 0; s <= 5; ++s) {
            const Rational cov = carries::exact_cov_from_zero(n, b, s, r);
            const bool ok = s == 0 ? cov.is_zero() : cov.sign() > 0;
            if (!ok) {
              detail = "cold-start covariance sign wrong at n = " +
                       std::to_string(n) + ", b = " + std::to_string(b) +
                       ", s = " + std::to_string(s) + ", r = " +
                       std::to_string(r);
              return false;
            }
          }
        }
        for (unsigned long r = 0; r <= 5; ++r)
          carries::exact_moments_from_zero(n, b, r);
      }
  } catch (const std::exception& e) {
    detail = e.what();  // formula/chain disagreement throws
    return false;
  }
  return true;
}

/// 9. Descent-GF coefficients equal the exact carries law for n <= 8,
/// b in {2,3,10}, r <= 3.
bool criterion_gf_equivalence(std::string& detail) {
  for (int n = 1; n <= 8; ++n)
    for (long b : {2L, 3L, 10L})
      for (unsigned long r = 0; r <= 3; ++r) {
        const carries::CheckResult result =
            carries::gf_carry_equivalence(n, b, r);
        if (!result.ok) {
          detail = result.detail;
          return false;
        }
      }
  return true;
}

/// 10. The worked base-10 addition of three 10-digit numbers produces its
/// exact carry sequence.
bool criterion_worked_example(std::string& detail) {
  const std::vector<Int> summands{Int("7866751918"), Int("6592147787"),
                                  Int("8842499859")};
  const std::vector<int> expected{0, 2, 1, 2, 1, 1, 1, 1, 2, 2, 2};
  const std::vector<int> got = carries::carries_of_addition(summands, 10);
  if (got != expected) {
    std::ostringstream os;
    os << "got";
    for (int c : got) os << ' ' << c;
    detail = os.str();
    return false;
  }
  // The final carry must also be the leading part of the exact sum.
  if (Int("23301399564") !=
      summands[0] + summands[1] + summands[2]) {
    detail = "sum of the worked example is wrong";
    return false;
  }
  return true;
}

/// 11. Pinned-seed Monte Carlo: transition frequencies (n=3, b=10), carry
/// moments (n=3, b=10, r=2), and the 4-shuffle descent histogram (n=5),
/// each with 10^6 samples, all z-scores within 4.
bool criterion_statistics(std::string& detail) {
  {
    const auto cells = carries::transition_frequency_report(3, 10, 1000000, 2026);
    const double worst = carries::max_abs_z(cells);
    if (worst >= 4.0) {
      detail = "transition frequencies: max |z| = " + std::to_string(worst);
      return false;
    }
  }
  {
    carries::SimulationConfig cfg;
    cfg.n = 3;
    cfg.b = 10;
    cfg.r = 2;
    cfg.samples = 1000000;
    cfg.seed = 42;
    const auto reports = carries::moment_comparison(cfg);
    const double worst = carries::max_abs_z(reports);
    if (worst >= 4.0) {
      detail = "carry moments: max |z| = " + std::to_string(worst);
      return false;
    }
  }
  {
    const auto cells = carries::descent_histogram_report(5, 2, 2, 1000000, 7);
    const double worst = carries::max_abs_z(cells);
    if (worst >= 4.0) {
      detail = "descent histogram: max |z| = " + std::to_string(worst);
      return false;
    }
  }
  return true;
}

/// 12. Brute-force oracles: two-summand digit-pair enumeration reproduces
/// the matrix for b <= 16, and the descent census over S_n reproduces the
/// Eulerian numbers for n <= 8.
bool criterion_brute_force(std::string& detail) {
  for (long b = 2; b <= 16; ++b) {
    const carries::CarriesMatrix m = carries::holte_matrix(2, b);
    for (int i = 0; i < 2; ++i) {
      long counts[2] = {0, 0};
      for (long d1 = 0; d1 < b; ++d1)
        for (long d2 = 0; d2 < b; ++d2) ++counts[(d1 + d2 + i) / b];
      for (int j = 0; j < 2; ++j)
        if (m(i, j) != Rational(counts[j], b * b)) {
          detail = "digit-pair enumeration differs at b = " +
                   std::to_string(b) + ", (i, j) = (" + std::to_string(i) +
                   ", " + std::to_string(j) + ")";
          return false;
        }
    }
  }
  for (int n = 1; n <= 8; ++n) {
    std::vector<Int> census(static_cast<size_t>(n), 0);
    carries::for_each_permutation(
        n,
        [&](const carries::Permutation& p) {
          census[static_cast<size_t>(p.descent_count())] += 1;
        },
        8);
    for (int k = 0; k < n; ++k)
      if (census[static_cast<size_t>(k)] !=
          carries::eulerian(static_cast<unsigned>(n), k)) {
        detail = "descent census differs from the Eulerian number at (n, k) "
                 "= (" + std::to_string(n) + ", " + std::to_string(k) + ")";
        return false;
      }
  }
  return true;
}

struct Criterion {
  int number;
  std::string label;
  double budget_seconds;
  std::function<bool(std::string&)> body;
};

}  // namespace

int main() {
  // The stated 60 s allowance for criterion 7 covers the default n <= 6
  // scope; the opt-in n = 7 pass multiplies ~25M permutation pairs per
  // convolution and gets a correspondingly larger allowance.
  const bool group_n7 = std::getenv("CARRIES_ACCEPT_GROUP_N7") != nullptr;
  const std::vector<Criterion> criteria{
      {1,
       "command-line binary reproduces the 5-card character table and the "
       "symbolic 3-summand matrix for b = 2..12",
       1.0, criterion_cli_tables},
      {2, "character recurrence equals both closed forms for n <= 8", 5.0,
       criterion_triple_formulas},
      {3,
       "left/right eigenvector identities (n <= 6, b in {2,3,5,10}) and "
       "duality V U = n! I (n <= 8)",
       10.0, criterion_eigenstructure},
      {4, "character-table determinant equals 2! 3! ... n! for n <= 8", 5.0,
       criterion_determinant},
      {5,
       "branching (n <= 8), regular character (n <= 8), and power-map "
       "characters (n <= 7, M <= 5)",
       10.0, criterion_character_rules},
      {6,
       "right-eigenvector formulas agree and equal n! times the idempotent "
       "values for n <= 8",
       5.0, criterion_right_eigenvectors},
      {7,
       "group-algebra idempotency and completeness for n <= 6 (n = 7 "
       "opt-in)",
       group_n7 ? 600.0 : 60.0, criterion_idempotency},
      {8,
       "carry moment formulas equal exact chain computations (n = 2..6, "
       "b in {2,10}, s, r <= 5)",
       30.0, criterion_covariances},
      {9,
       "shuffle descent GF equals the carries law (n <= 8, b in {2,3,10}, "
       "r <= 3)",
       30.0, criterion_gf_equivalence},
      {10, "worked three-summand base-10 addition yields its carry sequence",
       1.0, criterion_worked_example},
      {11,
       "pinned-seed Monte Carlo z-scores stay below 4 with 10^6 samples "
       "(transitions, moments, descent histogram)",
       120.0, criterion_statistics},
      {12,
       "brute-force oracles: digit-pair enumeration (b <= 16) and descent "
       "census vs Eulerian numbers (n <= 8)",
       10.0, criterion_brute_force},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.body(detail);
    } catch (const std::exception& e) {
      detail = std::string("unexpected exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool in_budget = elapsed < criterion.budget_seconds;
    char timing[64];
    std::snprintf(timing, sizeof(timing), "%.2fs < %.0fs", elapsed,
                  criterion.budget_seconds);
    if (ok && in_budget) {
      std::cout << "PASS criterion " << criterion.number << " [" << timing
                << "]: " << criterion.label << "\n";
    } else {
      ++failures;
      std::cout << "FAIL criterion " << criterion.number << " [" << timing
                << "]: " << criterion.label;
      if (!ok)
        std::cout << " — " << (detail.empty() ? "check failed" : detail);
      if (!in_budget) std::cout << " — time budget exceeded";
      std::cout << "\n";
    }
  }

  if (failures == 0) {
    std::cout << "all 12 acceptance criteria passed\n";
    return 0;
  }
  std::cout << failures << " acceptance criteria failed\n";
  return 1;
}
