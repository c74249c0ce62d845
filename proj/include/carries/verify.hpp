#pragma once

#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "carries/carries_matrix.hpp"
#include "carries/check.hpp"
#include "carries/eigenstructure.hpp"
#include "carries/foulkes.hpp"
#include "carries/idempotents.hpp"
#include "carries/shuffle_stats.hpp"

namespace carries {

/// One verified identity: machine-readable verdict plus human detail (the
/// failing indices, a skip reason, or an informative value).
struct CheckOutcome {
  std::string identity;
  bool passed = false;
  std::string detail;
};

namespace detail {

inline CheckOutcome outcome(std::string identity, const CheckResult& r) {
  return {std::move(identity), r.ok, r.ok ? std::string() : r.detail};
}

inline CheckOutcome skipped(std::string identity, std::string why) {
  return {std::move(identity), true, "skipped: " + std::move(why)};
}

}  // namespace detail

inline std::vector<std::string> verify_suite_names() {
  return {"eigen",   "duality",    "branching",  "determinant", "regular",
          "chi-m",   "gf",         "covariance", "idempotents", "all"};
}

/// V M = D V, M U = U D, and the spectral reconstruction of M^k.
inline std::vector<CheckOutcome> suite_eigen(int n, long b) {
  std::vector<CheckOutcome> out;
  out.push_back(detail::outcome("left eigenvectors: V M = D V (b = " +
                                    std::to_string(b) + ")",
                                left_eigen_check(n, b)));
  out.push_back(detail::outcome("right eigenvectors: M U = U D (b = " +
                                    std::to_string(b) + ")",
                                right_eigen_check(n, b)));
  for (unsigned long k = 1; k <= 3; ++k)
    out.push_back(detail::outcome(
        "spectral expansion: U D^" + std::to_string(k) + " V / n! = M^" +
            std::to_string(k),
        spectral_check(n, b, k)));
  return out;
}

/// V U = n! I, plus the right-eigen property at the two bases the duality
/// contract names.
inline std::vector<CheckOutcome> suite_duality(int n) {
  std::vector<CheckOutcome> out;
  out.push_back(detail::outcome("duality: V U = n! I", duality_check(n)));
  for (long b : {2L, 10L})
    out.push_back(detail::outcome(
        "right eigenvectors: M U = U D (b = " + std::to_string(b) + ")",
        right_eigen_check(n, b)));
  return out;
}

inline std::vector<CheckOutcome> suite_branching(int n) {
  if (n < 2)
    return {detail::skipped("branching rule from the (n-1)-card table",
                            "needs n >= 2")};
  return {detail::outcome("branching rule from the (n-1)-card table",
                          branching_check(n))};
}

inline std::vector<CheckOutcome> suite_determinant(int n) {
  const TableDeterminant det = table_determinant(n);
  CheckOutcome out;
  out.identity = "character-table determinant: |det| = 2! 3! ... n!";
  out.passed = det.abs_value == det.expected_abs;
  out.detail = "det = " + det.signed_value.get_str() +
               ", expected |det| = " + det.expected_abs.get_str();
  return {out};
}

inline std::vector<CheckOutcome> suite_regular(int n) {
  return {detail::outcome(
      "column sums give the regular character: sum_k chi_j = n! [j = n]",
      regular_character_check(n))};
}

inline std::vector<CheckOutcome> suite_chi_m(int n) {
  std::vector<CheckOutcome> out;
  for (int m = 0; m <= 5; ++m)
    out.push_back(detail::outcome(
        "power-map character identity at M = " + std::to_string(m) +
            ": M^j = sum_k C(M+k, n) chi_j",
        permutation_character_check(n, m)));
  return out;
}

inline std::vector<CheckOutcome> suite_gf(int n, long b) {
  std::vector<CheckOutcome> out;
  for (unsigned long r = 0; r <= 3; ++r)
    out.push_back(detail::outcome(
        "descent GF of a b^" + std::to_string(r) +
            "-shuffle = law of kappa_" + std::to_string(r),
        gf_carry_equivalence(n, b, r)));
  return out;
}

inline std::vector<CheckOutcome> suite_covariance(int n, long b) {
  if (n < 2)
    return {detail::skipped("carry moment formulas", "need n >= 2 summands")};
  std::vector<CheckOutcome> out;

  {
    CheckOutcome c;
    c.identity = "stationary covariance formula = chain summation, r = 1..3, "
                 "strictly positive";
    c.passed = true;
    try {
      for (unsigned long r = 1; r <= 3; ++r)
        if (exact_cov_stationary(n, b, r).sign() <= 0) {
          c.passed = false;
          c.detail = "not strictly positive at r = " + std::to_string(r);
          break;
        }
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = e.what();
    }
    out.push_back(std::move(c));
  }
  {
    CheckOutcome c;
    c.identity =
        "mean/variance formulas from start 0 = exact law moments, r = 0..3";
    c.passed = true;
    try {
      for (unsigned long r = 0; r <= 3; ++r) exact_moments_from_zero(n, b, r);
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = e.what();
    }
    out.push_back(std::move(c));
  }
  {
    CheckOutcome c;
    c.identity = "lagged covariance formula from start 0 = chain summation, "
                 "s = 0..3, r = 1..3, strictly positive for s >= 1";
    c.passed = true;
    try {
      for (unsigned long s = 0; s <= 3 && c.passed; ++s)
        for (unsigned long r = 1; r <= 3; ++r) {
          const Rational cov = exact_cov_from_zero(n, b, s, r);
          const bool positive_ok = s == 0 ? cov.is_zero() : cov.sign() > 0;
          if (!positive_ok) {
            c.passed = false;
            c.detail = "sign wrong at s = " + std::to_string(s) +
                       ", r = " + std::to_string(r);
            break;
          }
        }
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = e.what();
    }
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<CheckOutcome> suite_idempotents(
    int n, int cap = kDefaultGroupAlgebraCap) {
  if (n > cap)
    return {detail::skipped(
        "idempotent convolution checks on S_" + std::to_string(n),
        "n exceeds the group-algebra cap " + std::to_string(cap))};

  std::vector<GroupAlgebraElement> e;
  e.reserve(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) e.push_back(idempotent_element(n, k, cap));

  std::vector<CheckOutcome> out;
  {
    CheckOutcome c;
    c.identity = "orthogonal idempotency: E_k * E_l = [k = l] E_k on S_" +
                 std::to_string(n);
    c.passed = true;
    const GroupAlgebraElement zero(n);
    for (int k = 1; k <= n && c.passed; ++k)
      for (int l = 1; l <= n; ++l) {
        const GroupAlgebraElement expected = (k == l) ? e[k - 1] : zero;
        if (!(convolve(e[k - 1], e[l - 1]) == expected)) {
          c.passed = false;
          c.detail =
              "fails at (k, l) = (" + std::to_string(k) + ", " +
              std::to_string(l) + ")";
          break;
        }
      }
    out.push_back(std::move(c));
  }
  {
    CheckOutcome c;
    c.identity = "completeness: sum_k E_k = unit on S_" + std::to_string(n);
    c.passed = idempotent_sum(n, cap) == GroupAlgebraElement::unit(n);
    if (!c.passed) c.detail = "sum of the n idempotents is not the unit";
    out.push_back(std::move(c));
  }
  {
    CheckOutcome c;
    c.identity = "sign-twisted family stays idempotent on S_" +
                 std::to_string(n);
    c.passed = true;
    for (int k = 1; k <= n; ++k) {
      const GroupAlgebraElement t = e[k - 1].sign_twisted();
      if (!(convolve(t, t) == t)) {
        c.passed = false;
        c.detail = "fails at k = " + std::to_string(k);
        break;
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

/// Run one named suite (or "all") at the given size and base.
inline std::vector<CheckOutcome> run_verify_suite(
    const std::string& suite, int n, long b,
    int group_cap = kDefaultGroupAlgebraCap) {
  const auto append = [](std::vector<CheckOutcome>& into,
                         std::vector<CheckOutcome> part) {
    for (auto& c : part) into.push_back(std::move(c));
  };
  std::vector<CheckOutcome> out;
  if (suite == "eigen") return suite_eigen(n, b);
  if (suite == "duality") return suite_duality(n);
  if (suite == "branching") return suite_branching(n);
  if (suite == "determinant") return suite_determinant(n);
  if (suite == "regular") return suite_regular(n);
  if (suite == "chi-m") return suite_chi_m(n);
  if (suite == "gf") return suite_gf(n, b);
  if (suite == "covariance") return suite_covariance(n, b);
  if (suite == "idempotents") return suite_idempotents(n, group_cap);
  if (suite == "all") {
    append(out, suite_eigen(n, b));
    append(out, suite_duality(n));
    append(out, suite_branching(n));
    append(out, suite_determinant(n));
    append(out, suite_regular(n));
    append(out, suite_chi_m(n));
    append(out, suite_gf(n, b));
    append(out, suite_covariance(n, b));
    append(out, suite_idempotents(n, group_cap));
    return out;
  }
  throw std::invalid_argument("unknown verify suite: " + suite);
}

inline bool all_passed(const std::vector<CheckOutcome>& outcomes) {
  for (const auto& c : outcomes)
    if (!c.passed) return false;
  return true;
}

}  // namespace carries
