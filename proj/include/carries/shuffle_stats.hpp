#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "carries/carries_matrix.hpp"
#include "carries/check.hpp"
#include "carries/combinatorics.hpp"
#include "carries/matrix.hpp"
#include "carries/permutation.hpp"
#include "carries/rational.hpp"
#include "carries/rng.hpp"

namespace carries {

// ---------------------------------------------------------------------------
// Closed-form carry statistics. Each function returns the formula value and
// recomputes the same quantity from the transition matrix itself, throwing
// std::logic_error on disagreement, so a returned value is always
// independently confirmed.
// ---------------------------------------------------------------------------

namespace detail {

inline void require_moment_args(int n, long b) {
  if (n < 2)
    throw std::invalid_argument("carry moments need n >= 2 summands");
  if (b < 2) throw std::invalid_argument("carry moments need base b >= 2");
}

/// sum_{i,j} i*j * source(i) * M^r(i,j) for a start law `source` on the
/// carry states.
inline Rational joint_product_moment(const std::vector<Rational>& source,
                                     const Matrix<Rational>& m_pow_r) {
  const int n = static_cast<int>(source.size());
  Rational total(0);
  for (int i = 1; i < n; ++i) {
    if (source[i].is_zero()) continue;
    Rational inner(0);
    for (int j = 1; j < n; ++j) inner += Rational(j) * m_pow_r(i, j);
    total += Rational(i) * source[i] * inner;
  }
  return total;
}

}  // namespace detail

/// Covariance of (kappa_0, kappa_r) for the chain started in equilibrium:
/// (1/b^r)(n+1)/12, cross-checked against the exact chain summation.
inline Rational exact_cov_stationary(int n, long b, unsigned long r) {
  detail::require_moment_args(n, b);
  if (r < 1) throw std::invalid_argument("exact_cov_stationary: r >= 1");
  const Rational formula =
      Rational(Int(n + 1), ipow(Int(b), r) * 12);

  const Distribution pi = stationary(n);
  const Matrix<Rational> m_r = holte_matrix(n, b).entries().pow(r);
  const Rational mean = pi.mean();  // equals (n-1)/2
  const Rational chain =
      detail::joint_product_moment(pi.mass(), m_r) - mean * mean;
  if (formula != chain)
    throw std::logic_error("stationary covariance formula disagrees with "
                           "chain summation at n = " + std::to_string(n) +
                           ", b = " + std::to_string(b) +
                           ", r = " + std::to_string(r));
  return formula;
}

/// (mean, variance) of kappa_r for the chain started at carry 0:
/// ((1 - b^{-r})(n-1)/2, (1 - b^{-2r})(n+1)/12), cross-checked against the
/// moments of the exact r-step distribution.
inline std::pair<Rational, Rational> exact_moments_from_zero(int n, long b,
                                                             unsigned long r) {
  detail::require_moment_args(n, b);
  const Rational b_pow_r{ipow(Int(b), r)};
  const Rational mean_formula =
      (Rational(1) - b_pow_r.inverse()) * Rational(Int(n - 1), Int(2));
  const Rational var_formula = (Rational(1) - (b_pow_r * b_pow_r).inverse()) *
                               Rational(Int(n + 1), Int(12));

  const Distribution law = carry_distribution(n, b, r);
  if (mean_formula != law.mean() || var_formula != law.variance())
    throw std::logic_error("moment formulas disagree with the exact r-step "
                           "law at n = " + std::to_string(n) +
                           ", b = " + std::to_string(b) +
                           ", r = " + std::to_string(r));
  return {mean_formula, var_formula};
}

/// Covariance of (kappa_s, kappa_{s+r}) for the chain started at carry 0:
/// (1/b^r)((n+1)/12)(1 - b^{-2s}), cross-checked against the exact joint law
/// assembled from M^s row 0 and M^r.
inline Rational exact_cov_from_zero(int n, long b, unsigned long s,
                                    unsigned long r) {
  detail::require_moment_args(n, b);
  if (r < 1) throw std::invalid_argument("exact_cov_from_zero: r >= 1");
  const Rational b_pow_s{ipow(Int(b), s)};
  const Rational formula = Rational(Int(n + 1), ipow(Int(b), r) * 12) *
                           (Rational(1) - (b_pow_s * b_pow_s).inverse());

  const Distribution at_s = carry_distribution(n, b, s);
  const Matrix<Rational> m_r = holte_matrix(n, b).entries().pow(r);
  const Rational chain = detail::joint_product_moment(at_s.mass(), m_r) -
                         at_s.mean() * carry_distribution(n, b, s + r).mean();
  if (formula != chain)
    throw std::logic_error("lagged covariance formula disagrees with chain "
                           "summation at n = " + std::to_string(n) +
                           ", b = " + std::to_string(b) +
                           ", s = " + std::to_string(s) +
                           ", r = " + std::to_string(r));
  return formula;
}

// ---------------------------------------------------------------------------
// Riffle-shuffle descent generating function.
// ---------------------------------------------------------------------------

/// The descent generating function sum_w P(w) t^{d(w)+1} of a b^r-shuffle of
/// n cards, stored as coefficients of t^0..t^{n+1} (both end coefficients are
/// provably zero and kept as computed sanity values).
struct DescentGF {
  int n = 0;
  long b = 0;
  unsigned long r = 0;
  std::vector<Rational> coeff;  // coeff[m] multiplies t^m, m = 0..n+1

  /// P(d(w) = j) for j = 0..n-1.
  const Rational& probability_of_descents(int j) const {
    return coeff[static_cast<size_t>(j) + 1];
  }
};

/// Expand (1-t)^{n+1} / a^n * sum_{k>=1} t^k C(ak+n-1, n) with a = b^r.
/// Only k <= n+1 can contribute to degrees <= n+1, so the infinite sum is cut
/// there and the product truncated at degree n+1; the t^0 and t^{n+1}
/// coefficients must come out zero and the rest must sum to 1, else the
/// computation itself is broken.
inline DescentGF descent_gf(int n, long b, unsigned long r) {
  if (n < 1) throw std::invalid_argument("descent_gf: n >= 1");
  if (b < 2) throw std::invalid_argument("descent_gf: b >= 2");
  const Int a = ipow(Int(b), r);
  const Int a_pow_n = ipow(a, static_cast<unsigned long>(n));

  DescentGF gf;
  gf.n = n;
  gf.b = b;
  gf.r = r;
  gf.coeff.assign(static_cast<size_t>(n) + 2, Rational(0));
  Rational total(0);
  for (int m = 0; m <= n + 1; ++m) {
    Int numer = 0;
    for (int k = 1; k <= m; ++k) {
      const Int term =
          binomial(Int(n + 1), m - k) * binomial(a * k + (n - 1), n);
      numer += ((m - k) % 2 == 0) ? term : -term;
    }
    gf.coeff[static_cast<size_t>(m)] = Rational(numer, a_pow_n);
    total += gf.coeff[static_cast<size_t>(m)];
  }

  if (!gf.coeff.front().is_zero() || !gf.coeff.back().is_zero())
    throw std::logic_error("descent GF truncation produced nonzero t^0 or "
                           "t^{n+1} coefficient");
  for (int m = 1; m <= n; ++m)
    if (gf.coeff[static_cast<size_t>(m)].sign() < 0)
      throw std::logic_error("descent GF produced a negative coefficient");
  if (total != Rational(1))
    throw std::logic_error("descent GF coefficients do not sum to 1");
  return gf;
}

/// The two pipelines — shuffle descent GF and carries-chain row 0 of M^r —
/// must agree coefficient by coefficient.
inline CheckResult gf_carry_equivalence(int n, long b, unsigned long r) {
  const DescentGF gf = descent_gf(n, b, r);
  const Distribution carries = carry_distribution(n, b, r);
  for (int j = 0; j < n; ++j)
    if (gf.probability_of_descents(j) != carries[j])
      return CheckResult::fail(
          "GF coefficient of t^" + std::to_string(j + 1) +
          " differs from P(kappa_" + std::to_string(r) + " = " +
          std::to_string(j) + ") at n = " + std::to_string(n) +
          ", b = " + std::to_string(b));
  return CheckResult::pass();
}

// ---------------------------------------------------------------------------
// Sampling: GSR shuffles and digit additions.
// ---------------------------------------------------------------------------

/// Arrangement obtained by stably sorting cards 1..n by the given labels:
/// cards are dealt into piles keyed by label and the piles stacked in label
/// order.  This is the *un-riffle* (inverse shuffle) step; exactly
/// C(a + n - 1 - d(v), n) of the a^n label vectors produce a given word v,
/// since a label vector is compatible with v iff its values are weakly
/// increasing along v with a strict increase at each descent of v.
inline Permutation deal_by_labels(const std::vector<std::uint64_t>& labels) {
  const int n = static_cast<int>(labels.size());
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  std::stable_sort(word.begin(), word.end(), [&](int u, int v) {
    return labels[static_cast<size_t>(u - 1)] <
           labels[static_cast<size_t>(v - 1)];
  });
  return Permutation(word);
}

/// Riffle-shuffle permutation determined by the given labels: the inverse of
/// the pile-dealing arrangement.  Under independent uniform labels this is
/// the GSR a-shuffle measure, which weights a permutation w by the number of
/// its rising sequences, P(w) = C(a + n - r(w), n) / a^n with
/// r(w) = d(w^{-1}) + 1; its descent count follows the carry distribution.
inline Permutation gsr_from_labels(const std::vector<std::uint64_t>& labels) {
  return deal_by_labels(labels).inverse();
}

/// One GSR a-shuffle: independent uniform labels in {0..a-1}, then invert the
/// stable sort by labels.  (An a-shuffle followed by an a'-shuffle is an
/// aa'-shuffle under this construction, which is what makes a = b^r the
/// r-fold b-shuffle.)
inline Permutation gsr_shuffle(int n, std::uint64_t a, Xoshiro256StarStar& rng) {
  if (n < 1) throw std::invalid_argument("gsr_shuffle: n >= 1");
  if (a < 1) throw std::invalid_argument("gsr_shuffle: a >= 1");
  std::vector<std::uint64_t> labels(static_cast<size_t>(n));
  for (auto& l : labels) l = rng.uniform_below(a);
  return gsr_from_labels(labels);
}

/// b^r as a 64-bit label bound, rejecting exponents that overflow.
inline std::uint64_t shuffle_label_bound(long b, unsigned long r) {
  std::uint64_t a = 1;
  for (unsigned long i = 0; i < r; ++i) {
    if (a > std::numeric_limits<std::uint64_t>::max() /
                static_cast<std::uint64_t>(b))
      throw std::invalid_argument(
          "b^r exceeds the 64-bit label range for shuffle sampling");
    a *= static_cast<std::uint64_t>(b);
  }
  return a;
}

/// Carry sequence kappa_0..kappa_L of the exact base-b column addition of
/// the given nonnegative summands, L = largest digit count among them.
/// (The final carry is the leading part of the sum.)
inline std::vector<int> carries_of_addition(const std::vector<Int>& summands,
                                            long b) {
  if (b < 2) throw std::invalid_argument("carries_of_addition: b >= 2");
  std::vector<Int> remaining = summands;
  for (const Int& v : remaining)
    if (v < 0)
      throw std::invalid_argument("carries_of_addition: summands >= 0");

  size_t columns = 1;
  for (const Int& v : summands) {
    size_t digits = 1;
    for (Int w = v / b; w > 0; w /= b) ++digits;
    columns = std::max(columns, digits);
  }

  std::vector<int> carries{0};
  Int carry = 0;
  for (size_t t = 0; t < columns; ++t) {
    Int total = carry;
    for (Int& v : remaining) {
      total += v % b;
      v /= b;
    }
    carry = total / b;
    carries.push_back(static_cast<int>(carry.get_si()));
  }
  return carries;
}

/// Carry sequence kappa_0..kappa_L when n uniformly random base-b digits are
/// added in each of L columns; distributed exactly as L steps of the chain
/// from state 0.
inline std::vector<int> simulate_carries(int n, long b, unsigned long columns,
                                         Xoshiro256StarStar& rng) {
  if (n < 1 || b < 2)
    throw std::invalid_argument("simulate_carries: n >= 1, b >= 2");
  std::vector<int> carries;
  carries.reserve(columns + 1);
  carries.push_back(0);
  long carry = 0;
  const auto base = static_cast<std::uint64_t>(b);
  for (unsigned long t = 0; t < columns; ++t) {
    std::uint64_t total = static_cast<std::uint64_t>(carry);
    for (int i = 0; i < n; ++i) total += rng.uniform_below(base);
    carry = static_cast<long>(total / base);
    carries.push_back(static_cast<int>(carry));
  }
  return carries;
}

// ---------------------------------------------------------------------------
// Monte Carlo comparison harness. Floats appear here, and only here, for
// estimates/errors/z-scores; every exact reference value stays rational.
// ---------------------------------------------------------------------------

struct SimulationConfig {
  int n = 3;
  long b = 10;
  unsigned long r = 1;     // observation lag; carries runs use L = 2r columns
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  void validate() const {
    if (n < 2 || b < 2 || r < 1 || samples < 1)
      throw std::invalid_argument(
          "simulation config requires n >= 2, b >= 2, r >= 1, samples >= 1");
  }
};

struct MomentReport {
  std::string statistic;
  double estimate = 0.0;
  Rational exact;
  double std_error = 0.0;
  double z_score = 0.0;
};

inline double z_from(double estimate, double exact, double std_error) {
  const double diff = estimate - exact;
  if (std_error > 0.0) return diff / std_error;
  return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

/// Simulate `samples` independent additions of 2r columns (replication i
/// drawing from stream(seed, i)), observe (kappa_r, kappa_2r), and compare
/// the sample mean, variance, and lag-r covariance against the closed forms.
inline std::vector<MomentReport> moment_comparison(const SimulationConfig& cfg) {
  cfg.validate();
  const unsigned long r = cfg.r;

  // Raw power sums; carries are < n <= 2^31 so 10^6-sample sums of fourth
  // powers stay far below the 64-bit range.
  std::uint64_t sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  std::uint64_t sx3 = 0, sx4 = 0, sxxy = 0, sxyy = 0, sxxyy = 0;
  for (std::uint64_t i = 0; i < cfg.samples; ++i) {
    auto rng = Xoshiro256StarStar::stream(cfg.seed, i);
    const std::vector<int> path = simulate_carries(cfg.n, cfg.b, 2 * r, rng);
    const std::uint64_t x = static_cast<std::uint64_t>(path[r]);
    const std::uint64_t y = static_cast<std::uint64_t>(path[2 * r]);
    sx += x;
    sy += y;
    sxx += x * x;
    syy += y * y;
    sxy += x * y;
    sx3 += x * x * x;
    sx4 += x * x * x * x;
    sxxy += x * x * y;
    sxyy += x * y * y;
    sxxyy += x * x * y * y;
  }

  const double invn = 1.0 / static_cast<double>(cfg.samples);
  const double ex = static_cast<double>(sx) * invn;
  const double ey = static_cast<double>(sy) * invn;
  const double exx = static_cast<double>(sxx) * invn;
  const double eyy = static_cast<double>(syy) * invn;
  const double exy = static_cast<double>(sxy) * invn;
  const double ex3 = static_cast<double>(sx3) * invn;
  const double ex4 = static_cast<double>(sx4) * invn;
  const double exxy = static_cast<double>(sxxy) * invn;
  const double exyy = static_cast<double>(sxyy) * invn;
  const double exxyy = static_cast<double>(sxxyy) * invn;

  // Central moments of the sample.
  const double m2 = exx - ex * ex;
  const double m4 =
      ex4 - 4 * ex * ex3 + 6 * ex * ex * exx - 3 * ex * ex * ex * ex;
  const double m11 = exy - ex * ey;
  const double m22 = exxyy - 2 * ey * exxy - 2 * ex * exyy + ey * ey * exx +
                     ex * ex * eyy + 4 * ex * ey * exy -
                     3 * ex * ex * ey * ey;

  const auto [mean_exact, var_exact] =
      exact_moments_from_zero(cfg.n, cfg.b, r);
  const Rational cov_exact = exact_cov_from_zero(cfg.n, cfg.b, r, r);

  std::vector<MomentReport> reports;
  {
    MomentReport rep;
    rep.statistic = "mean[kappa_r]";
    rep.estimate = ex;
    rep.exact = mean_exact;
    rep.std_error = std::sqrt(m2 * invn);
    rep.z_score = z_from(rep.estimate, rep.exact.approx(), rep.std_error);
    reports.push_back(rep);
  }
  {
    MomentReport rep;
    rep.statistic = "var[kappa_r]";
    rep.estimate = m2;
    rep.exact = var_exact;
    rep.std_error = std::sqrt(std::max(m4 - m2 * m2, 0.0) * invn);
    rep.z_score = z_from(rep.estimate, rep.exact.approx(), rep.std_error);
    reports.push_back(rep);
  }
  {
    MomentReport rep;
    rep.statistic = "cov[kappa_r,kappa_2r]";
    rep.estimate = m11;
    rep.exact = cov_exact;
    rep.std_error = std::sqrt(std::max(m22 - m11 * m11, 0.0) * invn);
    rep.z_score = z_from(rep.estimate, rep.exact.approx(), rep.std_error);
    reports.push_back(rep);
  }
  return reports;
}

inline double max_abs_z(const std::vector<MomentReport>& reports) {
  double worst = 0.0;
  for (const auto& r : reports) worst = std::max(worst, std::fabs(r.z_score));
  return worst;
}

/// One cell of an empirical-vs-exact frequency comparison.
struct FrequencyCell {
  std::string label;
  std::uint64_t count = 0;
  std::uint64_t trials = 0;
  Rational exact;
  double estimate = 0.0;
  double std_error = 0.0;
  double z_score = 0.0;
};

inline FrequencyCell make_frequency_cell(std::string label,
                                         std::uint64_t count,
                                         std::uint64_t trials,
                                         Rational exact_prob) {
  FrequencyCell cell;
  cell.label = std::move(label);
  cell.count = count;
  cell.trials = trials;
  cell.exact = std::move(exact_prob);
  if (trials == 0) return cell;  // no observations: nothing to score
  const double p = cell.exact.approx();
  cell.estimate = static_cast<double>(count) / static_cast<double>(trials);
  cell.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  cell.z_score = z_from(cell.estimate, p, cell.std_error);
  return cell;
}

inline double max_abs_z(const std::vector<FrequencyCell>& cells) {
  double worst = 0.0;
  for (const auto& c : cells) worst = std::max(worst, std::fabs(c.z_score));
  return worst;
}

/// Run one carries trajectory of `columns` steps and compare each observed
/// transition frequency, conditioned on the visits to its source state,
/// against the exact matrix entry.
inline std::vector<FrequencyCell> transition_frequency_report(
    int n, long b, std::uint64_t columns, std::uint64_t seed) {
  if (n < 1 || b < 2 || columns < 1)
    throw std::invalid_argument(
        "transition frequencies need n >= 1, b >= 2, columns >= 1");
  auto rng = Xoshiro256StarStar::stream(seed, 0);
  const std::vector<int> path =
      simulate_carries(n, b, static_cast<unsigned long>(columns), rng);

  std::vector<std::uint64_t> counts(static_cast<size_t>(n) * n, 0);
  std::vector<std::uint64_t> visits(static_cast<size_t>(n), 0);
  for (size_t t = 1; t < path.size(); ++t) {
    const auto i = static_cast<size_t>(path[t - 1]);
    const auto j = static_cast<size_t>(path[t]);
    ++counts[i * static_cast<size_t>(n) + j];
    ++visits[i];
  }

  const CarriesMatrix m = holte_matrix(n, b);
  std::vector<FrequencyCell> cells;
  cells.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      cells.push_back(make_frequency_cell(
          "M(" + std::to_string(i) + "," + std::to_string(j) + ")",
          counts[static_cast<size_t>(i) * n + j], visits[static_cast<size_t>(i)],
          m(i, j)));
  return cells;
}

/// Sample `samples` independent b^r-shuffles (replication i drawing from
/// stream(seed, i)) and compare the descent-count histogram against the
/// exact generating-function coefficients.
inline std::vector<FrequencyCell> descent_histogram_report(
    int n, long b, unsigned long r, std::uint64_t samples, std::uint64_t seed) {
  if (n < 1 || samples < 1)
    throw std::invalid_argument(
        "descent histogram needs n >= 1 and samples >= 1");
  const std::uint64_t a = shuffle_label_bound(b, r);
  std::vector<std::uint64_t> counts(static_cast<size_t>(n), 0);
  for (std::uint64_t i = 0; i < samples; ++i) {
    auto rng = Xoshiro256StarStar::stream(seed, i);
    ++counts[static_cast<size_t>(gsr_shuffle(n, a, rng).descent_count())];
  }

  const DescentGF gf = descent_gf(n, b, r);
  std::vector<FrequencyCell> cells;
  cells.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j)
    cells.push_back(make_frequency_cell("P(descents = " + std::to_string(j) +
                                            ")",
                                        counts[static_cast<size_t>(j)], samples,
                                        gf.probability_of_descents(j)));
  return cells;
}

}  // namespace carries
