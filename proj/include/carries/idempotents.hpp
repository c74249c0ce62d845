#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "carries/check.hpp"
#include "carries/combinatorics.hpp"
#include "carries/matrix.hpp"
#include "carries/permutation.hpp"
#include "carries/polynomial.hpp"
#include "carries/rational.hpp"

namespace carries {

/// Largest n for which group-algebra elements over S_n may be materialized by
/// default; n = 7 already means 5040-term supports and ~25M products per
/// convolution pair.
inline constexpr int kDefaultGroupAlgebraCap = 7;

/// Value of the j-th right eigenvector of the carries chain at state i, by
/// Holte's Stirling-number sum:
///   u^n_j(i) = sum_{k=n-j}^{n} s(n,k) C(k, n-j) (n-1-i)^{k-(n-j)},
/// with 0^0 = 1. The eigenvalue of u^n_j is 1/b^j for every base b.
inline Rational right_eig_holte(int n, int j, int i) {
  const auto stirling = stirling_first_row(static_cast<unsigned>(n));
  Int sum = 0;
  for (int k = n - j; k <= n; ++k) {
    sum += stirling[k] * binomial(Int(k), n - j) *
           ipow(Int(n - 1 - i), static_cast<unsigned long>(k - (n - j)));
  }
  return Rational(sum);
}

/// The same value by the Stirling-sum form of the simpler formula:
///   u^n_j(i) = n! sum_k s(k, n-j)/k! * C(n-i-1, n-k).
inline Rational right_eig_simple_stirling(int n, int j, int i) {
  Rational sum(0);
  for (int k = 0; k <= n; ++k) {
    const Int s = stirling_first(static_cast<unsigned>(k), n - j);
    if (s == 0) continue;
    sum += Rational(s * binomial(Int(n - i - 1), n - k),
                    factorial(static_cast<unsigned>(k)));
  }
  return sum * Rational(factorial(static_cast<unsigned>(n)));
}

/// The same value by coefficient extraction:
///   u^n_j(i) = n! * [x^{n-j}] C(x + n - i - 1, n).
inline Rational right_eig_simple(int n, int j, int i) {
  const Polynomial p = falling_binomial_poly(n - i - 1, static_cast<unsigned>(n));
  return p.coeff(static_cast<size_t>(n - j)) *
         Rational(factorial(static_cast<unsigned>(n)));
}

/// Matrix U whose column j is the right eigenvector u^n_j (value at state i
/// in row i); column 0 is identically 1.
inline Matrix<Rational> right_eigen_matrix(int n) {
  Matrix<Rational> u(n, n);
  for (int i = 0; i < n; ++i) {
    const Polynomial p =
        falling_binomial_poly(n - i - 1, static_cast<unsigned>(n));
    const Rational nfact{factorial(static_cast<unsigned>(n))};
    for (int j = 0; j < n; ++j)
      u(i, j) = p.coeff(static_cast<size_t>(n - j)) * nfact;
  }
  return u;
}

/// Values E(n,k,d) of the descent-algebra idempotents E_{n,k} on the descent
/// classes: sum_k E(n,k,d) x^k = C(x + n - d - 1, n) as polynomials in x.
class IdempotentValueTable {
 public:
  explicit IdempotentValueTable(int n, std::vector<std::vector<Rational>> v)
      : n_(n), values_(std::move(v)) {}

  int n() const { return n_; }

  /// E(n,k,d) for 1 <= k <= n, 0 <= d <= n-1.
  const Rational& value(int k, int d) const {
    if (k < 1 || k > n_ || d < 0 || d >= n_)
      throw std::out_of_range("IdempotentValueTable: (k, d) out of range");
    return values_[d][k - 1];
  }

 private:
  int n_;
  std::vector<std::vector<Rational>> values_;  // values_[d][k-1]
};

inline IdempotentValueTable idempotent_values(int n) {
  if (n < 1) throw std::invalid_argument("idempotent_values: n >= 1");
  std::vector<std::vector<Rational>> v(n, std::vector<Rational>(n));
  for (int d = 0; d < n; ++d) {
    const Polynomial p =
        falling_binomial_poly(n - d - 1, static_cast<unsigned>(n));
    for (int k = 1; k <= n; ++k) v[d][k - 1] = p.coeff(static_cast<size_t>(k));
  }
  return IdempotentValueTable(n, std::move(v));
}

/// Finitely-supported element of the group algebra Q[S_n], stored densely
/// over the lexicographic permutation ranking.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int n)
      : n_(n), coeff_(factorial_u64(n), Rational(0)) {}

  static GroupAlgebraElement unit(int n) {
    GroupAlgebraElement e(n);
    e.coeff_[perm_rank(Permutation::identity(n))] = Rational(1);
    return e;
  }

  int n() const { return n_; }
  std::uint64_t support_dimension() const { return coeff_.size(); }

  const Rational& at_rank(std::uint64_t r) const { return coeff_[r]; }
  Rational& at_rank(std::uint64_t r) { return coeff_[r]; }
  const Rational& at(const Permutation& p) const { return coeff_[perm_rank(p)]; }

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o) {
    require_same_n(o);
    for (size_t r = 0; r < coeff_.size(); ++r) coeff_[r] += o.coeff_[r];
    return *this;
  }
  friend GroupAlgebraElement operator+(GroupAlgebraElement a,
                                       const GroupAlgebraElement& b) {
    return a += b;
  }

  GroupAlgebraElement& operator*=(const Rational& s) {
    for (auto& c : coeff_) c *= s;
    return *this;
  }

  /// Image under the sign map w -> sgn(w) w, an algebra automorphism.
  GroupAlgebraElement sign_twisted() const {
    GroupAlgebraElement out(n_);
    std::uint64_t r = 0;
    for_each_permutation(
        n_,
        [&](const Permutation& p) {
          // sgn = (-1)^{n - #cycles}
          const bool odd = (n_ - p.cycle_count()) % 2 != 0;
          out.coeff_[r] = odd ? -coeff_[r] : coeff_[r];
          ++r;
        },
        n_);
    return out;
  }

  friend bool operator==(const GroupAlgebraElement& a,
                         const GroupAlgebraElement& b) {
    return a.n_ == b.n_ && a.coeff_ == b.coeff_;
  }

  void require_same_n(const GroupAlgebraElement& o) const {
    if (n_ != o.n_)
      throw std::invalid_argument("group algebra: mismatched S_n");
  }

 private:
  int n_;
  std::vector<Rational> coeff_;
};

inline void check_group_algebra_cap(int n, int cap) {
  if (n < 1) throw std::invalid_argument("group algebra: n must be positive");
  if (n > cap)
    throw std::invalid_argument(
        "group algebra: n = " + std::to_string(n) +
        " exceeds the group-algebra cap of " + std::to_string(cap) +
        " (raise the cap explicitly to proceed)");
}

/// The idempotent E_{n,k} as a group-algebra element: coefficient
/// E(n,k,d(w)) on every permutation w.
inline GroupAlgebraElement idempotent_element(int n, int k,
                                              int cap = kDefaultGroupAlgebraCap) {
  check_group_algebra_cap(n, cap);
  if (k < 1 || k > n)
    throw std::invalid_argument("idempotent_element: k out of range");
  const IdempotentValueTable table = idempotent_values(n);
  GroupAlgebraElement e(n);
  std::uint64_t r = 0;
  for_each_permutation(
      n,
      [&](const Permutation& p) {
        e.at_rank(r) = table.value(k, p.descent_count());
        ++r;
      },
      n);
  return e;
}

/// Convolution product (a*b)(w) = sum_{uv=w} a(u) b(v), with composition
/// acting left to right: (uv)(x) = v(u(x)).
inline GroupAlgebraElement convolve(const GroupAlgebraElement& a,
                                    const GroupAlgebraElement& b) {
  a.require_same_n(b);
  const int n = a.n();
  const std::uint64_t size = a.support_dimension();
  // Unranked tables and a reused scratch word keep the n!^2 inner loop free
  // of repeated decoding and allocation.
  std::vector<Permutation> perms;
  perms.reserve(size);
  for (std::uint64_t r = 0; r < size; ++r) perms.push_back(perm_unrank(n, r));
  GroupAlgebraElement out(n);
  std::vector<int> word(static_cast<size_t>(n));
  for (std::uint64_t ru = 0; ru < size; ++ru) {
    const Rational& au = a.at_rank(ru);
    if (au.is_zero()) continue;
    const std::vector<int>& u = perms[ru].one_line();
    for (std::uint64_t rv = 0; rv < size; ++rv) {
      const Rational& bv = b.at_rank(rv);
      if (bv.is_zero()) continue;
      const std::vector<int>& v = perms[rv].one_line();
      for (int x = 0; x < n; ++x) word[x] = v[u[x] - 1];
      out.at_rank(word_rank(word)) += au * bv;
    }
  }
  return out;
}

/// Sum over k of E_{n,k}; equals the unit element of the group algebra.
inline GroupAlgebraElement idempotent_sum(int n,
                                          int cap = kDefaultGroupAlgebraCap) {
  GroupAlgebraElement total(n);
  for (int k = 1; k <= n; ++k) total += idempotent_element(n, k, cap);
  return total;
}

}  // namespace carries
