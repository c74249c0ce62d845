#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "carries/combinatorics.hpp"
#include "carries/matrix.hpp"
#include "carries/rational.hpp"

namespace carries {

/// Exact probability distribution on the carry states {0..n-1}.
class Distribution {
 public:
  explicit Distribution(std::vector<Rational> mass) : mass_(std::move(mass)) {
    Rational total(0);
    for (const auto& m : mass_) {
      if (m.sign() < 0)
        throw std::invalid_argument("Distribution: negative mass");
      total += m;
    }
    if (total != Rational(1))
      throw std::invalid_argument("Distribution: mass does not sum to 1");
  }

  static Distribution point_mass(int n, int at) {
    std::vector<Rational> m(n, Rational(0));
    m.at(at) = Rational(1);
    return Distribution(std::move(m));
  }

  int size() const { return static_cast<int>(mass_.size()); }
  const Rational& operator[](int i) const { return mass_[i]; }
  const std::vector<Rational>& mass() const { return mass_; }

  Rational mean() const {
    Rational m(0);
    for (int i = 0; i < size(); ++i) m += Rational(i) * mass_[i];
    return m;
  }

  Rational variance() const {
    Rational second(0);
    for (int i = 0; i < size(); ++i) second += Rational(i * i) * mass_[i];
    const Rational m = mean();
    return second - m * m;
  }

  friend bool operator==(const Distribution& a, const Distribution& b) {
    return a.mass_ == b.mass_;
  }

 private:
  std::vector<Rational> mass_;
};

/// Transition matrix of the carries chain for adding n numbers base b:
/// entry (i, j) is the chance the next carry is j given the last carry was i.
class CarriesMatrix {
 public:
  CarriesMatrix(int n, long b, Matrix<Rational> entries)
      : n_(n), b_(b), entries_(std::move(entries)) {}

  int n() const { return n_; }
  long base() const { return b_; }
  const Matrix<Rational>& entries() const { return entries_; }
  const Rational& operator()(int i, int j) const { return entries_(i, j); }

  /// The distribution of the next carry given the current one.
  Distribution row(int i) const {
    std::vector<Rational> mass(n_);
    for (int j = 0; j < n_; ++j) mass[j] = entries_(i, j);
    return Distribution(std::move(mass));
  }

 private:
  int n_;
  long b_;
  Matrix<Rational> entries_;
};

/// Holte's transition matrix:
///   M(i,j) = b^-n * sum_{l=0}^{j - floor(i/b)} (-1)^l C(n+1, l)
///            * C(n-1-i + (j+1-l)b, n).
/// An empty summation range gives M(i,j) = 0.
inline CarriesMatrix holte_matrix(int n, long b) {
  if (n < 1) throw std::invalid_argument("holte_matrix: n must be >= 1");
  if (b < 2) throw std::invalid_argument("holte_matrix: base must be >= 2");
  const Int bn = ipow(Int(b), static_cast<unsigned long>(n));
  Matrix<Rational> m(n, n);
  for (int i = 0; i < n; ++i) {
    const long lmax_offset = i / b;
    for (int j = 0; j < n; ++j) {
      Int sum = 0;
      for (long l = 0; l <= j - lmax_offset; ++l) {
        const Int term =
            binomial(Int(n + 1), l) * binomial(Int(n - 1 - i + (j + 1 - l) * b), n);
        if (l % 2 == 0)
          sum += term;
        else
          sum -= term;
      }
      m(i, j) = Rational(sum, bn);
    }
  }
  return CarriesMatrix(n, b, std::move(m));
}

inline CarriesMatrix matrix_power(const CarriesMatrix& m, unsigned long k) {
  return CarriesMatrix(m.n(), m.base(), m.entries().pow(k));
}

/// Stationary law of the carries chain: pi(i) = A(n,i)/n!, independent of b.
inline Distribution stationary(int n) {
  if (n < 1) throw std::invalid_argument("stationary: n must be >= 1");
  const Int nfact = factorial(static_cast<unsigned>(n));
  const auto row = eulerian_row(static_cast<unsigned>(n));
  std::vector<Rational> mass(n);
  for (int i = 0; i < n; ++i) mass[i] = Rational(row[i], nfact);
  return Distribution(std::move(mass));
}

/// Law of the r-th carry, started from the given carry state (the physical
/// start of column addition is state 0).
inline Distribution carry_distribution(int n, long b, unsigned long r,
                                       int start = 0) {
  if (start < 0 || start >= n)
    throw std::invalid_argument("carry_distribution: start out of range");
  return matrix_power(holte_matrix(n, b), r).row(start);
}

/// Total variation distance between the law of the k-th carry (started at 0)
/// and the stationary law: (1/2) sum_j |M^k(0,j) - A(n,j)/n!|.
inline Rational tv_distance(int n, long b, unsigned long k) {
  const Distribution at_k = carry_distribution(n, b, k);
  const Distribution pi = stationary(n);
  Rational tv(0);
  for (int j = 0; j < n; ++j) tv += (at_k[j] - pi[j]).abs();
  return tv / Rational(2);
}

}  // namespace carries
