#pragma once

#include <string>

#include "carries/carries_matrix.hpp"
#include "carries/check.hpp"
#include "carries/combinatorics.hpp"
#include "carries/foulkes.hpp"
#include "carries/idempotents.hpp"
#include "carries/matrix.hpp"
#include "carries/rational.hpp"

namespace carries {

inline Matrix<Rational> to_rational(const Matrix<Int>& m) {
  Matrix<Rational> out(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

/// diag(1, 1/b, ..., 1/b^{n-1}): the spectrum of the carries chain on n
/// summands in base b, raised to the k-th power.
inline Matrix<Rational> eigenvalue_matrix(int n, long b, unsigned long k = 1) {
  Matrix<Rational> d(n, n);
  const Rational inv_b = Rational(Int(1), Int(b));
  for (int a = 0; a < n; ++a)
    d(a, a) = inv_b.pow(static_cast<unsigned long>(a) * k);
  return d;
}

/// Entry (i, j) of the k-step transition matrix assembled from the
/// eigendecomposition alone:
///   M^k(i, j) = (1/n!) sum_{a=0}^{n-1} b^{-ak} u_a(i) v_a(j),
/// where v_a is the a-th row of the character table ordered as left
/// eigenvectors and u_a the matching right eigenvector.
inline Rational spectral_entry(int n, long b, unsigned long k, int i, int j) {
  const Matrix<Int> v = left_eigen_matrix(n);
  const Matrix<Rational> u = right_eigen_matrix(n);
  const Rational inv_b(Int(1), Int(b));
  Rational sum(0);
  for (int a = 0; a < n; ++a)
    sum += inv_b.pow(static_cast<unsigned long>(a) * k) * u(i, a) *
           Rational(v(a, j));
  return sum / Rational(factorial(static_cast<unsigned>(n)));
}

/// All of M^k at once through the eigendecomposition: U D^k V / n!.
inline Matrix<Rational> spectral_matrix(int n, long b, unsigned long k) {
  Matrix<Rational> prod = right_eigen_matrix(n) * eigenvalue_matrix(n, b, k) *
                          to_rational(left_eigen_matrix(n));
  const Rational inv_nfact =
      Rational(factorial(static_cast<unsigned>(n))).inverse();
  for (size_t i = 0; i < prod.rows(); ++i)
    for (size_t j = 0; j < prod.cols(); ++j) prod(i, j) *= inv_nfact;
  return prod;
}

/// V M = D V: every row of the character table is a left eigenvector of the
/// carries matrix, with eigenvalue 1/b^a independent of b.
inline CheckResult left_eigen_check(int n, long b) {
  const Matrix<Rational> v = to_rational(left_eigen_matrix(n));
  const Matrix<Rational> m = holte_matrix(n, b).entries();
  if (v * m == eigenvalue_matrix(n, b) * v) return CheckResult::pass();
  return CheckResult::fail("left eigenvector identity V M = D V fails at n = " +
                           std::to_string(n) + ", b = " + std::to_string(b));
}

/// M U = U D: the columns built from the point evaluations of the
/// idempotents are right eigenvectors with the same eigenvalues.
inline CheckResult right_eigen_check(int n, long b) {
  const Matrix<Rational> u = right_eigen_matrix(n);
  const Matrix<Rational> m = holte_matrix(n, b).entries();
  if (m * u == u * eigenvalue_matrix(n, b)) return CheckResult::pass();
  return CheckResult::fail(
      "right eigenvector identity M U = U D fails at n = " +
      std::to_string(n) + ", b = " + std::to_string(b));
}

/// V U = n! I: the two eigenvector families are dual up to the global n!.
inline CheckResult duality_check(int n) {
  const Matrix<Rational> product =
      to_rational(left_eigen_matrix(n)) * right_eigen_matrix(n);
  const Rational nfact{factorial(static_cast<unsigned>(n))};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational expected = (i == j) ? nfact : Rational(0);
      if (product(i, j) != expected)
        return CheckResult::fail("V U != n! I at entry (" + std::to_string(i) +
                                 ", " + std::to_string(j) + ") for n = " +
                                 std::to_string(n));
    }
  return CheckResult::pass();
}

/// Spectral reconstruction agrees entrywise with the directly exponentiated
/// transition matrix.
inline CheckResult spectral_check(int n, long b, unsigned long k) {
  const Matrix<Rational> direct = holte_matrix(n, b).entries().pow(k);
  if (spectral_matrix(n, b, k) == direct) return CheckResult::pass();
  return CheckResult::fail("spectral expansion disagrees with M^" +
                           std::to_string(k) + " at n = " + std::to_string(n) +
                           ", b = " + std::to_string(b));
}

}  // namespace carries
