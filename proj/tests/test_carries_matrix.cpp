#include <catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

#include "carries/carries_matrix.hpp"
#include "carries/combinatorics.hpp"
#include "carries/matrix.hpp"

using carries::CarriesMatrix;
using carries::Distribution;
using carries::Int;
using carries::Matrix;
using carries::Rational;

namespace {

/// Independent oracle: enumerate all b^n digit columns and count where the
/// carry lands from each starting carry.
Matrix<Rational> enumerated_transitions(int n, long b) {
  std::vector<long> digits(static_cast<size_t>(n), 0);
  std::vector<std::vector<Int>> counts(
      static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), 0));
  for (;;) {
    long sum = 0;
    for (long d : digits) sum += d;
    for (int carry_in = 0; carry_in < n; ++carry_in)
      counts[static_cast<size_t>(carry_in)]
            [static_cast<size_t>((carry_in + sum) / b)] += 1;
    // odometer step
    int pos = 0;
    while (pos < n && ++digits[static_cast<size_t>(pos)] == b)
      digits[static_cast<size_t>(pos++)] = 0;
    if (pos == n) break;
  }
  const Int total = carries::ipow(Int(b), static_cast<unsigned long>(n));
  Matrix<Rational> m(static_cast<size_t>(n), static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(static_cast<size_t>(i), static_cast<size_t>(j)) =
          Rational(counts[static_cast<size_t>(i)][static_cast<size_t>(j)],
                   total);
  return m;
}

std::vector<Rational> row_times_matrix(const std::vector<Rational>& v,
                                       const Matrix<Rational>& m) {
  std::vector<Rational> out(m.cols(), Rational(0));
  for (size_t j = 0; j < m.cols(); ++j)
    for (size_t i = 0; i < m.rows(); ++i) out[j] += v[i] * m(i, j);
  return out;
}

}  // namespace

TEST_CASE("two summands in base two") {
  const CarriesMatrix m = carries::holte_matrix(2, 2);
  CHECK(m(0, 0) == Rational(3, 4));
  CHECK(m(0, 1) == Rational(1, 4));
  CHECK(m(1, 0) == Rational(1, 4));
  CHECK(m(1, 1) == Rational(3, 4));
}

TEST_CASE("three summands match the closed symbolic matrix in every base") {
  for (long b = 2; b <= 12; ++b) {
    const CarriesMatrix m = carries::holte_matrix(3, b);
    const Rational denom{Int(6 * b * b)};
    const Int b2 = Int(b) * b;
    const Int expected[3][3] = {
        {b2 + 3 * b + 2, 4 * b2 - 4, b2 - 3 * b + 2},
        {b2 - 1, 4 * b2 + 2, b2 - 1},
        {b2 - 3 * b + 2, 4 * b2 - 4, b2 + 3 * b + 2}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(m(i, j) == Rational(expected[i][j]) / denom);
  }
}

TEST_CASE("digit enumeration reproduces the transition matrix") {
  SECTION("two summands, all bases up to 16") {
    for (long b = 2; b <= 16; ++b)
      CHECK(carries::holte_matrix(2, b).entries() ==
            enumerated_transitions(2, b));
  }
  SECTION("more summands, including bases smaller than n") {
    for (long b : {2L, 3L, 4L, 5L, 10L})
      CHECK(carries::holte_matrix(3, b).entries() ==
            enumerated_transitions(3, b));
    for (long b : {2L, 3L})
      CHECK(carries::holte_matrix(4, b).entries() ==
            enumerated_transitions(4, b));
    CHECK(carries::holte_matrix(5, 2).entries() ==
          enumerated_transitions(5, 2));
    CHECK(carries::holte_matrix(6, 2).entries() ==
          enumerated_transitions(6, 2));
  }
}

TEST_CASE("structural invariants of the transition matrix") {
  for (int n : {1, 2, 3, 5, 8})
    for (long b : {2L, 3L, 10L}) {
      const CarriesMatrix m = carries::holte_matrix(n, b);
      for (int i = 0; i < n; ++i) {
        Rational row_sum(0);
        for (int j = 0; j < n; ++j) {
          CHECK(m(i, j) >= Rational(0));
          // point-symmetry of the matrix
          CHECK(m(i, j) == m(n - 1 - i, n - 1 - j));
          row_sum += m(i, j);
        }
        CHECK(row_sum == Rational(1));
      }
    }
  CHECK_THROWS_AS(carries::holte_matrix(0, 10), std::invalid_argument);
  CHECK_THROWS_AS(carries::holte_matrix(3, 1), std::invalid_argument);
}

TEST_CASE("distribution type") {
  const Distribution point = Distribution::point_mass(4, 2);
  CHECK(point[2] == Rational(1));
  CHECK(point.mean() == Rational(2));
  CHECK(point.variance() == Rational(0));
  CHECK_THROWS_AS(Distribution({Rational(1, 2), Rational(1, 3)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Distribution({Rational(3, 2), Rational(-1, 2)}),
                  std::invalid_argument);
}

TEST_CASE("stationary law: Eulerian mass, fixed point, exact moments") {
  for (int n = 1; n <= 8; ++n) {
    const Distribution pi = carries::stationary(n);
    const Int nfact = carries::factorial(static_cast<unsigned>(n));
    for (int i = 0; i < n; ++i)
      CHECK(pi[i] ==
            Rational(carries::eulerian(static_cast<unsigned>(n), i), nfact));
    CHECK(pi.mean() == Rational(Int(n - 1), Int(2)));
    // Variance of the descent law is (n+1)/12 once two or more summands
    // exist; a single summand never carries.
    if (n >= 2)
      CHECK(pi.variance() == Rational(Int(n + 1), Int(12)));
    else
      CHECK(pi.variance() == Rational(0));
  }

  SECTION("pi M = pi exactly") {
    for (int n = 1; n <= 7; ++n)
      for (long b : {2L, 10L}) {
        const Distribution pi = carries::stationary(n);
        CHECK(row_times_matrix(pi.mass(),
                               carries::holte_matrix(n, b).entries()) ==
              pi.mass());
      }
  }
}

TEST_CASE("carry distribution after r steps") {
  CHECK(carries::carry_distribution(4, 10, 0) ==
        Distribution::point_mass(4, 0));
  CHECK(carries::carry_distribution(4, 10, 0, 3) ==
        Distribution::point_mass(4, 3));

  SECTION("row of the exact matrix power, from each start") {
    for (int n : {2, 3, 5})
      for (long b : {2L, 10L})
        for (unsigned long r : {1UL, 2UL, 7UL}) {
          const Matrix<Rational> p =
              carries::holte_matrix(n, b).entries().pow(r);
          for (int start = 0; start < n; ++start) {
            const Distribution d = carries::carry_distribution(n, b, r, start);
            for (int j = 0; j < n; ++j) CHECK(d[j] == p(start, j));
          }
        }
  }

  SECTION("matrix_power wrapper agrees with entry power") {
    const CarriesMatrix m = carries::holte_matrix(3, 10);
    CHECK(carries::matrix_power(m, 4).entries() == m.entries().pow(4));
  }
}

TEST_CASE("total variation distance to stationarity") {
  // k = 0: distance between the point mass at 0 and pi is 1 - pi(0) = 1 - 1/n!.
  for (int n = 1; n <= 6; ++n)
    CHECK(carries::tv_distance(n, 2, 0) ==
          Rational(1) - Rational(Int(1),
                                 carries::factorial(static_cast<unsigned>(n))));

  SECTION("direct definition at one step") {
    const CarriesMatrix m = carries::holte_matrix(5, 5);
    const Distribution pi = carries::stationary(5);
    Rational half_l1(0);
    for (int j = 0; j < 5; ++j) half_l1 += (m(0, j) - pi[j]).abs();
    half_l1 = half_l1 / Rational(2);
    CHECK(carries::tv_distance(5, 5, 1) == half_l1);
  }

  SECTION("nonincreasing in k and eventually tiny") {
    Rational prev = carries::tv_distance(4, 2, 0);
    for (unsigned long k = 1; k <= 8; ++k) {
      const Rational cur = carries::tv_distance(4, 2, k);
      CHECK(cur <= prev);
      prev = cur;
    }
    CHECK(carries::tv_distance(3, 10, 8) < Rational(1, Int("10000000")));
  }
}
