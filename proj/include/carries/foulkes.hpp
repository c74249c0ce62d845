#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "carries/check.hpp"
#include "carries/combinatorics.hpp"
#include "carries/matrix.hpp"
#include "carries/permutation.hpp"
#include "carries/rational.hpp"

namespace carries {

/// Integer table of Foulkes character values chi_j^{n,k}, indexed by
/// k = 0..n-1 (number of descents of the defining descent class) and
/// j = 1..n (number of cycles of the argument). The dimension column is
/// chi_n^{n,k} = A(n,k); row k = n-1 is the trivial character and row k = 0
/// the alternating character.
class FoulkesTable {
 public:
  explicit FoulkesTable(int n, std::vector<std::vector<Int>> values)
      : n_(n), values_(std::move(values)) {}

  int n() const { return n_; }

  /// chi_j^{n,k}; requires 0 <= k <= n-1 and 1 <= j <= n.
  const Int& value(int k, int j) const {
    if (k < 0 || k >= n_ || j < 1 || j > n_)
      throw std::out_of_range("FoulkesTable: (k, j) out of range");
    return values_[k][j - 1];
  }

  /// chi_j^{n,k} extended by 0 outside the valid index rectangle, the
  /// convention under which the recurrences below are total.
  Int value_or_zero(int k, int j) const {
    if (k < 0 || k >= n_ || j < 1 || j > n_) return 0;
    return values_[k][j - 1];
  }

 private:
  int n_;
  std::vector<std::vector<Int>> values_;  // values_[k][j-1]
};

/// Builds the table for sizes 1..n by the recurrence
/// chi_j^{n,k} = chi_j^{n-1,k-1} - chi_j^{n-1,k} (j < n, k > 0), seeded with
/// chi_1^{1,0} = 1; column j = n is A(n,k) and row k = 0 is (-1)^{n-j}.
inline FoulkesTable foulkes_table_recursive(int n) {
  if (n < 1) throw std::invalid_argument("foulkes_table_recursive: n >= 1");
  std::vector<std::vector<Int>> prev{{Int(1)}};  // table for n = 1
  for (int m = 2; m <= n; ++m) {
    const auto dim = eulerian_row(static_cast<unsigned>(m));
    std::vector<std::vector<Int>> cur(m, std::vector<Int>(m));
    for (int k = 0; k < m; ++k) {
      for (int j = 1; j <= m; ++j) {
        if (j == m) {
          cur[k][j - 1] = dim[k];
        } else if (k == 0) {
          cur[k][j - 1] = (m - j) % 2 == 0 ? 1 : -1;
        } else {
          const Int lhs = (k - 1 < m - 1) ? prev[k - 1][j - 1] : Int(0);
          const Int rhs = (k < m - 1) ? prev[k][j - 1] : Int(0);
          cur[k][j - 1] = lhs - rhs;
        }
      }
    }
    prev = std::move(cur);
  }
  return FoulkesTable(n, std::move(prev));
}

/// Closed form chi_j^{n,k} = sum_{r=0}^{n-k} (-1)^r C(n+1, r) (n-k-r)^j.
inline Int foulkes_closed(int n, int k, int j) {
  Int sum = 0;
  for (int r = 0; r <= n - k; ++r) {
    const Int term = binomial(Int(n + 1), r) *
                     ipow(Int(n - k - r), static_cast<unsigned long>(j));
    if (r % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

/// Foulkes' own formula,
/// chi_j^{n,k} = sum_{r=0}^{n-j} (-1)^r C(n-j, r) A(j, k+j+r-n).
inline Int foulkes_alt_closed(int n, int k, int j) {
  Int sum = 0;
  for (int r = 0; r <= n - j; ++r) {
    const Int term = binomial(Int(n - j), r) *
                     eulerian(static_cast<unsigned>(j), k + j + r - n);
    if (r % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

/// Matrix V whose row i is the left eigenvector of the carries matrix with
/// eigenvalue 1/b^i (the same integer matrix for every base b):
/// V(i,j) = chi^{n,n-j-1}_{n-i}.
inline Matrix<Int> left_eigen_matrix(int n) {
  const FoulkesTable table = foulkes_table_recursive(n);
  Matrix<Int> v(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v(i, j) = table.value(n - j - 1, n - i);
  return v;
}

/// Holte's closed formula for the same left eigenvectors:
/// v^n_{i,j} = sum_{r=0}^{j+1} (-1)^r C(n+1, r) (j+1-r)^{n-i}.
inline Int left_eigen_closed(int n, int i, int j) {
  Int sum = 0;
  for (int r = 0; r <= j + 1; ++r) {
    const Int term = binomial(Int(n + 1), r) *
                     ipow(Int(j + 1 - r), static_cast<unsigned long>(n - i));
    if (r % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

/// Restriction rule chi_j^{n,k} = (k+1) chi_{j-1}^{n-1,k} +
/// (n-k) chi_{j-1}^{n-1,k-1}, checked for all 0 <= k <= n-1, 2 <= j <= n
/// (out-of-range character values count as 0). At j = n this is exactly the
/// Eulerian recurrence.
inline CheckResult branching_check(int n) {
  if (n < 2) throw std::invalid_argument("branching_check: n >= 2");
  const FoulkesTable cur = foulkes_table_recursive(n);
  const FoulkesTable prev = foulkes_table_recursive(n - 1);
  for (int k = 0; k < n; ++k) {
    for (int j = 2; j <= n; ++j) {
      const Int expected = Int(k + 1) * prev.value_or_zero(k, j - 1) +
                           Int(n - k) * prev.value_or_zero(k - 1, j - 1);
      if (cur.value(k, j) != expected) {
        return CheckResult::fail("branching fails at (n, k, j) = (" +
                                 std::to_string(n) + ", " + std::to_string(k) +
                                 ", " + std::to_string(j) + ")");
      }
    }
  }
  return CheckResult::pass();
}

/// Determinant of the Foulkes character table in the display ordering
/// (rows k = 0..n-1 top to bottom, columns j = n..1 left to right).
struct TableDeterminant {
  Int signed_value;  // determinant under the display ordering
  Int abs_value;
  Int expected_abs;  // n! (n-1)! ... 2!
};

inline TableDeterminant table_determinant(int n) {
  const FoulkesTable table = foulkes_table_recursive(n);
  Matrix<Int> m(n, n);
  for (int k = 0; k < n; ++k)
    for (int col = 0; col < n; ++col) m(k, col) = table.value(k, n - col);
  TableDeterminant result;
  result.signed_value = determinant(m);
  result.abs_value = abs(result.signed_value);
  result.expected_abs = 1;
  for (int i = 2; i <= n; ++i)
    result.expected_abs *= factorial(static_cast<unsigned>(i));
  return result;
}

/// Decomposition of the permutation character chi_M(sigma) = M^{#cycles}:
/// checks M^j = sum_k C(M+k, n) chi_j^{n,k} for every cycle count j.
inline CheckResult permutation_character_check(int n, int m) {
  if (n < 1 || m < 0)
    throw std::invalid_argument(
        "permutation_character_check: n >= 1 and M >= 0");
  const FoulkesTable table = foulkes_table_recursive(n);
  for (int j = 1; j <= n; ++j) {
    Int sum = 0;
    for (int k = 0; k < n; ++k)
      sum += binomial(Int(m + k), n) * table.value(k, j);
    if (sum != ipow(Int(m), static_cast<unsigned long>(j))) {
      return CheckResult::fail("permutation character fails at (j, M) = (" +
                               std::to_string(j) + ", " + std::to_string(m) +
                               ")");
    }
  }
  return CheckResult::pass();
}

/// Regular character: sum_k chi_j^{n,k} equals n! at j = n and 0 otherwise.
inline CheckResult regular_character_check(int n) {
  const FoulkesTable table = foulkes_table_recursive(n);
  const Int nfact = factorial(static_cast<unsigned>(n));
  for (int j = 1; j <= n; ++j) {
    Int sum = 0;
    for (int k = 0; k < n; ++k) sum += table.value(k, j);
    if (sum != (j == n ? nfact : Int(0))) {
      return CheckResult::fail("regular character fails at j = " +
                               std::to_string(j));
    }
  }
  return CheckResult::pass();
}

/// Dimension row against the brute-force descent census of S_n:
/// chi_n^{n,k} = A(n,k) = #{sigma : d(sigma) = k}.
inline CheckResult dimension_check(int n, int cap = kDefaultBruteForceCap) {
  const FoulkesTable table = foulkes_table_recursive(n);
  std::vector<Int> census(n, 0);
  for_each_permutation(
      n, [&](const Permutation& p) { census[p.descent_count()] += 1; }, cap);
  for (int k = 0; k < n; ++k) {
    if (table.value(k, n) != census[k] ||
        census[k] != eulerian(static_cast<unsigned>(n), k)) {
      return CheckResult::fail("dimension fails at k = " + std::to_string(k));
    }
  }
  return CheckResult::pass();
}

}  // namespace carries
