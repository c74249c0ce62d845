#pragma once

#include <stdexcept>
#include <vector>

#include "carries/rational.hpp"

namespace carries {

inline Int factorial(unsigned n) {
  Int f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

/// base^e with the convention 0^0 = 1.
inline Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Combinatorial binomial coefficient: C(m, k) = m(m-1)...(m-k+1)/k! for
/// m >= k >= 0, and 0 whenever m < k (in particular for all negative m).
inline Int binomial(const Int& m, long k) {
  if (k < 0 || m < k) return 0;
  Int r = 1;
  for (long i = 0; i < k; ++i) {
    r *= m - i;
    r /= i + 1;  // exact: product of i+1 consecutive integers
  }
  return r;
}

inline Int binomial(long m, long k) { return binomial(Int(m), k); }

/// Row n of the signed Stirling numbers of the first kind:
/// s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k), s(0,0) = 1.
inline std::vector<Int> stirling_first_row(unsigned n) {
  std::vector<Int> row{1};  // s(0,0)
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<Int> next(m + 1, 0);
    for (unsigned k = 1; k <= m; ++k) {
      next[k] = row[k - 1];
      if (k < m) next[k] -= (m - 1) * row[k];
    }
    // s(m,0) = 0 for m >= 1
    row = std::move(next);
  }
  return row;
}

inline Int stirling_first(unsigned n, long k) {
  if (k < 0 || static_cast<unsigned>(k) > n) return 0;
  return stirling_first_row(n)[static_cast<size_t>(k)];
}

/// Row n of the Eulerian numbers: A(n,k) counts permutations of n with k
/// descents. A(n,k) = (k+1)A(n-1,k) + (n-k)A(n-1,k-1), A(1,0) = 1.
inline std::vector<Int> eulerian_row(unsigned n) {
  if (n == 0) throw std::invalid_argument("eulerian: n must be positive");
  std::vector<Int> row{1};  // A(1,0)
  for (unsigned m = 2; m <= n; ++m) {
    std::vector<Int> next(m, 0);
    for (unsigned k = 0; k < m; ++k) {
      if (k < m - 1) next[k] += (k + 1) * row[k];
      if (k >= 1) next[k] += Int(m - k) * row[k - 1];
    }
    row = std::move(next);
  }
  return row;
}

inline Int eulerian(unsigned n, long k) {
  if (k < 0 || static_cast<unsigned>(k) >= n) return 0;
  return eulerian_row(n)[static_cast<size_t>(k)];
}

}  // namespace carries
