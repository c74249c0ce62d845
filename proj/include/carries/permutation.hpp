#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace carries {

/// Largest n for which exhaustive enumeration of S_n is allowed by default
/// (8! = 40320 permutations keeps every brute-force oracle fast).
inline constexpr int kDefaultBruteForceCap = 8;

/// Permutation of {1..n} in 1-based one-line notation.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
        throw std::invalid_argument("Permutation: not a bijection on {1..n}");
      seen[v - 1] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(img_.size()); }

  /// Image of i under the permutation, 1 <= i <= n.
  int operator()(int i) const { return img_[i - 1]; }

  const std::vector<int>& one_line() const { return img_; }

  Permutation inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 1; i <= size(); ++i) inv[img_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
  }

  /// Positions i in [1..n-1] with p(i+1) < p(i).
  std::vector<int> descent_set() const {
    std::vector<int> d;
    for (int i = 1; i < size(); ++i)
      if (img_[i] < img_[i - 1]) d.push_back(i);
    return d;
  }

  int descent_count() const {
    int c = 0;
    for (int i = 1; i < size(); ++i) c += img_[i] < img_[i - 1];
    return c;
  }

  int cycle_count() const {
    std::vector<bool> seen(img_.size(), false);
    int cycles = 0;
    for (int i = 0; i < size(); ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (int j = i; !seen[j]; j = img_[j] - 1) seen[j] = true;
    }
    return cycles;
  }

  std::string to_string() const {
    std::string s;
    for (int i = 0; i < size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(img_[i]);
    }
    return s;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }

 private:
  std::vector<int> img_;
};

/// Left-to-right composition: (compose(p, q))(i) = q(p(i)), i.e. p acts first.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("compose: size mismatch");
  std::vector<int> v(p.size());
  for (int i = 1; i <= p.size(); ++i) v[i - 1] = q(p(i));
  return Permutation(std::move(v));
}

/// Lexicographic rank of a one-line word (assumed to be a valid permutation)
/// via its Lehmer code; the identity has rank 0 and the reversal rank n!-1.
inline std::uint64_t word_rank(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller_later = 0;
    for (int j = i + 1; j < n; ++j) smaller_later += w[j] < w[i];
    rank = rank * static_cast<std::uint64_t>(n - i) +
           static_cast<std::uint64_t>(smaller_later);
  }
  return rank;
}

inline std::uint64_t perm_rank(const Permutation& p) {
  return word_rank(p.one_line());
}

inline Permutation perm_unrank(int n, std::uint64_t rank) {
  std::vector<int> code(n);
  for (int i = n; i >= 1; --i) {
    code[i - 1] = static_cast<int>(rank % (n - i + 1));
    rank /= (n - i + 1);
  }
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) {
    v[i] = pool[code[i]];
    pool.erase(pool.begin() + code[i]);
  }
  return Permutation(std::move(v));
}

inline std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

inline void check_brute_force_cap(int n, int cap) {
  if (n < 1) throw std::invalid_argument("permutations: n must be positive");
  if (n > cap)
    throw std::invalid_argument(
        "permutations: n = " + std::to_string(n) +
        " exceeds the brute-force cap of " + std::to_string(cap) +
        " (raise the cap explicitly to proceed)");
}

/// Calls fn on each of the n! permutations exactly once, in lexicographic
/// (rank) order.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn, int cap = kDefaultBruteForceCap) {
  check_brute_force_cap(n, cap);
  const std::uint64_t total = factorial_u64(n);
  for (std::uint64_t r = 0; r < total; ++r) fn(perm_unrank(n, r));
}

inline std::vector<Permutation> all_permutations(int n,
                                                 int cap = kDefaultBruteForceCap) {
  std::vector<Permutation> out;
  for_each_permutation(
      n, [&](const Permutation& p) { out.push_back(p); }, cap);
  return out;
}

}  // namespace carries
