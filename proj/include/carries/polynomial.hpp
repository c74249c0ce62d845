#pragma once

#include <vector>

#include "carries/combinatorics.hpp"
#include "carries/rational.hpp"

namespace carries {

/// Dense univariate polynomial with exact rational coefficients,
/// coefficients_[i] = coefficient of x^i. The highest stored coefficient is
/// nonzero unless the polynomial is zero (empty coefficient vector).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  static Polynomial constant(const Rational& v) {
    return Polynomial(std::vector<Rational>{v});
  }
  /// The monomial a*x + b.
  static Polynomial linear(const Rational& a, const Rational& b) {
    return Polynomial(std::vector<Rational>{b, a});
  }

  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const std::vector<Rational>& coefficients() const { return c_; }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }
  Rational eval(const Int& x) const { return eval(Rational(x)); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
  }

  Polynomial& operator*=(const Rational& s) {
    if (s.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
  }
  friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }

  /// Drops all terms of degree > maxdeg.
  Polynomial truncated(size_t maxdeg) const {
    if (c_.size() <= maxdeg + 1) return *this;
    return Polynomial(std::vector<Rational>(c_.begin(), c_.begin() + maxdeg + 1));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// The degree-n polynomial binom(x + shift, n), i.e.
/// prod_{t=0}^{n-1} (x + shift - t) / n!, in the formal variable x.
/// For shift = 0 its numerator coefficients are the signed Stirling numbers
/// of the first kind.
inline Polynomial falling_binomial_poly(long shift, unsigned n) {
  Polynomial p = Polynomial::constant(Rational(1));
  for (unsigned t = 0; t < n; ++t) {
    p = p * Polynomial::linear(Rational(1), Rational(shift - static_cast<long>(t)));
  }
  p *= Rational(Int(1), factorial(n));
  return p;
}

}  // namespace carries
