#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace carries {

/// Arbitrary-precision signed integer.
using Int = mpz_class;

/// Exact rational number, always kept in canonical reduced form:
/// gcd(|num|, den) = 1 and den > 0. All arithmetic is exact.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long v) : q_(v) {}          // NOLINT: implicit by design
  Rational(const Int& v) : q_(v) {}    // NOLINT: implicit by design

  Rational(const Int& num, const Int& den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
  }
  Rational(long num, long den) : Rational(Int(num), Int(den)) {}

  /// Parses "p/q" or "p" with decimal digits.
  static Rational from_string(std::string_view s) {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
      return Rational(Int(std::string(s)));
    }
    return Rational(Int(std::string(s.substr(0, slash))),
                    Int(std::string(s.substr(slash + 1))));
  }

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(den(), num());
  }

  Rational pow(unsigned long e) const {
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den().get_mpz_t(), e);
    Rational r;
    r.q_ = mpq_class(n, d);  // num/den coprime, so the power already is
    return r;
  }

  /// "p/q", or just "p" when the value is an integer.
  std::string to_string() const {
    std::string s = q_.get_num().get_str();
    if (q_.get_den() != 1) {
      s += '/';
      s += q_.get_den().get_str();
    }
    return s;
  }

  /// Nearest double; for display only, never used in exact computations.
  double approx() const { return q_.get_d(); }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;  // invariant: canonical (reduced, positive denominator)
};

}  // namespace carries
