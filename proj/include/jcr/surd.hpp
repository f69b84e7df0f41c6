#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "jcr/rational.hpp"

namespace jcr {

/// A rational plus a finite sum of rational multiples of square roots:
///
///     q0 + sum_i c_i * sqrt(m_i)
///
/// This is the value type of every closed-form energy (and of alpha/beta when
/// the detuning is irrational). In canonical form each m_i is squarefree and
/// >= 2 and each c_i is nonzero; square roots of distinct squarefree integers
/// are linearly independent over Q, so structural equality is real equality.
class Surd {
 public:
  using Terms = std::map<Integer, Rational>;

  Surd() = default;
  Surd(const Rational& r) : rational_(r) {}  // NOLINT(google-explicit-constructor)
  Surd(long v) : rational_(v) {}             // NOLINT(google-explicit-constructor)

  /// Builds and normalizes q0 + sum terms. Radicands must be positive integers.
  Surd(const Rational& rational_part, const Terms& terms);

  /// c * sqrt(m) for an integer m >= 0, normalized.
  static Surd scaled_root(const Rational& c, const Integer& m);

  /// Nonnegative square root of a nonnegative rational p/q, stored as sqrt(pq)/q.
  static Surd sqrt_of(const Rational& r);

  /// Parses the textual form, e.g. "2 - 2*sqrt(7)/3", "a*sqrt(m)/b", "5/3".
  /// Supports + - * / and parentheses; sqrt() takes a nonnegative rational
  /// expression; division is only by nonzero rationals.
  static Surd parse(std::string_view text);

  const Rational& rational_part() const { return rational_; }
  const Terms& terms() const { return terms_; }

  bool is_rational() const { return terms_.empty(); }
  std::optional<Rational> as_rational() const;
  bool is_zero() const { return terms_.empty() && rational_.is_zero(); }

  Surd operator-() const;
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Rational& c);
  Surd& operator/=(const Rational& c);

  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(Surd a, const Rational& c) { return a *= c; }
  friend Surd operator*(const Rational& c, Surd a) { return a *= c; }
  friend Surd operator/(Surd a, const Rational& c) { return a /= c; }
  friend Surd operator*(const Surd& a, const Surd& b);

  friend bool operator==(const Surd& a, const Surd& b) {
    return a.rational_ == b.rational_ && a.terms_ == b.terms_;
  }

  /// Sign of the real value: exact when rational, otherwise decided by MPFR
  /// evaluation starting at 256 bits and doubling until unambiguous.
  int sign() const;

  double to_double() const;
  /// Value evaluated with `bits` of working precision, rounded to long double.
  long double to_long_double(unsigned bits = 256) const;

  std::string str() const;

 private:
  void normalize();

  Rational rational_;
  Terms terms_;
};

/// Structural normal form; idempotent. Exposed for callers that build Surds
/// from raw terms.
Surd surd_normalize(const Rational& rational_part, const Surd::Terms& terms);

/// Real-number ordering (exact equality short-circuits).
std::strong_ordering compare(const Surd& a, const Surd& b);

/// num / den when that quotient is rational; nullopt otherwise. den != 0.
std::optional<Rational> ratio_if_rational(const Surd& num, const Surd& den);

}  // namespace jcr
