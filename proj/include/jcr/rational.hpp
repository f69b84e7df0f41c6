#pragma once

// Exact rationals over GMP integers, plus the integer-theoretic helpers the
// revival machinery needs: exact square roots, squarefree splitting and
// denominator LCMs.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace jcr {

using Integer = mpz_class;

/// Reduced fraction numerator/denominator with denominator >= 1.
///
/// Every constructor canonicalizes, so two Rationals are equal iff their
/// numerators and denominators are equal.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& v) : q_(v) {}
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "p" or "p/q" (optional sign on p, q > 0 after reduction).
  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  double to_double() const { return q_.get_d(); }
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

Rational abs(const Rational& r);

/// Square root of a nonnegative rational when it is itself rational.
/// Throws Error(domain) for negative input.
std::optional<Rational> rational_sqrt(const Rational& r);

/// Exact integer square root when m is a perfect square (m >= 0).
std::optional<Integer> integer_sqrt_exact(const Integer& m);

struct SquarefreeSplit {
  Integer square_root;  // s
  Integer squarefree;   // f, with m = s^2 * f
};

inline constexpr std::uint64_t kDefaultTrialBound = 1'000'000;

/// m = s^2 * f with f squarefree. Trial division up to `trial_bound`; a
/// leftover residue must be certifiably squarefree or a perfect square,
/// otherwise Error(factorization_limit).
SquarefreeSplit squarefree_split(const Integer& m, std::uint64_t trial_bound = kDefaultTrialBound);

/// LCM of the denominators of the (reduced) inputs. Empty input is a usage error.
Integer lcm_of_denominators(std::span<const Rational> values);

}  // namespace jcr
