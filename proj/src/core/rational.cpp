#include "jcr/rational.hpp"

#include <cctype>

#include "jcr/error.hpp"

namespace jcr {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::domain, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = trim(s.substr(0, slash));
    den = trim(s.substr(slash + 1));
  }
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorCode::usage, "not a rational: '" + std::string(text) + "'");
  Integer n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw Error(ErrorCode::usage, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(n, d);
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::domain, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::optional<Integer> integer_sqrt_exact(const Integer& m) {
  if (sgn(m) < 0) return std::nullopt;
  if (mpz_perfect_square_p(m.get_mpz_t()) == 0) return std::nullopt;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
  return root;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r.sign() < 0) throw Error(ErrorCode::domain, "square root of negative rational " + r.str());
  auto num = integer_sqrt_exact(r.numerator());
  if (!num) return std::nullopt;
  auto den = integer_sqrt_exact(r.denominator());
  if (!den) return std::nullopt;
  return Rational(*num, *den);
}

namespace {

// m fits in 64 bits: the same trial division in native arithmetic.
std::optional<SquarefreeSplit> squarefree_split_u64(std::uint64_t m, std::uint64_t trial_bound) {
  std::uint64_t rest = m, s = 1, f = 1, p = 2;
  for (; p <= trial_bound && p <= rest / p; p += (p == 2 ? 1 : 2)) {
    unsigned exponent = 0;
    while (rest % p == 0) {
      rest /= p;
      ++exponent;
    }
    for (unsigned i = 0; i < exponent / 2; ++i) s *= p;
    if (exponent % 2 == 1) f *= p;
  }
  if (rest == 1) return SquarefreeSplit{Integer(s), Integer(f)};
  if (p > rest / p) return SquarefreeSplit{Integer(s), Integer(f) * rest};
  return std::nullopt;  // residue needs the big-integer certification path
}

}  // namespace

SquarefreeSplit squarefree_split(const Integer& m, std::uint64_t trial_bound) {
  if (m < 1) throw Error(ErrorCode::domain, "squarefree_split needs m >= 1, got " + m.get_str());
  if (mpz_fits_ulong_p(m.get_mpz_t()) != 0 && sizeof(unsigned long) == sizeof(std::uint64_t)) {
    if (auto fast = squarefree_split_u64(m.get_ui(), trial_bound)) return *fast;
  }
  Integer rest = m;
  Integer s = 1, f = 1;
  std::uint64_t p = 2;
  for (; p <= trial_bound; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > rest) break;
    unsigned exponent = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++exponent;
    }
    for (unsigned i = 0; i < exponent / 2; ++i) s *= p;
    if (exponent % 2 == 1) f *= p;
  }
  if (rest == 1) return {s, f};

  // Every prime factor of `rest` exceeds p-1. If p*p > rest, rest is prime.
  if (Integer(p) * p > rest) return {s, f * rest};

  if (auto root = integer_sqrt_exact(rest)) return {s * *root, f};
  // No prime factor <= bound and not a square: below bound^3 it is p or p*q, p != q.
  Integer cube = Integer(trial_bound);
  cube = cube * cube * cube;
  if (rest < cube || mpz_probab_prime_p(rest.get_mpz_t(), 30) == 2) return {s, f * rest};
  throw Error(ErrorCode::factorization_limit,
              "cannot certify squarefree part of " + m.get_str() + " (residue " + rest.get_str() +
                  " beyond trial bound " + std::to_string(trial_bound) + ")");
}

Integer lcm_of_denominators(std::span<const Rational> values) {
  if (values.empty()) throw Error(ErrorCode::usage, "lcm_of_denominators: empty list");
  Integer acc = 1;
  for (const auto& v : values) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), v.raw().get_den_mpz_t());
  return acc;
}

}  // namespace jcr
