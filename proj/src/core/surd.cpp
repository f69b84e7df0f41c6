#include "jcr/surd.hpp"

#include <mpfr.h>

#include <cctype>
#include <utility>

#include "jcr/error.hpp"

namespace jcr {

namespace {

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  ~BigFloat() { mpfr_clear(v_); }
  BigFloat(const BigFloat&) = delete;
  BigFloat& operator=(const BigFloat&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// Evaluates the surd into `out` at `bits` precision.
void evaluate(const Surd& s, unsigned bits, BigFloat& out) {
  mpfr_set_q(out.get(), s.rational_part().raw().get_mpq_t(), MPFR_RNDN);
  BigFloat term(bits);
  for (const auto& [radicand, coeff] : s.terms()) {
    mpfr_set_z(term.get(), radicand.get_mpz_t(), MPFR_RNDN);
    mpfr_sqrt(term.get(), term.get(), MPFR_RNDN);
    mpfr_mul_q(term.get(), term.get(), coeff.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_add(out.get(), out.get(), term.get(), MPFR_RNDN);
  }
}

void add_term(Rational& rational_part, Surd::Terms& terms, const Integer& radicand, const Rational& c) {
  if (c.is_zero() || radicand == 0) return;
  if (radicand == 1) {
    rational_part += c;
    return;
  }
  auto [it, inserted] = terms.try_emplace(radicand, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Surd run() {
    Surd value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::usage, "cannot parse '" + std::string(text_) + "': " + why);
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Surd expression() {
    Surd acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Surd term() {
    Surd acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        auto divisor = factor().as_rational();
        if (!divisor) fail("division by an irrational value");
        if (divisor->is_zero()) fail("division by zero");
        acc /= *divisor;
      } else {
        return acc;
      }
    }
  }

  Surd factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    if (accept('(')) {
      Surd inner = expression();
      if (!accept(')')) fail("missing ')'");
      return inner;
    }
    skip_space();
    if (text_.substr(pos_).starts_with("sqrt")) {
      pos_ += 4;
      if (!accept('(')) fail("expected '(' after sqrt");
      auto arg = expression().as_rational();
      if (!accept(')')) fail("missing ')'");
      if (!arg) fail("sqrt of an irrational value");
      if (arg->sign() < 0) fail("sqrt of a negative value");
      return Surd::sqrt_of(*arg);
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'"
                                                : "unexpected end of input");
    return Surd(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Surd surd_normalize(const Rational& rational_part, const Surd::Terms& terms) {
  return Surd(rational_part, terms);
}

Surd::Surd(const Rational& rational_part, const Terms& terms) : rational_(rational_part), terms_(terms) {
  normalize();
}

void Surd::normalize() {
  Terms raw;
  raw.swap(terms_);
  for (const auto& [radicand, coeff] : raw) {
    if (radicand < 0) throw Error(ErrorCode::domain, "negative radicand " + radicand.get_str());
    if (coeff.is_zero() || radicand == 0) continue;
    auto split = squarefree_split(radicand);
    add_term(rational_, terms_, split.squarefree, coeff * Rational(split.square_root));
  }
}

Surd Surd::scaled_root(const Rational& c, const Integer& m) { return Surd(Rational(0), Terms{{m, c}}); }

Surd Surd::sqrt_of(const Rational& r) {
  if (r.sign() < 0) throw Error(ErrorCode::domain, "square root of negative rational " + r.str());
  // sqrt(p/q) = s_p sqrt(f_p) / (s_q sqrt(f_q)) = s_p sqrt(f_p f_q) / (s_q f_q); p, q coprime
  // so f_p f_q is already squarefree.
  if (r.is_zero()) return Surd(0);
  auto num = squarefree_split(r.numerator());
  auto den = squarefree_split(r.denominator());
  Rational coeff(num.square_root, den.square_root * den.squarefree);
  Integer radicand = num.squarefree * den.squarefree;
  Surd out;
  add_term(out.rational_, out.terms_, radicand, coeff);
  return out;
}

Surd Surd::parse(std::string_view text) { return Parser(text).run(); }

std::optional<Rational> Surd::as_rational() const {
  if (!terms_.empty()) return std::nullopt;
  return rational_;
}

Surd Surd::operator-() const {
  Surd out = *this;
  out *= Rational(-1);
  return out;
}

Surd& Surd::operator+=(const Surd& o) {
  rational_ += o.rational_;
  for (const auto& [m, c] : o.terms_) add_term(rational_, terms_, m, c);
  return *this;
}

Surd& Surd::operator-=(const Surd& o) { return *this += -o; }

Surd& Surd::operator*=(const Rational& c) {
  if (c.is_zero()) {
    rational_ = Rational(0);
    terms_.clear();
    return *this;
  }
  rational_ *= c;
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Surd& Surd::operator/=(const Rational& c) { return *this *= Rational(1) / c; }

Surd operator*(const Surd& a, const Surd& b) {
  Surd out = a * b.rational_;
  for (const auto& [m, c] : b.terms_) {
    add_term(out.rational_, out.terms_, m, c * a.rational_);
    for (const auto& [n, d] : a.terms_) {
      // m, n squarefree: sqrt(m n) = g * sqrt((m/g)(n/g)) with g = gcd(m, n).
      Integer g = gcd(m, n);
      Integer radicand = (m / g) * (n / g);
      add_term(out.rational_, out.terms_, radicand, c * d * Rational(g));
    }
  }
  return out;
}

int Surd::sign() const {
  if (terms_.empty()) return rational_.sign();
  for (unsigned bits = 256; bits <= 16384; bits *= 2) {
    BigFloat v(bits);
    evaluate(*this, bits, v);
    // Accumulated rounding is far below 2^(exp(max term) - bits + 8).
    long magnitude_exp = mpfr_get_exp(v.get());
    long scale = 0;
    {
      BigFloat t(64);
      mpfr_set_q(t.get(), rational_.raw().get_mpq_t(), MPFR_RNDN);
      if (!mpfr_zero_p(t.get())) scale = mpfr_get_exp(t.get());
      for (const auto& [m, c] : terms_) {
        mpfr_set_z(t.get(), m.get_mpz_t(), MPFR_RNDN);
        mpfr_sqrt(t.get(), t.get(), MPFR_RNDN);
        mpfr_mul_q(t.get(), t.get(), c.raw().get_mpq_t(), MPFR_RNDN);
        scale = std::max(scale, static_cast<long>(mpfr_get_exp(t.get())));
      }
    }
    if (!mpfr_zero_p(v.get()) && magnitude_exp > scale - static_cast<long>(bits) + 16)
      return mpfr_sgn(v.get());
  }
  throw Error(ErrorCode::unsupported, "cannot decide sign of " + str());
}

double Surd::to_double() const { return static_cast<double>(to_long_double()); }

long double Surd::to_long_double(unsigned bits) const {
  BigFloat v(bits);
  evaluate(*this, bits, v);
  return mpfr_get_ld(v.get(), MPFR_RNDN);
}

std::string Surd::str() const {
  std::string out;
  if (!rational_.is_zero() || terms_.empty()) out = rational_.str();
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    std::string body = (mag == Rational(1) ? "" : mag.str() + "*") + "sqrt(" + m.get_str() + ")";
    if (out.empty())
      out = (c.sign() < 0 ? "-" : "") + body;
    else
      out += (c.sign() < 0 ? " - " : " + ") + body;
  }
  return out;
}

std::strong_ordering compare(const Surd& a, const Surd& b) {
  if (a == b) return std::strong_ordering::equal;
  int s = (a - b).sign();
  return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::optional<Rational> ratio_if_rational(const Surd& num, const Surd& den) {
  if (den.is_zero()) throw Error(ErrorCode::domain, "ratio with zero denominator");
  if (num.is_zero()) return Rational(0);
  // num = r * den componentwise: same support, one common coefficient ratio.
  if (num.terms().size() != den.terms().size()) return std::nullopt;
  if (num.rational_part().is_zero() != den.rational_part().is_zero()) return std::nullopt;
  std::optional<Rational> r;
  if (!den.rational_part().is_zero()) r = num.rational_part() / den.rational_part();
  auto it = num.terms().begin();
  for (const auto& [m, c] : den.terms()) {
    if (it->first != m) return std::nullopt;
    Rational q = it->second / c;
    if (r && *r != q) return std::nullopt;
    r = q;
    ++it;
  }
  return r;
}

}  // namespace jcr
