#include "jcr/diophantine.hpp"

#include <cmath>

#include "jcr/error.hpp"
#include "jcr/parallel.hpp"

namespace jcr {

namespace {

constexpr std::uint64_t kMaxBound = std::uint64_t{1} << 31;

std::optional<std::uint64_t> exact_isqrt(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r != v) return std::nullopt;
  return r;
}

std::string optional_str(const std::optional<Rational>& r) { return r ? r->str() : "irrational"; }

}  // namespace

HyperbolaPoint unit_hyperbola_point(const Rational& t) {
  Rational t2 = t * t;
  Rational denom = Rational(1) - t2;
  if (denom.is_zero()) throw Error(ErrorCode::domain, "t = " + t.str() + " is singular (1 - t^2 = 0)");
  return {(Rational(1) + t2) / denom, Rational(2) * t / denom, Rational(1)};
}

SynthesizedParams synthesize_params(const Rational& t, const Rational& rho, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::domain, "n must be >= 1");
  SynthesizedParams s;
  s.n = n;
  s.t = t;
  s.rho = rho;
  s.point = unit_hyperbola_point(t);
  const Rational nr{static_cast<long>(n)};
  s.alpha_squared = Rational(4) * s.point.y * s.point.y - Rational(4) * nr;
  if (s.alpha_squared.sign() < 0)
    throw Error(ErrorCode::domain, "alpha not real: Y(t)^2 = " + (s.point.y * s.point.y).str() + " < n = " +
                                       std::to_string(n));
  s.alpha = Surd::sqrt_of(s.alpha_squared);
  s.beta = Surd(rho) - s.alpha;
  s.fractions = adjacent_pair_fractions(s.alpha_squared, rho, n);
  s.spectrum = pair_spectrum(n, s.alpha, s.beta);
  s.certificate = revival_certificate(s.spectrum.energies());
  return s;
}

std::string SynthesizedParams::record() const {
  std::string r = "n=" + std::to_string(n) + "\nt=" + t.str() + "\nX=" + point.x.str() + "\nY=" + point.y.str() +
                  "\nrho=" + rho.str() + "\nalpha2=" + alpha_squared.str() + "\nalpha=" + alpha.str() +
                  "\nbeta=" + beta.str() + "\nF_plus=" + optional_str(fractions.plus) +
                  "\nF_minus=" + optional_str(fractions.minus) +
                  "\ndegenerate=" + (spectrum.degenerate ? "1" : "0") + "\n";
  for (std::size_t i = 0; i < spectrum.levels.size(); ++i)
    r += "E" + std::to_string(i) + "=" + spectrum.levels[i].energy.str() + "\n";
  return r;
}

HyperbolaPoint solve_difference_rational(const Rational& level, const Rational& s) {
  if (level.is_zero() || s.is_zero()) throw Error(ErrorCode::domain, "K and s must be nonzero");
  Rational ks = level / s;
  return {(s + ks) / Rational(2), (ks - s) / Rational(2), level};
}

std::vector<IntegerPair> solve_difference_integer(std::uint64_t level) {
  if (level == 0) throw Error(ErrorCode::domain, "K must be >= 1");
  std::vector<IntegerPair> out;
  for (std::uint64_t v = 1; v <= level / v; ++v) {
    if (level % v != 0) continue;
    std::uint64_t u = level / v;
    if ((u - v) % 2 != 0) continue;
    out.push_back({v + (u - v) / 2, (u - v) / 2});
  }
  return out;
}

std::vector<Chain> chain_solver(std::span<const std::uint64_t> ks, std::uint64_t bound, unsigned workers) {
  if (ks.empty()) throw Error(ErrorCode::usage, "chain_solver: empty K list");
  if (bound >= kMaxBound) throw Error(ErrorCode::domain, "chain_solver: bound must be < 2^31");
  const std::uint64_t count = bound + 1;
  std::vector<std::optional<Chain>> found(count);
  parallel_chunks(count, workers, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t x0 = begin; x0 < end; ++x0) {
      Chain chain{x0};
      bool ok = true;
      for (std::uint64_t k : ks) {
        std::uint64_t sq = chain.back() * chain.back();
        std::optional<std::uint64_t> next;
        if (k <= sq) next = exact_isqrt(sq - k);
        if (!next) {
          ok = false;
          break;
        }
        chain.push_back(*next);
      }
      if (ok) found[x0] = std::move(chain);
    }
  });
  std::vector<Chain> out;
  for (auto& f : found)
    if (f) out.push_back(std::move(*f));
  return out;
}

std::string format_chains_csv(std::span<const Chain> chains) {
  std::string out;
  for (const auto& c : chains) {
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
    out += "\n";
  }
  return out;
}

std::vector<std::uint64_t> pythagorean_middles(std::uint64_t bound) {
  if (bound >= kMaxBound) throw Error(ErrorCode::domain, "pythagorean_middles: bound must be < 2^31");
  std::vector<std::uint64_t> out;
  for (std::uint64_t y = 1; y <= bound; ++y) {
    const std::uint64_t y2 = y * y;
    bool hypotenuse = false;
    for (std::uint64_t a = 1; a < y && !hypotenuse; ++a) hypotenuse = exact_isqrt(y2 - a * a).has_value();
    if (!hypotenuse) continue;
    // Leg: y^2 = (c - l)(c + l) with a factor pair d < y^2/d of equal parity.
    bool leg = false;
    for (std::uint64_t d = 1; d < y && !leg; ++d)
      leg = y2 % d == 0 && (d - y2 / d) % 2 == 0;
    if (leg) out.push_back(y);
  }
  return out;
}

}  // namespace jcr
