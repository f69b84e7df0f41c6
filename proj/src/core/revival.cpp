#include "jcr/revival.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "jcr/error.hpp"
#include "jcr/parallel.hpp"

namespace jcr {

std::string RevivalCertificate::period_exact() const {
  std::string unit = gap_unit.str();
  if (!gap_unit.is_rational() || !gap_unit.rational_part().is_integer()) unit = "(" + unit + ")";
  return "2*pi*" + k1.get_str() + "/" + unit;
}

std::string RevivalCertificate::record() const {
  std::string r = "ratios=";
  for (std::size_t i = 0; i < ratios.size(); ++i) r += (i ? "," : "") + ratios[i].str();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10f", period);
  r += "\nK1=" + k1.get_str() + "\ndelta=" + delta.str() + "\ngap_unit=" + gap_unit.str() +
       "\nT_exact=" + period_exact();
  if (auto d = delta.as_rational()) {
    Rational multiple = Rational(2) / *d;
    r += "\nT_pi=" + (multiple == Rational(1) ? std::string() : multiple.str() + "*") + "pi";
  }
  r += "\nT=" + std::string(buf) + "\n";
  return r;
}

std::vector<Surd> distinct_levels(std::span<const Surd> energies) {
  std::vector<Surd> out(energies.begin(), energies.end());
  std::sort(out.begin(), out.end(), [](const Surd& a, const Surd& b) { return compare(a, b) < 0; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::vector<Rational>> gap_ratios(std::span<const Surd> ascending) {
  if (ascending.size() < 2)
    throw Error(ErrorCode::single_level, "fewer than two distinct levels: the span revives at every t");
  for (std::size_t i = 1; i < ascending.size(); ++i)
    if (compare(ascending[i - 1], ascending[i]) >= 0)
      throw Error(ErrorCode::usage, "gap_ratios expects strictly ascending levels");
  const Surd unit = ascending[1] - ascending[0];
  std::vector<Rational> ratios;
  for (std::size_t j = 1; j < ascending.size(); ++j) {
    auto r = ratio_if_rational(ascending[j] - ascending[0], unit);
    if (!r) return std::nullopt;
    ratios.push_back(*r);
  }
  return ratios;
}

std::optional<RevivalCertificate> revival_certificate(std::span<const Surd> energies) {
  auto levels = distinct_levels(energies);
  auto ratios = gap_ratios(levels);
  if (!ratios) return std::nullopt;
  RevivalCertificate c;
  c.ratios = std::move(*ratios);
  c.k1 = lcm_of_denominators(c.ratios);
  c.gap_unit = levels[1] - levels[0];
  c.delta = c.gap_unit / Rational(c.k1);
  c.period = static_cast<double>(2.0L * std::numbers::pi_v<long double> / c.delta.to_long_double());
  return c;
}

AdjacentFractions adjacent_pair_fractions(const Rational& alpha_squared, const Rational& rho, std::uint64_t n) {
  if (alpha_squared.sign() < 0) throw Error(ErrorCode::domain, "alpha^2 must be >= 0");
  if (n == 0) throw Error(ErrorCode::domain, "n must be >= 1");
  const Rational nr{static_cast<long>(n)};
  Surd x = Surd::sqrt_of(alpha_squared + Rational(4) * (nr + Rational(1))) * Rational(1, 2);
  Surd y = Surd::sqrt_of(alpha_squared + Rational(4) * nr) * Rational(1, 2);
  Surd two_y = y * Rational(2);
  return {ratio_if_rational(Surd(rho) + x, two_y), ratio_if_rational(Surd(rho) - x, two_y)};
}

ResonanceWitness resonance_obstruction(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::domain, "n must be >= 1");
  ResonanceWitness w;
  w.n = n;
  w.product = Integer(n) * (n + 1);
  w.ratio_sqrt_rational = rational_sqrt(Rational(Integer(n + 1), Integer(n))).has_value();
  return w;
}

std::optional<std::uint64_t> resonance_batch(std::uint64_t max_n, unsigned workers) {
  if (max_n >= (std::uint64_t{1} << 31)) throw Error(ErrorCode::domain, "resonance_batch: max_n too large");
  std::vector<std::uint64_t> first_bad(std::max(1u, workers), 0);
  parallel_chunks(max_n, workers, [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t n = begin + 1; n <= end; ++n) {
      std::uint64_t prod = n * (n + 1);
      auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(prod)));
      while (r * r > prod) --r;
      while ((r + 1) * (r + 1) <= prod) ++r;
      if (r * r == prod) {
        first_bad[worker] = n;
        return;
      }
    }
  });
  for (auto v : first_bad)
    if (v) return v;
  return std::nullopt;
}

}  // namespace jcr
