#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jcr/surd.hpp"

namespace jcr {

/// Full-revival certificate for the span of a set of eigenvectors.
///
/// With E_0 < E_1 the two lowest distinct levels, every ratio
/// r_j = (E_j - E_0) / (E_1 - E_0) is rational, K1 is the LCM of their
/// denominators, delta = (E_1 - E_0) / K1 is the GCD of all gaps, and
/// T = 2 pi / delta is the smallest t > 0 at which all phases align.
struct RevivalCertificate {
  std::vector<Rational> ratios;  // r_1 = 1, r_2, ...
  Integer k1;
  Surd gap_unit;  // E_1 - E_0
  Surd delta;     // gap_unit / K1
  double period = 0;

  /// "2*pi*K1/gapUnit" with gapUnit in textual surd form.
  std::string period_exact() const;
  /// Key = value record (ratios, K1, delta, gap_unit, T_exact, T).
  std::string record() const;
};

/// Sorts ascending and merges exactly equal values.
std::vector<Surd> distinct_levels(std::span<const Surd> energies);

/// Ratios (E_j - E_0)/(E_1 - E_0), j >= 1, for strictly ascending input;
/// nullopt when any ratio is irrational. Fewer than two levels throws
/// Error(single_level).
std::optional<std::vector<Rational>> gap_ratios(std::span<const Surd> ascending);

/// Certificate for arbitrary input order; duplicates are merged first.
std::optional<RevivalCertificate> revival_certificate(std::span<const Surd> energies);

struct AdjacentFractions {
  std::optional<Rational> plus;
  std::optional<Rational> minus;
};

/// F+- = (rho +- X) / (2 Y), X = sqrt(alpha^2 + 4(n+1))/2, Y = sqrt(alpha^2 + 4n)/2,
/// rho = alpha + beta. Components are present exactly when rational.
AdjacentFractions adjacent_pair_fractions(const Rational& alpha_squared, const Rational& rho, std::uint64_t n);

/// At resonance the pair criterion reduces to rationality of sqrt((n+1)/n),
/// which fails because n(n+1) is never a perfect square.
struct ResonanceWitness {
  std::uint64_t n = 0;
  Integer product;  // n(n+1)
  bool ratio_sqrt_rational = false;
  bool holds() const { return !ratio_sqrt_rational; }
};

ResonanceWitness resonance_obstruction(std::uint64_t n);

/// Checks n(n+1) non-square for n = 1..max_n in 64-bit integer arithmetic;
/// returns the first n where it fails (never, in practice) or nullopt.
std::optional<std::uint64_t> resonance_batch(std::uint64_t max_n, unsigned workers = 1);

}  // namespace jcr
