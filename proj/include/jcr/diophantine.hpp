#pragma once

// Rational and integer points on X^2 - Y^2 = K, and the parameter synthesis
// that turns points of the unit hyperbola into revival-admitting detunings.
//
// Over Q every nonzero K is reachable (factor the conic); over Z the exact
// criterion is K != 2 (mod 4). Chains X_{j-1}^2 - X_j^2 = K_j in general sit
// inside Hilbert's tenth problem, so chain_solver is a bounded exhaustive
// search and never claims nonexistence beyond its bound.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jcr/jc_model.hpp"
#include "jcr/revival.hpp"

namespace jcr {

struct HyperbolaPoint {
  Rational x;
  Rational y;
  Rational level;  // K with x^2 - y^2 = K
};

/// Second intersection of the line X - 1 = tY with X^2 - Y^2 = 1:
/// X = (1 + t^2)/(1 - t^2), Y = 2t/(1 - t^2). t = +-1 is a domain error.
HyperbolaPoint unit_hyperbola_point(const Rational& t);

struct SynthesizedParams {
  std::uint64_t n = 0;
  Rational t;
  HyperbolaPoint point;
  Rational rho;          // alpha + beta
  Rational alpha_squared;  // 4Y^2 - 4n
  Surd alpha;            // nonnegative root of alpha_squared
  Surd beta;             // rho - alpha
  AdjacentFractions fractions;
  PairSpectrum spectrum;
  std::optional<RevivalCertificate> certificate;

  ModelParams params() const { return {alpha, beta, 1.0}; }
  std::string record() const;
};

/// Parameters (alpha, beta) for which blocks n, n+1 revive: the pair
/// splittings become 2|Y| and 2|X|. Requires Y(t)^2 >= n.
SynthesizedParams synthesize_params(const Rational& t, const Rational& rho, std::uint64_t n);

/// X = (s + K/s)/2, Y = (K/s - s)/2.
HyperbolaPoint solve_difference_rational(const Rational& level, const Rational& s);

struct IntegerPair {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  friend bool operator==(const IntegerPair&, const IntegerPair&) = default;
};

/// Every nonnegative integer solution of X^2 - Y^2 = K, ordered by
/// decreasing X (factor pairs u*v = K, u >= v, u = v mod 2).
std::vector<IntegerPair> solve_difference_integer(std::uint64_t level);

using Chain = std::vector<std::uint64_t>;

/// All integer chains X_0 >= X_1 >= ... >= X_s >= 0 with X_0 <= bound and
/// X_{j-1}^2 - X_j^2 = ks[j-1], ascending in X_0. bound < 2^31.
std::vector<Chain> chain_solver(std::span<const std::uint64_t> ks, std::uint64_t bound, unsigned workers = 1);

std::string format_chains_csv(std::span<const Chain> chains);

/// Integers Y <= bound that are both a hypotenuse and a leg of some
/// Pythagorean triple, by exhaustive search.
std::vector<std::uint64_t> pythagorean_middles(std::uint64_t bound);

}  // namespace jcr
