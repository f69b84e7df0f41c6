#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "jcr/error.hpp"
#include "jcr/jc_model.hpp"
#include "jcr/revival.hpp"
#include "jcr/verify.hpp"

using jcr::Integer;
using jcr::Rational;
using jcr::Surd;

namespace {

std::vector<Surd> surds(std::initializer_list<const char*> texts) {
  std::vector<Surd> out;
  for (auto t : texts) out.push_back(Surd::parse(t));
  return out;
}

// Oracle: does t align every gap phase to a multiple of 2 pi?
bool phases_align(const std::vector<Rational>& gaps, const Rational& t_over_pi) {
  for (const auto& g : gaps) {
    if (!(g * t_over_pi / Rational(2)).is_integer()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("gap_ratios examples") {
  auto a = jcr::gap_ratios(surds({"0", "5/3", "8/3", "5"}));
  REQUIRE(a.has_value());
  CHECK(*a == std::vector<Rational>{Rational(1), Rational::parse("8/5"), Rational(3)});

  auto b = jcr::gap_ratios(surds({"0", "1", "2"}));
  REQUIRE(b.has_value());
  CHECK(*b == std::vector<Rational>{Rational(1), Rational(2)});

  CHECK_FALSE(jcr::gap_ratios(surds({"0", "2 - sqrt(2)", "2", "2 + sqrt(2)"})).has_value());

  try {
    jcr::gap_ratios(surds({"3"}));
    FAIL("expected single-level signal");
  } catch (const jcr::Error& e) {
    CHECK(e.code() == jcr::ErrorCode::single_level);
  }
  CHECK_THROWS_AS(jcr::gap_ratios(surds({"1", "0"})), jcr::Error);
}

TEST_CASE("revival_certificate examples") {
  Surd alpha = Surd::parse("2*sqrt(7)/3"), beta = Surd::parse("2 - 2*sqrt(7)/3");
  auto spec = jcr::pair_spectrum(1, alpha, beta);
  auto c = jcr::revival_certificate(spec.energies());
  REQUIRE(c.has_value());
  CHECK(c->ratios == std::vector<Rational>{Rational(1), Rational::parse("8/5"), Rational(3)});
  CHECK(c->k1 == 5);
  CHECK(c->delta == Surd(Rational::parse("1/3")));
  CHECK(c->gap_unit == Surd(Rational::parse("5/3")));
  CHECK(c->period == doctest::Approx(6 * std::numbers::pi).epsilon(1e-15));
  CHECK(c->period_exact() == "2*pi*5/(5/3)");
  CHECK(c->record().find("T_pi=6*pi") != std::string::npos);
  // Oracle: 6 pi * {5/3, 8/3, 5} = 2 pi * {5, 8, 15}.
  CHECK(phases_align({Rational::parse("5/3"), Rational::parse("8/3"), Rational(5)}, Rational(6)));

  auto rabi = jcr::revival_certificate(surds({"0", "2"}));
  REQUIRE(rabi.has_value());
  CHECK(rabi->ratios == std::vector<Rational>{Rational(1)});
  CHECK(rabi->k1 == 1);
  CHECK(rabi->delta == Surd(2));
  CHECK(rabi->period == doctest::Approx(std::numbers::pi));

  CHECK_FALSE(jcr::revival_certificate(surds({"0", "2 - sqrt(2)", "2", "2 + sqrt(2)"})).has_value());
}

TEST_CASE("certificates merge degenerate levels and ignore input order") {
  auto c = jcr::revival_certificate(surds({"5", "0", "8/3", "5/3", "8/3"}));
  REQUIRE(c.has_value());
  CHECK(c->k1 == 5);
  CHECK(c->ratios.size() == 3);
}

TEST_CASE("certificate is the minimal aligning time (oracle scan on rationals)") {
  // For rational levels, the smallest t = q*pi with every gap*t in 2 pi Z
  // is found by scanning q over multiples of 1/L, L = lcm of gap denominators.
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(1, 30), den(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Surd> levels{Surd(0)};
    std::vector<Rational> gaps;
    for (int j = 0; j < 3; ++j) {
      Rational g{Integer(num(rng)), Integer(den(rng))};
      levels.push_back(Surd(g));
      gaps.push_back(g);
    }
    auto c = jcr::revival_certificate(levels);
    REQUIRE(c.has_value());  // completeness on rationals
    auto delta = c->delta.as_rational();
    REQUIRE(delta.has_value());
    Rational t_over_pi = Rational(2) / *delta;
    CHECK(phases_align(gaps, t_over_pi));
    // No smaller multiple of 1/60 aligns (every denominator divides 60).
    for (long q = 1; Rational(Integer(q), Integer(60)) < t_over_pi; ++q)
      CHECK_FALSE(phases_align(gaps, Rational(Integer(q), Integer(60))));
  }
}

TEST_CASE("scale covariance") {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<long> num(1, 40), den(1, 9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Surd> levels{Surd(Rational::parse("-1/2"))};
    for (int j = 0; j < 3; ++j) levels.push_back(Surd(Rational(Integer(num(rng)), Integer(den(rng)))));
    Rational scale{Integer(num(rng)), Integer(den(rng))};
    std::vector<Surd> scaled;
    for (const auto& l : levels) scaled.push_back(l * scale);
    auto a = jcr::revival_certificate(levels), b = jcr::revival_certificate(scaled);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->ratios == b->ratios);
    CHECK(a->k1 == b->k1);
    CHECK(b->period == doctest::Approx(a->period / scale.to_double()).epsilon(1e-12));
  }
  // Irrational scale: ratios stay rational, gap unit becomes a surd.
  std::vector<Surd> irr{Surd(0), Surd::parse("5*sqrt(2)/3"), Surd::parse("8*sqrt(2)/3"), Surd::parse("5*sqrt(2)")};
  auto c = jcr::revival_certificate(irr);
  REQUIRE(c.has_value());
  CHECK(c->k1 == 5);
  CHECK(c->period == doctest::Approx(6 * std::numbers::pi / std::sqrt(2.0)));
}

TEST_CASE("adjacent_pair_fractions") {
  auto a = jcr::adjacent_pair_fractions(Rational::parse("28/9"), Rational(2), 1);
  CHECK(a.plus == Rational::parse("11/8"));
  CHECK(a.minus == Rational::parse("1/8"));
  auto b = jcr::adjacent_pair_fractions(Rational::parse("28/9"), Rational(3), 1);
  CHECK(b.plus == Rational::parse("7/4"));
  CHECK(b.minus == Rational::parse("1/2"));
  for (long rho = -3; rho <= 3; ++rho) {
    auto r = jcr::adjacent_pair_fractions(Rational(0), Rational(rho), 1);
    CHECK_FALSE(r.plus.has_value());
    CHECK_FALSE(r.minus.has_value());
  }
  CHECK_THROWS_AS(jcr::adjacent_pair_fractions(Rational(-1), Rational(0), 1), jcr::Error);
}

TEST_CASE("resonance obstruction") {
  CHECK(jcr::resonance_obstruction(1).holds());
  CHECK(jcr::resonance_obstruction(1).product == 2);
  CHECK(jcr::resonance_obstruction(4).holds());
  for (std::uint64_t n = 1; n <= 2000; ++n) CHECK(jcr::resonance_obstruction(n).holds());
  CHECK_FALSE(jcr::resonance_batch(1'000'000, 4).has_value());
  CHECK_THROWS_AS(jcr::resonance_obstruction(0), jcr::Error);
}

TEST_CASE("resonant pairs never revive") {
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
  for (std::uint64_t n = 1; n <= 200; ++n) {
    Rational beta{Integer(num(rng)), Integer(den(rng))};
    auto spec = jcr::pair_spectrum(n, Surd(0), Surd(beta));
    CHECK_FALSE(jcr::revival_certificate(spec.energies()).has_value());
  }
}

TEST_CASE("certificate soundness and minimality for the worked example") {
  jcr::ModelParams p{Surd::parse("2*sqrt(7)/3"), Surd::parse("2 - 2*sqrt(7)/3"), 1.0};
  auto c = jcr::revival_certificate(jcr::pair_spectrum(1, p.alpha, p.beta).energies());
  REQUIRE(c.has_value());
  const double at_t = jcr::propagator_identity_distance(1, c->period, p);
  CHECK(at_t <= 1e-6);
  auto sweep = jcr::fidelity_sweep(1, c->period, p, 12345, 100);
  CHECK(sweep.min_fidelity >= 1 - 1e-6);
  // theta frozen from a one-time oracle scan (min interior distance 0.46693).
  const double theta = 0.4;
  for (int k = 1; k <= 99; ++k) {
    double d = jcr::propagator_identity_distance(1, k * c->period / 100, p);
    CHECK(d > theta);
    CHECK(d >= 1e3 * at_t);
  }
}

TEST_CASE("fidelity sweep is deterministic across worker counts") {
  jcr::ModelParams p{Surd::parse("2*sqrt(7)/3"), Surd::parse("2 - 2*sqrt(7)/3"), 1.0};
  auto a = jcr::fidelity_sweep(1, 3.3, p, 99, 64, 1);
  auto b = jcr::fidelity_sweep(1, 3.3, p, 99, 64, 5);
  CHECK(a.min_fidelity == b.min_fidelity);
  CHECK(a.max_norm_error == b.max_norm_error);
  CHECK(a.min_fidelity < 0.99);
}
