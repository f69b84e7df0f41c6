#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "jcr/diophantine.hpp"
#include "jcr/error.hpp"
#include "oracles.hpp"

using jcr::Integer;
using jcr::Rational;
using jcr::Surd;

namespace {

Rational random_nonzero(std::mt19937_64& rng, long max_abs) {
  std::uniform_int_distribution<long> num(1, max_abs), den(1, max_abs), sign(0, 1);
  return Rational(Integer(sign(rng) ? num(rng) : -num(rng)), Integer(den(rng)));
}

std::vector<jcr::Chain> brute_chains(const std::vector<std::uint64_t>& ks, std::uint64_t bound) {
  std::vector<jcr::Chain> out;
  for (std::uint64_t x0 = 0; x0 <= bound; ++x0) {
    jcr::Chain c{x0};
    bool ok = true;
    for (auto k : ks) {
      bool found = false;
      for (std::uint64_t next = 0; next <= c.back(); ++next) {
        if (c.back() * c.back() - next * next == k) {
          c.push_back(next);
          found = true;
          break;
        }
      }
      if (!found) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("unit_hyperbola_point examples") {
  auto p0 = jcr::unit_hyperbola_point(Rational(0));
  CHECK(p0.x == Rational(1));
  CHECK(p0.y == Rational(0));
  auto half = jcr::unit_hyperbola_point(Rational::parse("1/2"));
  CHECK(half.x == Rational::parse("5/3"));
  CHECK(half.y == Rational::parse("4/3"));
  auto two = jcr::unit_hyperbola_point(Rational(2));
  CHECK(two.x == Rational::parse("-5/3"));
  CHECK(two.y == Rational::parse("-4/3"));
  CHECK_THROWS_AS(jcr::unit_hyperbola_point(Rational(1)), jcr::Error);
  CHECK_THROWS_AS(jcr::unit_hyperbola_point(Rational(-1)), jcr::Error);
}

TEST_CASE("unit hyperbola identity and secant line") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20000; ++i) {
    Rational t = random_nonzero(rng, 1'000'000);
    if (abs(t) == Rational(1)) continue;
    auto p = jcr::unit_hyperbola_point(t);
    CHECK(p.x * p.x - p.y * p.y == Rational(1));
    CHECK(p.x - Rational(1) == t * p.y);
  }
}

TEST_CASE("synthesize_params worked example") {
  auto s = jcr::synthesize_params(Rational::parse("1/2"), Rational(2), 1);
  CHECK(s.alpha_squared == Rational::parse("28/9"));
  CHECK(s.alpha == Surd::parse("2*sqrt(7)/3"));
  CHECK(s.beta == Surd::parse("2 - 2*sqrt(7)/3"));
  CHECK(s.fractions.plus == Rational::parse("11/8"));
  CHECK(s.fractions.minus == Rational::parse("1/8"));
  REQUIRE(s.certificate.has_value());
  CHECK(s.certificate->k1 == 5);
  CHECK(s.certificate->delta == Surd(Rational::parse("1/3")));
  CHECK(s.certificate->period == doctest::Approx(6 * std::numbers::pi));
  CHECK_FALSE(s.spectrum.degenerate);
  CHECK(s.record().find("alpha2=28/9\n") != std::string::npos);

  auto deg = jcr::synthesize_params(Rational::parse("1/2"), Rational(3), 1);
  CHECK(deg.fractions.plus == Rational::parse("7/4"));
  CHECK(deg.fractions.minus == Rational::parse("1/2"));
  CHECK(deg.spectrum.degenerate);
  CHECK(deg.certificate.has_value());

  try {
    jcr::synthesize_params(Rational(0), Rational(5), 1);
    FAIL("expected alpha-not-real");
  } catch (const jcr::Error& e) {
    CHECK(e.code() == jcr::ErrorCode::domain);
  }
  CHECK_THROWS_AS(jcr::synthesize_params(Rational(1), Rational(5), 1), jcr::Error);
}

TEST_CASE("synthesize_params round trip") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(1, 200), den(1, 200), nn(1, 6);
  int produced = 0;
  for (int i = 0; i < 3000 && produced < 300; ++i) {
    Rational t{Integer(num(rng)), Integer(den(rng))};
    if (t == Rational(1)) continue;
    std::uint64_t n = static_cast<std::uint64_t>(nn(rng));
    auto p = jcr::unit_hyperbola_point(t);
    if (p.y * p.y < Rational(static_cast<long>(n))) continue;
    Rational rho{Integer(num(rng)), Integer(den(rng))};
    auto s = jcr::synthesize_params(t, rho, n);
    ++produced;
    const Rational nr{static_cast<long>(n)};
    CHECK(jcr::rational_sqrt(s.alpha_squared + Rational(4) * nr) == Rational(2) * abs(s.point.y));
    CHECK(jcr::rational_sqrt(s.alpha_squared + Rational(4) * (nr + Rational(1))) == Rational(2) * abs(s.point.x));
    CHECK(s.fractions.plus.has_value());
    CHECK(s.fractions.minus.has_value());
    CHECK(s.certificate.has_value());
    CHECK(s.alpha + s.beta == Surd(rho));
  }
  CHECK(produced >= 100);
}

TEST_CASE("unit hyperbola points are dense in Y") {
  // Any target window of width 1e-3 above sqrt(n) is hit by t with denominator 1e6.
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 3; ++n) {
    std::uniform_real_distribution<double> lo(std::sqrt(static_cast<double>(n)), 10.0);
    for (int trial = 0; trial < 20; ++trial) {
      double a = lo(rng), b = a + 1e-3;
      // Y(t) = 2t/(1-t^2) is increasing on (0,1); bisection in floating point,
      // then confirm exactly on the grid t = m/10^6.
      double tl = 0, th = 1;
      for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (tl + th);
        (2 * mid / (1 - mid * mid) < 0.5 * (a + b) ? tl : th) = mid;
      }
      bool found = false;
      long m0 = std::lround(tl * 1e6);
      for (long m = std::max(1L, m0 - 3); m <= std::min(999999L, m0 + 3) && !found; ++m) {
        auto p = jcr::unit_hyperbola_point(Rational(Integer(m), Integer(1000000)));
        double y = p.y.to_double();
        found = y > a && y < b;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("solve_difference_rational") {
  auto a = jcr::solve_difference_rational(Rational(3), Rational(1));
  CHECK(a.x == Rational(2));
  CHECK(a.y == Rational(1));
  auto b = jcr::solve_difference_rational(Rational(1), Rational(1));
  CHECK(b.x == Rational(1));
  CHECK(b.y == Rational(0));
  auto c = jcr::solve_difference_rational(Rational(2), Rational(1));
  CHECK(c.x == Rational::parse("3/2"));
  CHECK(c.y == Rational::parse("1/2"));
  CHECK_THROWS_AS(jcr::solve_difference_rational(Rational(0), Rational(1)), jcr::Error);
  CHECK_THROWS_AS(jcr::solve_difference_rational(Rational(1), Rational(0)), jcr::Error);

  std::mt19937_64 rng(4);
  for (int i = 0; i < 10000; ++i) {
    Rational k = random_nonzero(rng, 100000), s = random_nonzero(rng, 100000);
    auto p = jcr::solve_difference_rational(k, s);
    CHECK(p.x * p.x - p.y * p.y == k);
  }
}

TEST_CASE("solve_difference_integer") {
  CHECK(jcr::solve_difference_integer(5) == std::vector<jcr::IntegerPair>{{3, 2}});
  CHECK(jcr::solve_difference_integer(2).empty());
  CHECK(jcr::solve_difference_integer(64) == std::vector<jcr::IntegerPair>{{17, 15}, {10, 6}, {8, 0}});
  CHECK(jcr::solve_difference_integer(1) == std::vector<jcr::IntegerPair>{{1, 0}});
  CHECK_THROWS_AS(jcr::solve_difference_integer(0), jcr::Error);
  // K = 2 has no solutions with X <= 100.
  for (std::uint64_t x = 0; x <= 100; ++x)
    for (std::uint64_t y = 0; y <= x; ++y) CHECK(x * x - y * y != 2);

  for (std::uint64_t k = 1; k <= 500; ++k) {
    std::vector<jcr::IntegerPair> brute;
    for (std::uint64_t x = k; x + 1 > 0 && x <= k; --x)  // X <= K always
      for (std::uint64_t y = 0; y <= x; ++y)
        if (x * x - y * y == k) brute.push_back({x, y});
    CHECK(jcr::solve_difference_integer(k) == brute);
    CHECK(brute.empty() == (k % 4 == 2));
  }
}

TEST_CASE("chain_solver") {
  std::vector<std::uint64_t> ks{64, 144};
  auto chains = jcr::chain_solver(ks, 50);
  CHECK(chains == std::vector<jcr::Chain>{{17, 15, 9}});
  std::vector<std::uint64_t> one{1}, three{3};
  CHECK(jcr::chain_solver(one, 10) == std::vector<jcr::Chain>{{1, 0}});
  CHECK(jcr::chain_solver(three, 10) == std::vector<jcr::Chain>{{2, 1}});
  std::vector<std::uint64_t> none;
  CHECK_THROWS_AS(jcr::chain_solver(none, 10), jcr::Error);
  CHECK(jcr::format_chains_csv(chains) == "17,15,9\n");

  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::uint64_t> kdist(1, 200), len(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::uint64_t> k(len(rng));
    for (auto& v : k) v = kdist(rng);
    if (trial % 3 == 0) k = {kdist(rng) * 4, 144};  // bias toward solvable systems
    for (unsigned workers : {1u, 4u}) {
      auto got = jcr::chain_solver(k, 100, workers);
      CHECK(got == brute_chains(k, 100));
      for (const auto& c : got)
        for (std::size_t j = 1; j < c.size(); ++j) CHECK(c[j - 1] * c[j - 1] - c[j] * c[j] == k[j - 1]);
    }
  }
}

TEST_CASE("pythagorean_middles") {
  // Independent brute force: hypotenuse by a < Y, leg by c up to 2Y^2 + 1.
  auto brute = [](std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t y = 1; y <= bound; ++y) {
      bool hyp = false, leg = false;
      for (std::uint64_t a = 1; a < y && !hyp; ++a) hyp = oracle::is_square(y * y - a * a);
      for (std::uint64_t c = y + 1; c <= 2 * y * y + 1 && !leg; ++c) leg = oracle::is_square(c * c - y * y);
      if (hyp && leg) out.push_back(y);
    }
    return out;
  };
  auto m50 = jcr::pythagorean_middles(50);
  CHECK(m50 == std::vector<std::uint64_t>{5, 10, 13, 15, 17, 20, 25, 26, 29, 30, 34, 35, 37, 39, 40, 41, 45, 50});
  for (std::uint64_t y : {15, 20, 30, 40}) CHECK(std::find(m50.begin(), m50.end(), y) != m50.end());
  CHECK(jcr::pythagorean_middles(10) == std::vector<std::uint64_t>{5, 10});
  CHECK(jcr::pythagorean_middles(120) == brute(120));
  CHECK(jcr::pythagorean_middles(4).empty());
}
