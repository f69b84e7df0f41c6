#include "jcr/jc_model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "jcr/error.hpp"

namespace jcr {

namespace {

constexpr long double kTwoPi = 2.0L * std::numbers::pi_v<long double>;

// Phase -E t reduced to [0, 2 pi).
long double reduced_phase(long double energy, double t) {
  long double phase = std::fmod(-energy * static_cast<long double>(t), kTwoPi);
  if (phase < 0) phase += kTwoPi;
  return phase;
}

struct BlockEigen {
  long double lower = 0, upper = 0;  // energies, units of y
  double c = 1, s = 0;               // upper eigenvector (c, s), lower (-s, c)
};

BlockEigen block_eigen(std::uint64_t k, const ModelParams& p) {
  BlockEigen e;
  if (k == 0) return e;
  BlockSpectrum spec = block_spectrum_exact(k, p.alpha, p.beta);
  e.lower = spec.lower.to_long_double();
  e.upper = spec.upper.to_long_double();
  const double kd = static_cast<double>(k);
  const double a = p.alpha.to_double();
  // a - d of the block is -alpha; off-diagonal sqrt(k).
  double theta = 0.5 * std::atan2(2.0 * std::sqrt(kd), -a);
  e.c = std::cos(theta);
  e.s = std::sin(theta);
  return e;
}

}  // namespace

std::vector<std::string> ModelParams::physicality_warnings() const {
  std::vector<std::string> out;
  double b = beta.to_double(), a = alpha.to_double();
  if (b <= 0) out.push_back("beta <= 0: atomic frequency is not positive");
  if (std::abs(a) > 0.1 * std::abs(b))
    out.push_back("|alpha| > beta/10: detuning is not small against the atomic frequency (RWA regime)");
  if (!(y > 0)) out.push_back("y must be positive");
  return out;
}

BlockMatrix block_matrix(std::uint64_t k, const ModelParams& p) {
  BlockMatrix out;
  if (k == 0) {
    out.dim = 1;
    return out;
  }
  const double kd = static_cast<double>(k);
  const double wa = p.beta.to_double() * p.y;
  const double delta = p.alpha.to_double() * p.y;
  const double off = std::sqrt(kd) * p.y;
  out.m = {{{kd * wa + (kd - 1) * delta, off}, {off, kd * (wa + delta)}}};
  return out;
}

BlockSpectrum block_spectrum_exact(std::uint64_t k, const Surd& alpha, const Surd& beta) {
  if (k == 0) throw Error(ErrorCode::domain, "block index must be >= 1 (k = 0 is the 1x1 vacuum)");
  auto alpha_sq = (alpha * alpha).as_rational();
  if (!alpha_sq)
    throw Error(ErrorCode::unsupported, "alpha^2 is not rational for alpha = " + alpha.str());
  Rational kr{static_cast<long>(k)};
  // Half the trace: k*beta + (k - 1/2)*alpha.
  Surd center = beta * kr + alpha * (kr - Rational(1, 2));
  Surd half_gap = Surd::sqrt_of(*alpha_sq + Rational(4) * kr) * Rational(1, 2);
  return {k, center - half_gap, center + half_gap};
}

std::array<double, 2> block_spectrum_numeric(std::uint64_t k, double omega_a, double delta, double y) {
  if (k == 0) throw Error(ErrorCode::domain, "block index must be >= 1 (k = 0 is the 1x1 vacuum)");
  const double kd = static_cast<double>(k);
  const double center = 2 * omega_a + delta + 2 * (kd - 1) * (omega_a + delta);
  const double root = std::sqrt(delta * delta + 4 * kd * y * y);
  return {0.5 * (center - root), 0.5 * (center + root)};
}

std::vector<Surd> PairSpectrum::energies() const {
  std::vector<Surd> out;
  out.reserve(levels.size());
  for (const auto& l : levels) out.push_back(l.energy);
  return out;
}

PairSpectrum pair_spectrum(std::uint64_t n, const Surd& alpha, const Surd& beta) {
  if (n == 0) throw Error(ErrorCode::domain, "pair index n must be >= 1");
  PairSpectrum out;
  out.n = n;
  for (std::uint64_t k : {n, n + 1}) {
    auto b = block_spectrum_exact(k, alpha, beta);
    out.levels.push_back({b.lower, k, false});
    out.levels.push_back({b.upper, k, true});
  }
  std::stable_sort(out.levels.begin(), out.levels.end(),
                   [](const Level& a, const Level& b) { return compare(a.energy, b.energy) < 0; });
  for (std::size_t i = 1; i < out.levels.size(); ++i)
    if (out.levels[i].energy == out.levels[i - 1].energy) out.degenerate = true;
  return out;
}

std::vector<BasisLabel> QuantumState::pair_basis(std::uint64_t n) {
  return {{n, 0}, {n, 1}, {n + 1, 0}, {n + 1, 1}};
}

double QuantumState::norm() const {
  double acc = 0;
  for (const auto& a : amplitudes) acc += std::norm(a);
  return std::sqrt(acc);
}

QuantumState evolve(const QuantumState& state, double t, const ModelParams& p) {
  if (state.basis.size() != state.amplitudes.size())
    throw Error(ErrorCode::usage, "state basis and amplitude counts differ");
  // block -> positions of index 0 and 1 in the state vector
  std::map<std::uint64_t, std::array<int, 2>> slots;
  for (std::size_t i = 0; i < state.basis.size(); ++i) {
    const auto& label = state.basis[i];
    if (label.index < 0 || label.index > 1 || (label.block == 0 && label.index != 0))
      throw Error(ErrorCode::usage, "invalid basis label");
    auto [it, inserted] = slots.try_emplace(label.block, std::array<int, 2>{-1, -1});
    if (it->second[label.index] != -1) throw Error(ErrorCode::usage, "duplicate basis label");
    it->second[label.index] = static_cast<int>(i);
  }

  QuantumState out = state;
  for (const auto& [k, pos] : slots) {
    if (k == 0) continue;  // vacuum energy is zero
    if (pos[0] < 0 || pos[1] < 0)
      throw Error(ErrorCode::usage, "block " + std::to_string(k) + " is only partially represented");
    BlockEigen e = block_eigen(k, p);
    const std::complex<double> a0 = state.amplitudes[pos[0]], a1 = state.amplitudes[pos[1]];
    // Coordinates in the eigenbasis.
    std::complex<double> up = e.c * a0 + e.s * a1;
    std::complex<double> lo = -e.s * a0 + e.c * a1;
    up *= std::polar(1.0, static_cast<double>(reduced_phase(e.upper, t)));
    lo *= std::polar(1.0, static_cast<double>(reduced_phase(e.lower, t)));
    out.amplitudes[pos[0]] = e.c * up - e.s * lo;
    out.amplitudes[pos[1]] = e.s * up + e.c * lo;
  }
  return out;
}

double energy_expectation(const QuantumState& state, const ModelParams& p) {
  ModelParams unit = p;
  unit.y = 1.0;
  std::map<std::uint64_t, std::array<int, 2>> slots;
  for (std::size_t i = 0; i < state.basis.size(); ++i) {
    auto [it, inserted] = slots.try_emplace(state.basis[i].block, std::array<int, 2>{-1, -1});
    it->second[state.basis[i].index] = static_cast<int>(i);
  }
  double acc = 0;
  for (const auto& [k, pos] : slots) {
    if (k == 0) continue;
    auto m = block_matrix(k, unit).m;
    std::complex<double> a[2] = {pos[0] >= 0 ? state.amplitudes[pos[0]] : 0.0,
                                 pos[1] >= 0 ? state.amplitudes[pos[1]] : 0.0};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) acc += (std::conj(a[i]) * m[i][j] * a[j]).real();
  }
  return acc;
}

double propagator_identity_distance(std::uint64_t n, double t, const ModelParams& p) {
  std::vector<long double> phases;
  for (std::uint64_t k : {n, n + 1}) {
    BlockSpectrum b = block_spectrum_exact(k, p.alpha, p.beta);
    phases.push_back(reduced_phase(b.lower.to_long_double(), t));
    phases.push_back(reduced_phase(b.upper.to_long_double(), t));
  }
  std::sort(phases.begin(), phases.end());
  // Smallest arc covering every eigenphase is 2 pi minus the largest gap.
  long double largest_gap = phases.front() + kTwoPi - phases.back();
  for (std::size_t i = 1; i < phases.size(); ++i) largest_gap = std::max(largest_gap, phases[i] - phases[i - 1]);
  long double arc = kTwoPi - largest_gap;
  return static_cast<double>(2.0L * std::sin(arc / 4.0L));
}

double fidelity(const QuantumState& a, const QuantumState& b) {
  if (a.amplitudes.size() != b.amplitudes.size()) throw Error(ErrorCode::usage, "fidelity: dimension mismatch");
  std::complex<double> overlap = 0;
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) overlap += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  return std::norm(overlap);
}

std::vector<std::complex<double>> parse_state_csv(std::string_view text) {
  std::vector<std::complex<double>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::usage, "state line without ',': " + line);
    try {
      std::size_t used_re = 0, used_im = 0;
      std::string re_text = line.substr(0, comma), im_text = line.substr(comma + 1);
      double re = std::stod(re_text, &used_re);
      double im = std::stod(im_text, &used_im);
      if (re_text.find_first_not_of(" \t\r", used_re) != std::string::npos ||
          im_text.find_first_not_of(" \t\r", used_im) != std::string::npos)
        throw std::invalid_argument("trailing characters");
      out.emplace_back(re, im);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::usage, "bad state line: " + line);
    }
  }
  return out;
}

std::string format_state_csv(std::span<const std::complex<double>> amplitudes) {
  std::string out;
  char buf[80];
  for (const auto& a : amplitudes) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", a.real() + 0.0, a.imag() + 0.0);  // no "-0"
    out += buf;
  }
  return out;
}

}  // namespace jcr
