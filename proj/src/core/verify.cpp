#include "jcr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jcr/parallel.hpp"

namespace jcr {

namespace {

double uniform_open(std::mt19937_64& rng) {
  // (0, 1) with 53 random bits
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

QuantumState random_state(const std::vector<BasisLabel>& basis, std::mt19937_64& rng) {
  QuantumState s;
  s.basis = basis;
  s.amplitudes.reserve(basis.size());
  double norm2 = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    double r = std::sqrt(-2.0 * std::log(uniform_open(rng)));
    double phi = 2.0 * std::numbers::pi * uniform_open(rng);
    std::complex<double> a(r * std::cos(phi), r * std::sin(phi));
    norm2 += std::norm(a);
    s.amplitudes.push_back(a);
  }
  for (auto& a : s.amplitudes) a /= std::sqrt(norm2);
  return s;
}

FidelitySweep fidelity_sweep(std::uint64_t n, double t, const ModelParams& p, std::uint64_t seed,
                             std::uint64_t count, unsigned workers) {
  std::mt19937_64 rng(seed);
  const auto basis = QuantumState::pair_basis(n);
  std::vector<QuantumState> states;
  states.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) states.push_back(random_state(basis, rng));

  std::vector<double> fid(count), norm_err(count);
  parallel_chunks(count, workers, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      QuantumState later = evolve(states[i], t, p);
      fid[i] = fidelity(states[i], later);
      norm_err[i] = std::abs(later.norm() - 1.0);
    }
  });
  FidelitySweep out;
  out.states = count;
  if (count) {
    out.min_fidelity = *std::min_element(fid.begin(), fid.end());
    out.max_norm_error = *std::max_element(norm_err.begin(), norm_err.end());
  }
  return out;
}

}  // namespace jcr
