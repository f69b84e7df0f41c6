#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "jcr/jc_model.hpp"

namespace jcr {

/// Unit vector with independent standard-normal real and imaginary parts
/// (Haar-distributed on the sphere). Box-Muller over mt19937_64 so the
/// stream is identical across standard libraries.
QuantumState random_state(const std::vector<BasisLabel>& basis, std::mt19937_64& rng);

struct FidelitySweep {
  std::uint64_t states = 0;
  double min_fidelity = 1.0;
  double max_norm_error = 0.0;
};

/// Draws `count` random states on the pair span of blocks n, n+1 from
/// `seed`, evolves each to t and records the worst return fidelity.
FidelitySweep fidelity_sweep(std::uint64_t n, double t, const ModelParams& p, std::uint64_t seed,
                             std::uint64_t count, unsigned workers = 1);

}  // namespace jcr
