#pragma once

// Jaynes-Cummings Hamiltonian in its block-diagonal (RWA) form.
//
// Block k >= 1 acts on the two states with k excitations and reads, in units
// of the coupling y,
//
//     [ k*beta + (k-1)*alpha      sqrt(k)          ]
//     [ sqrt(k)                   k*(beta + alpha) ]
//
// with alpha = detuning / y and beta = atomic frequency / y. The vacuum
// (k = 0) is a 1x1 zero block and never takes part in pair analysis.
// Block k has level splitting sqrt(alpha^2 + 4k), so the adjacent pair
// "(n-1, n)" in the usual notation is blocks k = n and k = n + 1 here.

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "jcr/surd.hpp"

namespace jcr {

struct ModelParams {
  Surd alpha;      // detuning / y
  Surd beta;       // omega_a / y
  double y = 1.0;  // optional output scale; energies are always in units of y

  /// Non-fatal caveats: beta <= 0, or |alpha| not small next to beta.
  std::vector<std::string> physicality_warnings() const;
};

using Matrix2 = std::array<std::array<double, 2>, 2>;

struct BlockMatrix {
  int dim = 2;  // 1 for the vacuum block
  Matrix2 m{};
};

/// Floating block for excitation number k, scaled by p.y.
BlockMatrix block_matrix(std::uint64_t k, const ModelParams& p);

struct BlockSpectrum {
  std::uint64_t k = 0;
  Surd lower;
  Surd upper;
};

/// Closed-form dressed levels of block k (units of y). alpha^2 must be
/// rational, otherwise Error(unsupported).
BlockSpectrum block_spectrum_exact(std::uint64_t k, const Surd& alpha, const Surd& beta);

/// The same closed form evaluated in floating point for physical
/// (omega_a, delta, y): {lower, upper} in the units of the inputs.
std::array<double, 2> block_spectrum_numeric(std::uint64_t k, double omega_a, double delta, double y);

struct Level {
  Surd energy;
  std::uint64_t block = 0;
  bool upper = false;
};

struct PairSpectrum {
  std::uint64_t n = 0;
  std::vector<Level> levels;  // ascending, 4 entries
  bool degenerate = false;    // some two levels coincide exactly

  std::vector<Surd> energies() const;
};

/// Union of blocks n and n + 1, sorted ascending.
PairSpectrum pair_spectrum(std::uint64_t n, const Surd& alpha, const Surd& beta);

/// Basis label: (block k, index 0/1 within the block in matrix order).
struct BasisLabel {
  std::uint64_t block = 0;
  int index = 0;
  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

struct QuantumState {
  std::vector<BasisLabel> basis;
  std::vector<std::complex<double>> amplitudes;

  /// Ordered basis of blocks n and n + 1: (n,0), (n,1), (n+1,0), (n+1,1).
  static std::vector<BasisLabel> pair_basis(std::uint64_t n);
  double norm() const;
};

/// Exact per-block diagonalization: phases exp(-i E t) applied in the
/// closed-form eigenbasis (hbar = 1, t in units of 1/y).
QuantumState evolve(const QuantumState& state, double t, const ModelParams& p);

/// <psi|H|psi> with H assembled from block_matrix (units of y).
double energy_expectation(const QuantumState& state, const ModelParams& p);

/// min over phi of || U(t) - exp(i phi) I ||_2 on span(block n, block n+1).
/// Zero iff that four-dimensional subspace fully revives at t.
double propagator_identity_distance(std::uint64_t n, double t, const ModelParams& p);

/// |<a|b>|^2 for states over the same basis.
double fidelity(const QuantumState& a, const QuantumState& b);

/// Parses CSV lines "re,im" (one amplitude per line, blank lines ignored).
std::vector<std::complex<double>> parse_state_csv(std::string_view text);
std::string format_state_csv(std::span<const std::complex<double>> amplitudes);

}  // namespace jcr
