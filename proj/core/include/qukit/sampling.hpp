#pragma once

// Seeded random inputs for the verification sweeps and tests. All draws are
// i.i.d. standard complex Gaussians unless noted; every stream is derived
// from a single 64-bit seed so runs are reproducible.

#include <cstdint>
#include <random>

#include "qukit/coherent.hpp"
#include "qukit/symmetric_subspace.hpp"
#include "qukit/tensor_core.hpp"

namespace qukit {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Standard complex Gaussian: re, im ~ N(0, 1) independently.
    cdouble gaussian();

    /// Uniform in [0, 1).
    double uniform();

    std::mt19937_64& engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Independent per-sample stream: mixes the run seed with the sample index
/// so parallel workers draw identical values regardless of scheduling.
Rng sample_rng(std::uint64_t seed, std::uint64_t index);

/// Gaussian amplitudes over the full K^N space, normalized.
StateVector random_state(int n_sites, int local_dim, Rng& rng);

/// Gaussian coefficients over the orthonormal Dicke basis, normalized,
/// returned in the unnormalized-coefficient convention.
SymStateCompressed random_symmetric(int n_sites, int local_dim, Rng& rng);

/// Random full-space state minus its symmetric projection, renormalized:
/// a generic element of S-perp.
StateVector random_sperp_state(int n_sites, int local_dim, Rng& rng);

/// N random unit factors of length K.
ProductFactors random_factors(int n_sites, int local_dim, Rng& rng);

/// K-1 Gaussian tau parameters.
CoherentParams random_tau(int n_sites, int local_dim, Rng& rng);

/// K-1 eta parameters drawn uniformly in a disk sized so the total rotation
/// angle |eta|_2 stays below `radius`, keeping the displaced state safely
/// inside the tau chart.
DisplacementParams random_eta(int n_sites, int local_dim, Rng& rng,
                              double radius = 0.9);

} // namespace qukit
