#include "qukit/sampling.hpp"

#include <cmath>

namespace qukit {

cdouble Rng::gaussian() {
    const double re = normal_(engine_);
    const double im = normal_(engine_);
    return cdouble{re, im};
}

double Rng::uniform() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
}

Rng sample_rng(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 over seed xor a spread of the index; decorrelates streams
    // without any cross-sample state.
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return Rng(z);
}

StateVector random_state(int n_sites, int local_dim, Rng& rng) {
    StateVector psi(n_sites, local_dim);
    for (auto& a : psi.amps) a = rng.gaussian();
    return normalize(psi);
}

SymStateCompressed random_symmetric(int n_sites, int local_dim, Rng& rng) {
    const auto dim = symmetric_dimension(n_sites, local_dim);
    Eigen::VectorXcd coeffs(static_cast<Eigen::Index>(dim));
    double norm_sq = 0.0;
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
        coeffs(i) = rng.gaussian();
        norm_sq += std::norm(coeffs(i));
    }
    coeffs /= std::sqrt(norm_sq);
    return from_orthonormal(n_sites, local_dim, coeffs);
}

StateVector random_sperp_state(int n_sites, int local_dim, Rng& rng) {
    const StateVector psi = random_state(n_sites, local_dim, rng);
    const SymProjection proj = project_symmetric(psi);
    const StateVector sym_part = expand(proj.sym);
    StateVector residual(n_sites, local_dim);
    for (std::size_t i = 0; i < psi.dim(); ++i)
        residual.amps[i] = psi.amps[i] - sym_part.amps[i];
    return normalize(residual);
}

ProductFactors random_factors(int n_sites, int local_dim, Rng& rng) {
    ProductFactors factors{local_dim, {}};
    factors.factors.reserve(static_cast<std::size_t>(n_sites));
    for (int n = 0; n < n_sites; ++n) {
        std::vector<cdouble> f(static_cast<std::size_t>(local_dim));
        double norm_sq = 0.0;
        for (auto& c : f) {
            c = rng.gaussian();
            norm_sq += std::norm(c);
        }
        const double scale = 1.0 / std::sqrt(norm_sq);
        for (auto& c : f) c *= scale;
        factors.factors.push_back(std::move(f));
    }
    return factors;
}

CoherentParams random_tau(int n_sites, int local_dim, Rng& rng) {
    CoherentParams params{n_sites, local_dim, {}};
    params.tau.resize(static_cast<std::size_t>(local_dim - 1));
    for (auto& t : params.tau) t = rng.gaussian();
    return params;
}

DisplacementParams random_eta(int n_sites, int local_dim, Rng& rng, double radius) {
    DisplacementParams params{n_sites, local_dim, {}};
    params.eta.resize(static_cast<std::size_t>(local_dim - 1));
    const double cap = radius / std::sqrt(static_cast<double>(local_dim - 1));
    for (auto& e : params.eta) {
        // Uniform in the disk of radius `cap`.
        const double r = cap * std::sqrt(rng.uniform());
        const double phi = 2.0 * M_PI * rng.uniform();
        e = std::polar(r, phi);
    }
    return params;
}

} // namespace qukit
