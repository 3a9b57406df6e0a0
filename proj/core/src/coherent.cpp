#include "qukit/coherent.hpp"

#include <cmath>
#include <string>

#include "qukit/entanglement.hpp"

namespace qukit {

namespace {

void validate_params(int n_sites, int local_dim, const std::vector<cdouble>& values,
                     const char* name) {
    if (n_sites < 1 || local_dim < 2)
        throw ShapeError("coherent params: need N >= 1, K >= 2");
    if (static_cast<int>(values.size()) != local_dim - 1)
        throw ShapeError(std::string(name) + " must have K-1 entries, got " +
                         std::to_string(values.size()));
    for (const auto& v : values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw DegenerateInput(std::string(name) + " has a non-finite entry");
}

} // namespace

double coherent_norm_factor(const CoherentParams& params) {
    validate_params(params.n_sites, params.local_dim, params.tau, "tau");
    double s = 1.0;
    for (const auto& t : params.tau) s += std::norm(t);
    return std::pow(s, -0.5 * params.n_sites);
}

std::vector<cdouble> coherent_site_factor(const CoherentParams& params) {
    validate_params(params.n_sites, params.local_dim, params.tau, "tau");
    double s = 1.0;
    for (const auto& t : params.tau) s += std::norm(t);
    const double scale = 1.0 / std::sqrt(s);
    std::vector<cdouble> factor(static_cast<std::size_t>(params.local_dim));
    factor[0] = cdouble{scale, 0.0};
    for (int k = 2; k <= params.local_dim; ++k)
        factor[static_cast<std::size_t>(k - 1)] =
            params.tau[static_cast<std::size_t>(k - 2)] * scale;
    return factor;
}

StateVector coherent_product(const CoherentParams& params) {
    if (pow_dim(params.local_dim, params.n_sites) > kFullSpaceGuard)
        throw SizeError("coherent_product: K^N exceeds the full-space guard");
    ProductFactors factors{params.local_dim, {}};
    factors.factors.assign(static_cast<std::size_t>(params.n_sites),
                           coherent_site_factor(params));
    return make_product_state(factors);
}

SymStateCompressed coherent_coefficients(const CoherentParams& params) {
    validate_params(params.n_sites, params.local_dim, params.tau, "tau");
    const auto occs = enumerate_occupations(params.n_sites, params.local_dim);
    const double norm_factor = coherent_norm_factor(params);

    SymStateCompressed sym{params.n_sites, params.local_dim, {}};
    sym.coeffs.resize(occs.size());
    for (std::size_t r = 0; r < occs.size(); ++r) {
        cdouble c{norm_factor, 0.0};
        for (int k = 2; k <= params.local_dim; ++k) {
            const int reps = occs[r].counts[static_cast<std::size_t>(k - 1)];
            for (int t = 0; t < reps; ++t)
                c *= params.tau[static_cast<std::size_t>(k - 2)];
        }
        sym.coeffs[r] = c;
    }
    return sym;
}

Eigen::MatrixXcd displacement_generator(const DisplacementParams& params) {
    validate_params(params.n_sites, params.local_dim, params.eta, "eta");
    const auto dim = symmetric_dimension(params.n_sites, params.local_dim);
    if (dim > kFullSpaceGuard)
        throw SizeError("displacement_generator: dim S exceeds the guard");

    // R = sum_k eta_k E~_{k,1} on S; the generator is R - R^dagger, which is
    // anti-Hermitian entry by entry, not just up to rounding.
    Eigen::MatrixXcd raising =
        Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (int k = 2; k <= params.local_dim; ++k) {
        const cdouble eta = params.eta[static_cast<std::size_t>(k - 2)];
        if (eta == cdouble{0.0, 0.0}) continue;
        raising += eta * collective_compressed(ladder(k, 1, params.local_dim),
                                               params.n_sites);
    }
    return raising - raising.adjoint().eval();
}

SymStateCompressed coherent_displace_compressed(const DisplacementParams& params) {
    const Eigen::MatrixXcd gen = displacement_generator(params);

    // gen is anti-Hermitian, so -i gen is Hermitian and the exponential
    // follows from its eigendecomposition: exp(gen) = V exp(i diag) V^dagger.
    const cdouble minus_i{0.0, -1.0};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(minus_i * gen);
    if (solver.info() != Eigen::Success)
        throw Error("displacement exponential: eigensolver failed");

    Eigen::VectorXcd lowest = Eigen::VectorXcd::Zero(gen.rows());
    lowest(0) = cdouble{1.0, 0.0}; // |1,...,1> is rank 0 in canonical order
    Eigen::VectorXcd rotated = solver.eigenvectors().adjoint() * lowest;
    for (Eigen::Index i = 0; i < rotated.size(); ++i)
        rotated(i) *= std::polar(1.0, solver.eigenvalues()(i));
    const Eigen::VectorXcd displaced = solver.eigenvectors() * rotated;
    return from_orthonormal(params.n_sites, params.local_dim, displaced);
}

StateVector coherent_displace(const DisplacementParams& params) {
    if (pow_dim(params.local_dim, params.n_sites) > kFullSpaceGuard)
        throw SizeError("coherent_displace: K^N exceeds the full-space guard");
    return expand(coherent_displace_compressed(params));
}

CoherentParams tau_from_displacement(const DisplacementParams& params) {
    const StateVector displaced = coherent_displace(params);
    const auto factor = extract_site_factor(displaced, 1);
    if (std::abs(factor[0]) < 1e-12)
        throw ChartSingularity("tau_from_displacement: |1>-amplitude below 1e-12");

    CoherentParams out{params.n_sites, params.local_dim, {}};
    out.tau.resize(static_cast<std::size_t>(params.local_dim - 1));
    for (int k = 2; k <= params.local_dim; ++k)
        out.tau[static_cast<std::size_t>(k - 2)] =
            factor[static_cast<std::size_t>(k - 1)] / factor[0];

    if (fidelity(coherent_product(out), displaced) < 1.0 - 1e-10)
        throw Error("tau_from_displacement: extracted tau does not reproduce the state");
    return out;
}

std::vector<cdouble> chart_factor(const CoherentParams& params, int chart) {
    if (chart < 1 || chart > params.local_dim)
        throw IndexError("chart label outside 1..K");
    auto factor = coherent_site_factor(params);
    std::swap(factor[0], factor[static_cast<std::size_t>(chart - 1)]);
    return factor;
}

} // namespace qukit
