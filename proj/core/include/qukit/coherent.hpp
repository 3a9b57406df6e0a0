#pragma once

// Generalized coherent states by three routes: the closed product form
// N (|1> + tau_2|2> + ... + tau_K|K>)^(x)N, the occupation-coefficient
// formula C = N prod tau_k^{i_k}, and the displacement exponential
// exp(sum eta_k E~_{k,1} - eta_k^* E~_{1,k}) |1,...,1>.

#include <vector>

#include <Eigen/Dense>

#include "qukit/symmetric_subspace.hpp"
#include "qukit/tensor_core.hpp"

namespace qukit {

/// tau parameters of the product/BCH form; tau[j] is tau_{j+2}, j = 0..K-2.
/// The normalization factor (1 + sum |tau|^2)^(-N/2) is implied.
struct CoherentParams {
    int n_sites = 0;
    int local_dim = 0;
    std::vector<cdouble> tau;
};

/// eta parameters of the displacement generator; eta[j] is eta_{j+2}.
/// Only the K-1 operators E~_{n,1} that do not annihilate |1,...,1> enter.
struct DisplacementParams {
    int n_sites = 0;
    int local_dim = 0;
    std::vector<cdouble> eta;
};

/// The normalization factor N = (1 + sum |tau_i|^2)^(-N/2).
double coherent_norm_factor(const CoherentParams& params);

/// The single-site factor (1, tau_2, ..., tau_K) / sqrt(1 + sum |tau|^2).
std::vector<cdouble> coherent_site_factor(const CoherentParams& params);

/// Full-space coherent state via the product form. Unit norm, symmetric.
/// Guarded at K^N <= 2^20.
StateVector coherent_product(const CoherentParams& params);

/// Compressed coherent state: coefficient N prod_k tau_k^{i_k} at occupation
/// (N - sum i_k, i_2, ..., i_K), in the unnormalized convention. No size
/// guard; works at any N with dim S <= 2^20.
SymStateCompressed coherent_coefficients(const CoherentParams& params);

/// Matrix of the anti-Hermitian generator sum_k (eta_k E~_{k,1} -
/// eta_k^* E~_{1,k}) restricted to S, in the orthonormal Dicke basis.
Eigen::MatrixXcd displacement_generator(const DisplacementParams& params);

/// exp(generator) |1,...,1> computed on the compressed representation:
/// the generator is anti-Hermitian on S, so the exponential comes from the
/// eigendecomposition of the Hermitian matrix -i G. Guarded at dim S <= 2^20.
SymStateCompressed coherent_displace_compressed(const DisplacementParams& params);

/// Full-space displaced state: expand(coherent_displace_compressed(params)).
/// Guarded at K^N <= 2^20.
StateVector coherent_displace(const DisplacementParams& params);

/// Numerically extracts tau from the displaced state: build the state, pull
/// one single-site factor out of it via the product-state classifier, and
/// read tau_k = a^k / a^1. Throws ChartSingularity when |a^1| < 1e-12.
CoherentParams tau_from_displacement(const DisplacementParams& params);

/// Single-site factor of a coherent state expressed in chart m: component m
/// is 1 and the tau parameters fill the slots left by swapping labels 1 and
/// m. chart = 1 reproduces coherent_site_factor up to normalization.
std::vector<cdouble> chart_factor(const CoherentParams& params, int chart);

} // namespace qukit
