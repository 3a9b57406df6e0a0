#pragma once

// Dense full-space representation of N-partite quKit states: K^N complex
// amplitudes over the product basis |k_1>|k_2>...|k_N>, k in 1..K, plus the
// elementary operations everything else builds on (indexing, products,
// inner products, single-site decomposition).

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qukit/errors.hpp"

namespace qukit {

using cdouble = std::complex<double>;

/// K^N as a checked std::size_t.
std::size_t pow_dim(int local_dim, int n_sites);

/// Largest full-space dimension the expansion paths will materialize.
inline constexpr std::size_t kFullSpaceGuard = std::size_t{1} << 20;

/// Largest full-space dimension the dense/SVD test oracles accept.
inline constexpr std::size_t kDenseOracleGuard = 4096;

/// Pure state of n_sites quKits, each of dimension local_dim >= 2.
///
/// amps holds the K^N amplitudes in basis_index order: site 1 is the most
/// significant digit, so printed kets read left to right. Treated as
/// immutable; every operation returns a fresh state.
struct StateVector {
    int n_sites = 0;
    int local_dim = 0;
    std::vector<cdouble> amps;

    StateVector() = default;

    /// Zero state of the given shape.
    StateVector(int n_sites, int local_dim);

    /// Wraps existing amplitudes; length must be exactly K^N.
    StateVector(int n_sites, int local_dim, std::vector<cdouble> amplitudes);

    std::size_t dim() const { return amps.size(); }
    double norm_sq() const;
    double norm() const;
};

/// N single-site factor vectors a_n, each of length K. A state is a product
/// state iff it can be written as the tensor product of such factors; this
/// type is the certificate returned by the classifier.
struct ProductFactors {
    int local_dim = 0;
    std::vector<std::vector<cdouble>> factors;

    int n_sites() const { return static_cast<int>(factors.size()); }
};

/// The K partial vectors u_n^k of the split psi = sum_k |k>_n (x) u_n^k at
/// one site. Partials live in C^{K^(N-1)} and are not normalized.
struct SiteDecomposition {
    int site = 0; // 1-based
    std::vector<std::vector<cdouble>> partials;
};

/// Flat index of the basis word (k_1,...,k_N), labels 1..K, site 1 most
/// significant: index = sum_n (k_n - 1) K^(N-n).
std::size_t basis_index(std::span<const int> word, int local_dim);

/// Inverse of basis_index.
std::vector<int> basis_word(std::size_t index, int n_sites, int local_dim);

/// Tensor product of the given factors. Amplitude at word (k_1..k_N) is
/// prod_n a_n^{k_n}; unit norm if every factor is.
StateVector make_product_state(const ProductFactors& factors);

/// Hermitian inner product <a|b>, conjugate-linear in the first argument.
cdouble inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|^2 / (|a|^2 |b|^2); global-phase-free overlap in [0, 1].
double fidelity(const StateVector& a, const StateVector& b);

/// Split psi = sum_k |k>_site (x) u^k. Exact rearrangement, no arithmetic.
SiteDecomposition site_decompose(const StateVector& psi, int site);

/// psi / |psi|. Throws DegenerateInput on the zero vector.
StateVector normalize(const StateVector& psi);

} // namespace qukit
