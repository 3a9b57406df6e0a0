#pragma once

// The symmetric (Dicke) subspace S of the K^N product space: occupation
// vectors, symmetrized basis states, the binom(N+K-1, N)-dimensional
// compressed representation, the orthogonal projector onto S, and the
// one-site recursion that splits a Dicke state across any single site.

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qukit/operators.hpp"
#include "qukit/tensor_core.hpp"

namespace qukit {

/// Letter counts (n_1,...,n_K) of a basis word: n_k >= 0, sum n_k = N.
struct Occupation {
    std::vector<int> counts;

    int local_dim() const { return static_cast<int>(counts.size()); }
    int n_sites() const;

    bool operator==(const Occupation& other) const = default;
};

std::uint64_t binomial(int n, int k);
std::uint64_t factorial(int n);

/// N! / (n_1! ... n_K!): the number of distinct words with these counts,
/// and the squared norm of the unnormalized Dicke state.
std::uint64_t multinomial(const Occupation& occ);

/// dim S = binom(N+K-1, N).
std::uint64_t symmetric_dimension(int n_sites, int local_dim);

/// All occupations of N sites over K labels in canonical order:
/// lexicographically decreasing on (n_1,...,n_K), so (N,0,...,0) comes first.
std::vector<Occupation> enumerate_occupations(int n_sites, int local_dim);

/// Position of occ in enumerate_occupations order, computed combinatorially.
std::size_t occupation_rank(const Occupation& occ);

/// A symmetric state as coefficients over the occupation basis, stored in
/// canonical enumeration order.
///
/// Coefficients use the unnormalized convention throughout: the state is
/// sum_occ coeffs[rank(occ)] * dicke_unnormalized(occ), and unit norm means
/// sum |C|^2 N!/(n_1!...n_K!) = 1. Multiply a coefficient by
/// sqrt(N!/prod n_k!) to convert it to the orthonormal Dicke basis.
struct SymStateCompressed {
    int n_sites = 0;
    int local_dim = 0;
    std::vector<cdouble> coeffs;

    std::size_t dim() const { return coeffs.size(); }
    /// Norm under the unnormalized-coefficient convention.
    double norm() const;
};

/// Sum of the distinct permutations of the word 1^n_1 2^n_2 ... K^n_K.
/// Amplitudes are exactly 0 or 1; squared norm is N!/(n_1!...n_K!).
StateVector dicke_unnormalized(const Occupation& occ);

/// The unit-norm Dicke state: dicke_unnormalized scaled by
/// (n_1!...n_K!/N!)^(1/2).
StateVector dicke_normalized(const Occupation& occ);

/// The same state built by the ladder route: powers of the collective
/// raising operators E~_{k,1} applied to |1,...,1>, rescaled to unit norm.
/// Agrees with dicke_normalized; guarded at K^N <= 2^20.
StateVector dicke_via_ladders(const Occupation& occ);

/// Conversions between the unnormalized-coefficient convention and the
/// orthonormal Dicke basis (coefficient_k * sqrt(multinomial_k)).
Eigen::VectorXcd to_orthonormal(const SymStateCompressed& sym);
SymStateCompressed from_orthonormal(int n_sites, int local_dim,
                                    const Eigen::VectorXcd& coeffs);

struct SymProjection {
    SymStateCompressed sym;
    double residual_norm = 0.0;
};

/// Orthogonal projection of psi onto S. sym holds the coefficients of
/// P_S psi in the unnormalized convention; residual_norm = |psi - P_S psi|.
SymProjection project_symmetric(const StateVector& psi);

/// Full-space expansion sum_occ C_occ dicke_unnormalized(occ), reading the
/// coefficients in the unnormalized convention. Guarded at K^N <= 2^20.
StateVector expand(const SymStateCompressed& sym);

/// The children of occ in the one-site split: (k, occ - e_k) for every k
/// with n_k > 0. For each site n the vector identity
///   |N; n_1..n_K> = sum_k |k>_n (x) |N-1; child_k>
/// holds with unnormalized Dicke states on both sides.
std::vector<std::pair<int, Occupation>> recursion_split(const Occupation& occ);

/// Matrix of the collective operator X~ restricted to S, in the orthonormal
/// Dicke basis. On S the collective operator acts like sum_ij X_ij a_i^+ a_j
/// on K bosonic modes, so entries carry sqrt(n_j (n_i + 1)) factors.
Eigen::MatrixXcd collective_compressed(const SiteOperator& op, int n_sites);

/// Coefficient relabeling under a permutation of the K basis labels.
/// perm has length K with perm[k-1] = image of label k (1-based).
SymStateCompressed relabel(const SymStateCompressed& sym,
                           const std::vector<int>& perm);

} // namespace qukit
