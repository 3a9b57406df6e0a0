#pragma once

// Single-site operator basis E_ij = |i><j|, H_ij = |i><i| - |j><j| and the
// matrix-free application of collective operators X~ = sum_n X^(n).

#include <Eigen/Dense>

#include "qukit/tensor_core.hpp"

namespace qukit {

/// A K x K complex operator acting on one subsystem. Any matrix is accepted;
/// ladder() and cartan() build the named basis elements.
struct SiteOperator {
    int local_dim = 0;
    Eigen::MatrixXcd matrix;
};

/// E_ij = |i><j| with E_ij|k> = delta_kj |i>. Labels 1..K, i != j.
SiteOperator ladder(int i, int j, int local_dim);

/// H_ij = |i><i| - |j><j| = [E_ij, E_ij^dagger]. Traceless and diagonal.
/// The H_{i1} family is the simultaneously diagonal set whose collective
/// versions have the Dicke states as eigenstates with eigenvalue n_i - n_1.
SiteOperator cartan(int i, int j, int local_dim);

/// (sum_{n=1}^N X^(n)) psi, streamed one site at a time over the amplitude
/// array. Never materializes a K^N x K^N matrix; cost O(N K K^N).
StateVector collective_apply(const SiteOperator& op, const StateVector& psi);

/// Dense sum_n 1 (x) ... (x) X (x) ... (x) 1, for tests and benchmarks only.
/// Guarded at K^N <= 4096.
Eigen::MatrixXcd collective_dense(const SiteOperator& op, int n_sites);

} // namespace qukit
