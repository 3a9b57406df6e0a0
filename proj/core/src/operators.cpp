#include "qukit/operators.hpp"

#include <string>

namespace qukit {

namespace {

void check_labels(int i, int j, int local_dim) {
    if (local_dim < 2) throw IndexError("local_dim must be >= 2");
    if (i < 1 || i > local_dim || j < 1 || j > local_dim)
        throw IndexError("labels (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") outside 1.." + std::to_string(local_dim));
    if (i == j) throw IndexError("E_ij / H_ij require i != j");
}

} // namespace

SiteOperator ladder(int i, int j, int local_dim) {
    check_labels(i, j, local_dim);
    SiteOperator op{local_dim, Eigen::MatrixXcd::Zero(local_dim, local_dim)};
    op.matrix(i - 1, j - 1) = cdouble{1.0, 0.0};
    return op;
}

SiteOperator cartan(int i, int j, int local_dim) {
    check_labels(i, j, local_dim);
    SiteOperator op{local_dim, Eigen::MatrixXcd::Zero(local_dim, local_dim)};
    op.matrix(i - 1, i - 1) = cdouble{1.0, 0.0};
    op.matrix(j - 1, j - 1) = cdouble{-1.0, 0.0};
    return op;
}

StateVector collective_apply(const SiteOperator& op, const StateVector& psi) {
    if (op.local_dim != psi.local_dim)
        throw ShapeError("collective_apply: operator local_dim " +
                         std::to_string(op.local_dim) + " vs state local_dim " +
                         std::to_string(psi.local_dim));
    const auto K = static_cast<std::size_t>(psi.local_dim);
    std::vector<cdouble> out(psi.dim(), cdouble{0.0, 0.0});

    // One pass per site: gather X[k'][k] * amps[... k at site ...] into the
    // slot with k replaced by k'.
    std::size_t stride = psi.dim() / K; // K^(N-1) for site 1, then shrinks
    for (int site = 0; site < psi.n_sites; ++site) {
        const std::size_t hi_count = psi.dim() / (stride * K);
        for (std::size_t hi = 0; hi < hi_count; ++hi) {
            const std::size_t base = hi * K * stride;
            for (std::size_t k = 0; k < K; ++k) {
                for (std::size_t kp = 0; kp < K; ++kp) {
                    const cdouble x = op.matrix(static_cast<Eigen::Index>(kp),
                                                static_cast<Eigen::Index>(k));
                    if (x == cdouble{0.0, 0.0}) continue;
                    const cdouble* src = psi.amps.data() + base + k * stride;
                    cdouble* dst = out.data() + base + kp * stride;
                    for (std::size_t lo = 0; lo < stride; ++lo) dst[lo] += x * src[lo];
                }
            }
        }
        stride /= K;
    }
    return StateVector(psi.n_sites, psi.local_dim, std::move(out));
}

Eigen::MatrixXcd collective_dense(const SiteOperator& op, int n_sites) {
    const std::size_t dim = pow_dim(op.local_dim, n_sites);
    if (dim > kDenseOracleGuard)
        throw SizeError("collective_dense: K^N = " + std::to_string(dim) +
                        " exceeds the dense guard " + std::to_string(kDenseOracleGuard));
    const auto K = static_cast<std::size_t>(op.local_dim);
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                   static_cast<Eigen::Index>(dim));
    std::size_t stride = dim / K;
    for (int site = 0; site < n_sites; ++site) {
        const std::size_t hi_count = dim / (stride * K);
        for (std::size_t hi = 0; hi < hi_count; ++hi)
            for (std::size_t k = 0; k < K; ++k)
                for (std::size_t kp = 0; kp < K; ++kp)
                    for (std::size_t lo = 0; lo < stride; ++lo) {
                        const std::size_t row = (hi * K + kp) * stride + lo;
                        const std::size_t col = (hi * K + k) * stride + lo;
                        full(static_cast<Eigen::Index>(row),
                             static_cast<Eigen::Index>(col)) +=
                            op.matrix(static_cast<Eigen::Index>(kp),
                                      static_cast<Eigen::Index>(k));
                    }
        stride /= K;
    }
    return full;
}

} // namespace qukit
