#include "qukit/tensor_core.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qukit {

namespace {

void check_shape_params(int n_sites, int local_dim) {
    if (n_sites < 1)
        throw ShapeError("n_sites must be >= 1, got " + std::to_string(n_sites));
    if (local_dim < 2)
        throw ShapeError("local_dim must be >= 2, got " + std::to_string(local_dim));
}

} // namespace

std::size_t pow_dim(int local_dim, int n_sites) {
    check_shape_params(n_sites, local_dim);
    std::size_t dim = 1;
    const std::size_t limit = std::numeric_limits<std::size_t>::max();
    for (int n = 0; n < n_sites; ++n) {
        if (dim > limit / static_cast<std::size_t>(local_dim))
            throw SizeError("K^N overflows size_t");
        dim *= static_cast<std::size_t>(local_dim);
    }
    return dim;
}

StateVector::StateVector(int n, int k) : n_sites(n), local_dim(k) {
    amps.assign(pow_dim(k, n), cdouble{0.0, 0.0});
}

StateVector::StateVector(int n, int k, std::vector<cdouble> amplitudes)
    : n_sites(n), local_dim(k), amps(std::move(amplitudes)) {
    if (amps.size() != pow_dim(k, n))
        throw ShapeError("amplitude vector has length " + std::to_string(amps.size()) +
                         ", expected K^N = " + std::to_string(pow_dim(k, n)));
}

double StateVector::norm_sq() const {
    double s = 0.0;
    for (const auto& a : amps) s += std::norm(a);
    return s;
}

double StateVector::norm() const { return std::sqrt(norm_sq()); }

std::size_t basis_index(std::span<const int> word, int local_dim) {
    std::size_t index = 0;
    for (int label : word) {
        if (label < 1 || label > local_dim)
            throw IndexError("basis label " + std::to_string(label) +
                             " outside 1.." + std::to_string(local_dim));
        index = index * static_cast<std::size_t>(local_dim) +
                static_cast<std::size_t>(label - 1);
    }
    return index;
}

std::vector<int> basis_word(std::size_t index, int n_sites, int local_dim) {
    if (index >= pow_dim(local_dim, n_sites))
        throw IndexError("basis index " + std::to_string(index) + " out of range");
    std::vector<int> word(static_cast<std::size_t>(n_sites));
    for (int n = n_sites - 1; n >= 0; --n) {
        word[static_cast<std::size_t>(n)] =
            static_cast<int>(index % static_cast<std::size_t>(local_dim)) + 1;
        index /= static_cast<std::size_t>(local_dim);
    }
    return word;
}

StateVector make_product_state(const ProductFactors& factors) {
    const int n_sites = factors.n_sites();
    const int local_dim = factors.local_dim;
    check_shape_params(n_sites, local_dim);

    for (int n = 0; n < n_sites; ++n) {
        const auto& f = factors.factors[static_cast<std::size_t>(n)];
        if (static_cast<int>(f.size()) != local_dim)
            throw ShapeError("factor " + std::to_string(n + 1) + " has length " +
                             std::to_string(f.size()) + ", expected K = " +
                             std::to_string(local_dim));
        double norm_sq = 0.0;
        for (const auto& c : f) norm_sq += std::norm(c);
        if (norm_sq == 0.0)
            throw DegenerateInput("factor " + std::to_string(n + 1) + " is zero");
    }

    // Repeated Kronecker product, site 1 outermost so it lands on the most
    // significant digit.
    std::vector<cdouble> amps{cdouble{1.0, 0.0}};
    for (int n = 0; n < n_sites; ++n) {
        const auto& f = factors.factors[static_cast<std::size_t>(n)];
        std::vector<cdouble> next(amps.size() * f.size());
        std::size_t out = 0;
        for (const auto& a : amps)
            for (const auto& c : f) next[out++] = a * c;
        amps = std::move(next);
    }
    return StateVector(n_sites, local_dim, std::move(amps));
}

cdouble inner_product(const StateVector& a, const StateVector& b) {
    if (a.n_sites != b.n_sites || a.local_dim != b.local_dim)
        throw ShapeError("inner_product: (N, K) mismatch");
    cdouble s{0.0, 0.0};
    for (std::size_t i = 0; i < a.amps.size(); ++i)
        s += std::conj(a.amps[i]) * b.amps[i];
    return s;
}

double fidelity(const StateVector& a, const StateVector& b) {
    const double na = a.norm_sq();
    const double nb = b.norm_sq();
    if (na == 0.0 || nb == 0.0)
        throw DegenerateInput("fidelity of a zero state");
    return std::norm(inner_product(a, b)) / (na * nb);
}

SiteDecomposition site_decompose(const StateVector& psi, int site) {
    if (site < 1 || site > psi.n_sites)
        throw IndexError("site " + std::to_string(site) + " outside 1.." +
                         std::to_string(psi.n_sites));
    const auto K = static_cast<std::size_t>(psi.local_dim);
    // Big-endian layout: index = (hi * K + k) * stride + lo with
    // stride = K^(N - site), hi indexing the sites before `site`.
    std::size_t stride = 1;
    for (int n = 0; n < psi.n_sites - site; ++n) stride *= K;
    const std::size_t hi_count = psi.dim() / (stride * K);

    SiteDecomposition dec;
    dec.site = site;
    dec.partials.assign(K, std::vector<cdouble>(psi.dim() / K));
    for (std::size_t hi = 0; hi < hi_count; ++hi)
        for (std::size_t k = 0; k < K; ++k)
            for (std::size_t lo = 0; lo < stride; ++lo)
                dec.partials[k][hi * stride + lo] =
                    psi.amps[(hi * K + k) * stride + lo];
    return dec;
}

StateVector normalize(const StateVector& psi) {
    const double n = psi.norm();
    if (n == 0.0) throw DegenerateInput("cannot normalize the zero state");
    std::vector<cdouble> amps(psi.amps);
    for (auto& a : amps) a /= n;
    return StateVector(psi.n_sites, psi.local_dim, std::move(amps));
}

} // namespace qukit
