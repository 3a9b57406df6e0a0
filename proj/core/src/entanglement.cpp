#include "qukit/entanglement.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <string>

namespace qukit {

namespace {

void check_tol(double tol) {
    if (!(tol > 0.0) || !(tol < 1.0))
        throw DegenerateInput("tolerance must lie in (0, 1)");
}

double vec_norm(const std::vector<cdouble>& v) {
    double s = 0.0;
    for (const auto& c : v) s += std::norm(c);
    return std::sqrt(s);
}

/// Largest |u[a] v[b] - u[b] v[a]| over all component pairs a < b.
double max_minor(const std::vector<cdouble>& u, const std::vector<cdouble>& v) {
    double best = 0.0;
    for (std::size_t a = 0; a + 1 < u.size(); ++a)
        for (std::size_t b = a + 1; b < u.size(); ++b)
            best = std::max(best, std::abs(u[a] * v[b] - u[b] * v[a]));
    return best;
}

/// Coefficients of the partials along the largest-norm partial, u^k = c_k
/// u^ref with c_k = <ref, u^k>/|ref|^2, returned as a unit K-vector.
std::vector<cdouble> factor_from_partials(const SiteDecomposition& dec) {
    const std::size_t K = dec.partials.size();
    std::size_t ref = 0;
    double ref_norm = -1.0;
    for (std::size_t k = 0; k < K; ++k) {
        const double n = vec_norm(dec.partials[k]);
        if (n > ref_norm) {
            ref_norm = n;
            ref = k;
        }
    }
    if (ref_norm == 0.0) throw DegenerateInput("factor extraction on a zero state");
    std::vector<cdouble> factor(K);
    for (std::size_t k = 0; k < K; ++k) {
        cdouble overlap{0.0, 0.0};
        for (std::size_t i = 0; i < dec.partials[ref].size(); ++i)
            overlap += std::conj(dec.partials[ref][i]) * dec.partials[k][i];
        factor[k] = overlap / (ref_norm * ref_norm);
    }
    const double fn = vec_norm(factor);
    for (auto& c : factor) c /= fn;
    return factor;
}

} // namespace

std::vector<cdouble> extract_site_factor(const StateVector& psi, int site) {
    return factor_from_partials(site_decompose(psi, site));
}

Classification is_product(const StateVector& psi, double tol) {
    check_tol(tol);
    if (psi.norm_sq() == 0.0) throw DegenerateInput("is_product: zero state");

    Classification cls;
    cls.site_defects.assign(static_cast<std::size_t>(psi.n_sites), 0.0);
    const auto K = static_cast<std::size_t>(psi.local_dim);

    bool parallel_everywhere = true;
    std::vector<SiteDecomposition> decs;
    decs.reserve(static_cast<std::size_t>(psi.n_sites));
    for (int site = 1; site <= psi.n_sites; ++site) {
        decs.push_back(site_decompose(psi, site));
        const auto& partials = decs.back().partials;
        std::vector<double> norms(K);
        for (std::size_t k = 0; k < K; ++k) norms[k] = vec_norm(partials[k]);

        double defect = 0.0;
        for (std::size_t j = 0; j + 1 < K; ++j) {
            if (norms[j] == 0.0) continue; // zero partial is parallel to anything
            for (std::size_t k = j + 1; k < K; ++k) {
                if (norms[k] == 0.0) continue;
                defect = std::max(defect,
                                  max_minor(partials[j], partials[k]) /
                                      (norms[j] * norms[k]));
            }
        }
        cls.site_defects[static_cast<std::size_t>(site - 1)] = defect;
        if (defect > tol) parallel_everywhere = false;
    }
    cls.max_defect =
        *std::max_element(cls.site_defects.begin(), cls.site_defects.end());

    if (!parallel_everywhere) {
        cls.verdict = Classification::Verdict::Entangled;
        return cls;
    }

    // Factor reconstruction: at each site read the coefficients off the
    // largest-norm partial, u^k = c_k u^ref with c_k = <ref, u^k>/|ref|^2.
    ProductFactors factors{psi.local_dim, {}};
    factors.factors.reserve(static_cast<std::size_t>(psi.n_sites));
    for (const auto& dec : decs) factors.factors.push_back(factor_from_partials(dec));

    // The criterion passed; keep the verdict honest by checking the rebuilt
    // state against the input.
    const StateVector rebuilt = make_product_state(factors);
    if (fidelity(psi, rebuilt) >= 1.0 - tol) {
        cls.verdict = Classification::Verdict::Product;
        cls.factors = std::move(factors);
    } else {
        cls.verdict = Classification::Verdict::Entangled;
    }
    return cls;
}

bool brute_force_is_product(const StateVector& psi, double tol) {
    check_tol(tol);
    if (psi.dim() > kDenseOracleGuard)
        throw SizeError("brute_force_is_product: K^N = " + std::to_string(psi.dim()) +
                        " exceeds the oracle guard");

    const auto K = static_cast<std::size_t>(psi.local_dim);
    for (int site = 1; site <= psi.n_sites; ++site) {
        const auto dec = site_decompose(psi, site);
        Eigen::MatrixXcd reshaped(static_cast<Eigen::Index>(K),
                                  static_cast<Eigen::Index>(psi.dim() / K));
        for (std::size_t k = 0; k < K; ++k)
            for (std::size_t j = 0; j < dec.partials[k].size(); ++j)
                reshaped(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) =
                    dec.partials[k][j];
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(reshaped);
        const auto& sigma = svd.singularValues();
        if (sigma.size() > 1 && sigma(1) > tol * sigma(0)) return false;
    }
    return true;
}

SymClassification classify_symmetric(const SymStateCompressed& sym, double tol) {
    check_tol(tol);
    const int N = sym.n_sites;
    const int K = sym.local_dim;
    const auto occs = enumerate_occupations(N, K);
    if (sym.coeffs.size() != occs.size())
        throw ShapeError("classify_symmetric: wrong coefficient count");

    double cmax = 0.0;
    for (const auto& c : sym.coeffs) cmax = std::max(cmax, std::abs(c));
    if (cmax == 0.0) throw DegenerateInput("classify_symmetric: zero state");

    // Chart selection: the basis label with the largest extremal coefficient
    // C_{N e_m}. For a coherent state that keeps every |tau| <= 1.
    int chart = 1;
    double best = -1.0;
    for (int m = 1; m <= K; ++m) {
        Occupation extremal{std::vector<int>(static_cast<std::size_t>(K), 0)};
        extremal.counts[static_cast<std::size_t>(m - 1)] = N;
        const double mag = std::abs(sym.coeffs[occupation_rank(extremal)]);
        if (mag > best) {
            best = mag;
            chart = m;
        }
    }

    SymClassification out;
    out.chart = chart;

    std::vector<int> perm(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) perm[static_cast<std::size_t>(k)] = k + 1;
    std::swap(perm[0], perm[static_cast<std::size_t>(chart - 1)]);
    const SymStateCompressed view = (chart == 1) ? sym : relabel(sym, perm);

    const cdouble ext = view.coeffs[0]; // rank of (N,0,...,0) is 0
    if (std::abs(ext) == 0.0) {
        // Every extremal coefficient vanishes; no chart can carry the
        // tau-power pattern of a nonzero state.
        out.verdict = SymClassification::Verdict::Entangled;
        out.defect = 1.0;
        return out;
    }

    // tau_k from the first ratio: C at (N-1, ..., 1 at k, ...) over C_ext.
    std::vector<cdouble> tau(static_cast<std::size_t>(K - 1));
    for (int k = 2; k <= K; ++k) {
        Occupation first{std::vector<int>(static_cast<std::size_t>(K), 0)};
        first.counts[0] = N - 1;
        first.counts[static_cast<std::size_t>(k - 1)] = 1;
        tau[static_cast<std::size_t>(k - 2)] =
            view.coeffs[occupation_rank(first)] / ext;
    }

    // Global check against the tau-power pattern C = ext * prod tau^{i_k}.
    double defect = 0.0;
    for (std::size_t r = 0; r < occs.size(); ++r) {
        cdouble predicted = ext;
        for (int k = 2; k <= K; ++k) {
            const int reps = occs[r].counts[static_cast<std::size_t>(k - 1)];
            for (int t = 0; t < reps; ++t)
                predicted *= tau[static_cast<std::size_t>(k - 2)];
        }
        const double denom = std::max(cmax, std::abs(predicted));
        defect = std::max(defect, std::abs(view.coeffs[r] - predicted) / denom);
    }
    out.defect = defect;

    if (defect <= tol) {
        out.verdict = SymClassification::Verdict::Coherent;
        out.params = CoherentParams{N, K, std::move(tau)};
    } else {
        out.verdict = SymClassification::Verdict::Entangled;
    }
    return out;
}

WitnessResult symmetric_witness(const ProductFactors& factors, double tol_witness) {
    const StateVector psi = make_product_state(factors);
    const SymProjection proj = project_symmetric(psi);
    const auto occs = enumerate_occupations(psi.n_sites, psi.local_dim);

    // Canonical order is the cascade order: n_1 descending, then n_2, ...
    for (std::size_t r = 0; r < occs.size(); ++r) {
        const cdouble overlap =
            proj.sym.coeffs[r] * std::sqrt(static_cast<double>(multinomial(occs[r])));
        if (std::abs(overlap) > tol_witness) return WitnessResult{occs[r], overlap};
    }
    throw WitnessFailure("no symmetric state with overlap above " +
                         std::to_string(tol_witness));
}

} // namespace qukit
