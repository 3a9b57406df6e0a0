#pragma once

// Product-vs-entangled decision procedures. is_product applies the
// parallelity criterion sitewise on the full space and reconstructs the
// factor certificate; classify_symmetric decides coherent-vs-entangled on
// the compressed representation via the coefficient ratio pattern;
// brute_force_is_product is the independent SVD-rank oracle; and
// symmetric_witness exhibits, for any product state, a Dicke state it
// overlaps -- the constructive form of "nothing in S-perp is a product".

#include <optional>

#include "qukit/coherent.hpp"
#include "qukit/symmetric_subspace.hpp"
#include "qukit/tensor_core.hpp"

namespace qukit {

/// Default relative tolerance for the classifiers. Desk-scale constructions
/// carry <= 1e-12 of error, leaving two orders of margin.
inline constexpr double kDefaultTol = 1e-10;

/// Default overlap threshold for symmetric_witness.
inline constexpr double kWitnessTol = 1e-9;

struct Classification {
    enum class Verdict { Product, Entangled };

    Verdict verdict = Verdict::Entangled;
    /// Present iff verdict == Product; reconstruction with fidelity
    /// >= 1 - tol against the input.
    std::optional<ProductFactors> factors;
    /// Per-site maximum normalized parallelity defect (2x2 minors of the
    /// partial vectors over the product of their norms).
    std::vector<double> site_defects;
    double max_defect = 0.0;

    bool is_product() const { return verdict == Verdict::Product; }
};

/// Parallelity criterion: psi is a product state iff at every site the K
/// partial vectors of site_decompose are pairwise parallel. Parallelity is
/// tested through normalized 2x2 minors, |u_j[a] u_k[b] - u_j[b] u_k[a]|
/// <= tol |u_j| |u_k|, so zero vectors count as parallel to everything.
/// On a Product verdict the factors are reconstructed from the largest-norm
/// partial at each site and verified by fidelity.
Classification is_product(const StateVector& psi, double tol = kDefaultTol);

/// The factor-reconstruction step of is_product for one site: coefficients
/// of the K partial vectors along the largest-norm partial, as a unit
/// K-vector. Meaningful as a single-site factor only when psi is (close to)
/// a product state.
std::vector<cdouble> extract_site_factor(const StateVector& psi, int site);

/// Independent oracle: true iff at every site the K x K^(N-1) reshaping of
/// psi has second singular value <= tol * first. Guarded at K^N <= 4096.
bool brute_force_is_product(const StateVector& psi, double tol = kDefaultTol);

struct SymClassification {
    enum class Verdict { Coherent, Entangled };

    Verdict verdict = Verdict::Entangled;
    /// Present iff verdict == Coherent: tau parameters valid in `chart`.
    std::optional<CoherentParams> params;
    /// Basis label m whose extremal coefficient C_{N e_m} anchors the ratio
    /// test; labels 1 and m are swapped before reading tau.
    int chart = 1;
    /// Max deviation from the tau-power coefficient pattern, relative to the
    /// largest coefficient magnitude.
    double defect = 0.0;

    bool is_coherent() const { return verdict == Verdict::Coherent; }
};

/// Symmetric-subspace classifier: a symmetric state is a product state iff
/// its coefficients follow C = tau_2^{i_2} ... tau_K^{i_K} C_extremal in
/// some chart. The chart is chosen as the basis label with the largest
/// extremal coefficient, which keeps |tau| <= 1 for true coherent states
/// and sidesteps the tau -> infinity singularity of the fixed-|1> chart.
SymClassification classify_symmetric(const SymStateCompressed& sym,
                                     double tol = kDefaultTol);

struct WitnessResult {
    Occupation occ;
    cdouble overlap; // <dicke_normalized(occ) | product state>
};

/// Finds an occupation whose Dicke state has nonzero overlap with the given
/// product state, scanning occupations in canonical order (descending n_1
/// first, then n_2, ...). Throws WitnessFailure if no overlap exceeds
/// tol_witness, which cannot happen for well-scaled factors.
WitnessResult symmetric_witness(const ProductFactors& factors,
                                double tol_witness = kWitnessTol);

} // namespace qukit
