#include "qukit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>
#include <vector>

#include <json.hpp>

#include "qukit/entanglement.hpp"
#include "qukit/io.hpp"
#include "qukit/sampling.hpp"

namespace qukit {

namespace {

// Criterion thresholds for the sweeps; tighter than the classifier tol.
constexpr double kResidualTol = 1e-12;
constexpr double kTauRecoveryTol = 1e-8;

/// Recover chart-1 tau from a chart-m classification via the single-site
/// factor in original labels.
std::vector<cdouble> recover_tau(const SymClassification& cls) {
    const auto factor = chart_factor(*cls.params, cls.chart);
    if (std::abs(factor[0]) == 0.0)
        throw ChartSingularity("recovered coherent state has no |1> component");
    std::vector<cdouble> tau(factor.size() - 1);
    for (std::size_t k = 1; k < factor.size(); ++k) tau[k - 1] = factor[k] / factor[0];
    return tau;
}

struct SampleOutcome {
    bool theorem1 = false;
    bool theorem2 = false;
    double defect = 0.0;
};

SampleOutcome run_sample(const VerifyOptions& opt, int index) {
    const auto base = static_cast<std::uint64_t>(index) * 4;
    SampleOutcome outcome;

    // Theorem 1 forward: a random coherent state is symmetric, product by
    // both classifiers, and returns its tau.
    bool t1 = true;
    {
        Rng rng = sample_rng(opt.seed, base);
        const CoherentParams tau = random_tau(opt.n_sites, opt.local_dim, rng);
        const StateVector st = coherent_product(tau);
        const SymProjection proj = project_symmetric(st);
        if (proj.residual_norm > kResidualTol) t1 = false;

        const Classification cls = is_product(st, opt.tol);
        outcome.defect = cls.max_defect;
        if (!cls.is_product()) t1 = false;
        if (!brute_force_is_product(st, opt.tol)) t1 = false;

        const SymClassification sym_cls = classify_symmetric(proj.sym, opt.tol);
        if (!sym_cls.is_coherent()) {
            t1 = false;
        } else {
            const auto recovered = recover_tau(sym_cls);
            for (std::size_t k = 0; k < recovered.size(); ++k) {
                const double scale = std::max(1.0, std::abs(tau.tau[k]));
                if (std::abs(recovered[k] - tau.tau[k]) > kTauRecoveryTol * scale)
                    t1 = false;
            }
        }
    }

    // Theorem 1 reverse: on a random symmetric state the compressed
    // classifier and the SVD oracle must agree.
    {
        Rng rng = sample_rng(opt.seed, base + 1);
        const SymStateCompressed sym = random_symmetric(opt.n_sites, opt.local_dim, rng);
        const bool coherent = classify_symmetric(sym, opt.tol).is_coherent();
        const bool oracle = brute_force_is_product(expand(sym), opt.tol);
        if (coherent != oracle) t1 = false;
    }
    outcome.theorem1 = t1;

    // Theorem 2: everything in S-perp is entangled, and every product state
    // has a symmetric witness.
    bool t2 = true;
    {
        Rng rng = sample_rng(opt.seed, base + 2);
        const StateVector sperp = random_sperp_state(opt.n_sites, opt.local_dim, rng);
        if (is_product(sperp, opt.tol).is_product()) t2 = false;
        if (brute_force_is_product(sperp, opt.tol)) t2 = false;
    }
    {
        Rng rng = sample_rng(opt.seed, base + 3);
        const ProductFactors factors = random_factors(opt.n_sites, opt.local_dim, rng);
        try {
            symmetric_witness(factors);
        } catch (const WitnessFailure&) {
            t2 = false;
        }
    }
    outcome.theorem2 = t2;
    return outcome;
}

} // namespace

VerifyReport run_verify(const VerifyOptions& opt) {
    if (opt.samples < 1) throw DegenerateInput("verify: samples must be >= 1");
    if (pow_dim(opt.local_dim, opt.n_sites) > kDenseOracleGuard)
        throw SizeError("verify: K^N exceeds the oracle guard " +
                        std::to_string(kDenseOracleGuard));

    const auto start = std::chrono::steady_clock::now();

    const int n_threads = std::max(1, opt.threads);
    std::vector<SampleOutcome> outcomes(static_cast<std::size_t>(opt.samples));
    if (n_threads == 1) {
        for (int i = 0; i < opt.samples; ++i)
            outcomes[static_cast<std::size_t>(i)] = run_sample(opt, i);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(n_threads));
        for (int w = 0; w < n_threads; ++w) {
            workers.emplace_back([&, w] {
                for (int i = w; i < opt.samples; i += n_threads)
                    outcomes[static_cast<std::size_t>(i)] = run_sample(opt, i);
            });
        }
        for (auto& worker : workers) worker.join();
    }

    VerifyReport report;
    report.n_sites = opt.n_sites;
    report.local_dim = opt.local_dim;
    report.samples = opt.samples;
    report.seed = opt.seed;
    report.theorem1_total = opt.samples;
    report.theorem2_total = opt.samples;
    for (const auto& outcome : outcomes) {
        report.theorem1_pass += outcome.theorem1 ? 1 : 0;
        report.theorem2_pass += outcome.theorem2 ? 1 : 0;
        report.max_defect = std::max(report.max_defect, outcome.defect);
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string serialize_verify_report(const VerifyReport& report) {
    // elapsed_seconds stays out: the report must be byte-identical across
    // runs with the same seed. The CLI prints timing on stderr.
    nlohmann::ordered_json doc;
    doc["n_sites"] = report.n_sites;
    doc["local_dim"] = report.local_dim;
    doc["samples"] = report.samples;
    doc["seed"] = report.seed;
    doc["theorem1_pass"] = report.theorem1_pass;
    doc["theorem1_total"] = report.theorem1_total;
    doc["theorem2_pass"] = report.theorem2_pass;
    doc["theorem2_total"] = report.theorem2_total;
    doc["max_defect"] = report.max_defect;
    doc["all_passed"] = report.all_passed();
    return doc.dump(2);
}

BenchReport run_bench(const BenchOptions& opt) {
    if (opt.reps < 1) throw DegenerateInput("bench: reps must be >= 1");
    BenchReport report;
    report.n_sites = opt.n_sites;
    report.local_dim = opt.local_dim;

    Rng rng = sample_rng(opt.seed, 0);
    const CoherentParams tau = random_tau(opt.n_sites, opt.local_dim, rng);
    const SiteOperator raise = ladder(2, 1, opt.local_dim);

    using clock = std::chrono::steady_clock;
    auto seconds_since = [](clock::time_point t0) {
        return std::chrono::duration<double>(clock::now() - t0).count();
    };

    if (opt.mode == BenchMode::Full) {
        report.mode = "full";
        const std::size_t dim = pow_dim(opt.local_dim, opt.n_sites);
        if (dim > kFullSpaceGuard)
            throw SizeError("bench: K^N = " + std::to_string(dim) +
                            " exceeds the full-space guard");
        report.dim = dim;

        StateVector psi = random_state(opt.n_sites, opt.local_dim, rng);
        auto t0 = clock::now();
        for (int r = 0; r < opt.reps; ++r) {
            const StateVector out = collective_apply(raise, psi);
            psi.amps[0] += out.amps[0] * 1e-300; // keep the loop observable
        }
        const double apply_total = seconds_since(t0);

        t0 = clock::now();
        for (int r = 0; r < opt.reps; ++r) {
            const StateVector st = coherent_product(tau);
            psi.amps[0] += st.amps[0] * 1e-300;
        }
        const double construct_total = seconds_since(t0);

        report.collective_apply_seconds = apply_total / opt.reps;
        report.coherent_construct_seconds = construct_total / opt.reps;
    } else {
        report.mode = "compressed";
        const std::uint64_t dim = symmetric_dimension(opt.n_sites, opt.local_dim);
        if (dim > kFullSpaceGuard)
            throw SizeError("bench: dim S = " + std::to_string(dim) +
                            " exceeds the guard");
        report.dim = dim;

        const Eigen::MatrixXcd mat = collective_compressed(raise, opt.n_sites);
        Eigen::VectorXcd vec = to_orthonormal(coherent_coefficients(tau));
        Eigen::VectorXcd out(vec.size());
        auto t0 = clock::now();
        for (int r = 0; r < opt.reps; ++r) {
            out.noalias() = mat * vec;
            vec(0) += out(0) * 1e-300;
        }
        const double apply_total = seconds_since(t0);

        t0 = clock::now();
        cdouble sink{0.0, 0.0};
        for (int r = 0; r < opt.reps; ++r) {
            const SymStateCompressed sym = coherent_coefficients(tau);
            sink += sym.coeffs[0];
        }
        const double construct_total = seconds_since(t0);
        vec(0) += sink * 1e-300;

        report.collective_apply_seconds = apply_total / opt.reps;
        report.coherent_construct_seconds = construct_total / opt.reps;
    }

    report.collective_apply_ops_per_second =
        report.collective_apply_seconds > 0.0 ? 1.0 / report.collective_apply_seconds
                                              : 0.0;
    report.coherent_construct_ops_per_second =
        report.coherent_construct_seconds > 0.0
            ? 1.0 / report.coherent_construct_seconds
            : 0.0;
    return report;
}

std::string serialize_bench_report(const BenchReport& report) {
    nlohmann::ordered_json ops = nlohmann::ordered_json::array();
    auto entry = [&](const char* op, double wall, double throughput) {
        nlohmann::ordered_json doc;
        doc["mode"] = report.mode;
        doc["n_sites"] = report.n_sites;
        doc["local_dim"] = report.local_dim;
        doc["dim"] = report.dim;
        doc["op"] = op;
        doc["wall_time"] = wall;
        doc["throughput"] = throughput;
        ops.push_back(std::move(doc));
    };
    entry("collective_apply", report.collective_apply_seconds,
          report.collective_apply_ops_per_second);
    entry("coherent_construct", report.coherent_construct_seconds,
          report.coherent_construct_ops_per_second);
    return ops.dump(2);
}

} // namespace qukit
