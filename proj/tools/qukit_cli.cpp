// qukit: construct, project, and classify pure states of N K-dimensional
// subsystems, and run the theorem verification sweeps.
//
// Subcommands: gen | classify | project | verify | bench.
// JSON goes to stdout, human summaries to stderr. Exit codes: 0 success
// (classify: product), 1 classify: entangled, 2 usage/input error, 3 size
// guard exceeded.

#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qukit/qukit.hpp"

namespace {

constexpr int kExitProduct = 0;
constexpr int kExitEntangled = 1;
constexpr int kExitError = 2;
constexpr int kExitSizeGuard = 3;

struct GenArgs {
    std::string kind;
    int n_sites = 0;
    int local_dim = 0;
    std::string tau;
    std::string eta;
    std::string occ;
    std::uint64_t seed = 1;
    std::string out;
};

int run_gen(const GenArgs& args) {
    qukit::StateVector state;

    if (args.kind == "coherent") {
        if (args.n_sites < 1 || args.local_dim < 2)
            throw qukit::FileFormatError("gen coherent needs --n and --k");
        if (!args.eta.empty()) {
            qukit::DisplacementParams params{args.n_sites, args.local_dim,
                                             qukit::parse_complex_list(args.eta)};
            state = qukit::coherent_displace(params);
        } else if (!args.tau.empty()) {
            qukit::CoherentParams params{args.n_sites, args.local_dim,
                                         qukit::parse_complex_list(args.tau)};
            state = qukit::coherent_product(params);
        } else {
            throw qukit::FileFormatError("gen coherent needs --tau or --eta");
        }
    } else if (args.kind == "dicke") {
        if (args.occ.empty()) throw qukit::FileFormatError("gen dicke needs --occ");
        const qukit::Occupation occ = qukit::parse_occupation(args.occ);
        if (args.n_sites > 0 && args.n_sites != occ.n_sites())
            throw qukit::FileFormatError("--n disagrees with the sum of --occ");
        if (args.local_dim > 0 && args.local_dim != occ.local_dim())
            throw qukit::FileFormatError("--k disagrees with the length of --occ");
        if (qukit::pow_dim(occ.local_dim(), occ.n_sites()) > qukit::kFullSpaceGuard)
            throw qukit::SizeError("gen dicke: K^N exceeds the full-space guard");
        state = qukit::dicke_normalized(occ);
    } else if (args.kind == "product") {
        if (args.n_sites < 1 || args.local_dim < 2)
            throw qukit::FileFormatError("gen product needs --n and --k");
        if (qukit::pow_dim(args.local_dim, args.n_sites) > qukit::kFullSpaceGuard)
            throw qukit::SizeError("gen product: K^N exceeds the full-space guard");
        qukit::Rng rng(args.seed);
        state = qukit::make_product_state(
            qukit::random_factors(args.n_sites, args.local_dim, rng));
    } else if (args.kind == "random") {
        if (args.n_sites < 1 || args.local_dim < 2)
            throw qukit::FileFormatError("gen random needs --n and --k");
        if (qukit::pow_dim(args.local_dim, args.n_sites) > qukit::kFullSpaceGuard)
            throw qukit::SizeError("gen random: K^N exceeds the full-space guard");
        qukit::Rng rng(args.seed);
        state = qukit::random_state(args.n_sites, args.local_dim, rng);
    } else {
        throw qukit::FileFormatError("unknown gen kind \"" + args.kind + "\"");
    }

    if (args.out.empty()) throw qukit::FileFormatError("gen needs --out");
    qukit::write_state_file(args.out, state);
    std::cerr << "wrote " << state.dim() << " amplitudes (N=" << state.n_sites
              << ", K=" << state.local_dim << ") to " << args.out;
    if (args.kind == "random" || args.kind == "product")
        std::cerr << " [seed " << args.seed << "]";
    std::cerr << "\n";
    return 0;
}

int run_classify(const std::string& in, double tol) {
    if (qukit::is_full_state_file(in)) {
        const qukit::StateVector psi = qukit::read_state_file(in);
        const qukit::Classification cls = qukit::is_product(psi, tol);
        std::cout << qukit::serialize_classification(cls, tol) << "\n";
        std::cerr << (cls.is_product() ? "product" : "entangled")
                  << " (max defect " << cls.max_defect << ")\n";
        return cls.is_product() ? kExitProduct : kExitEntangled;
    }
    const qukit::SymStateCompressed sym = qukit::read_compressed_file(in);
    const qukit::SymClassification cls = qukit::classify_symmetric(sym, tol);
    std::cout << qukit::serialize_sym_classification(cls, tol) << "\n";
    std::cerr << (cls.is_coherent() ? "coherent (product)" : "entangled")
              << " (defect " << cls.defect << ", chart " << cls.chart << ")\n";
    return cls.is_coherent() ? kExitProduct : kExitEntangled;
}

int run_project(const std::string& in, const std::string& out) {
    const qukit::StateVector psi = qukit::read_state_file(in);
    const qukit::SymProjection proj = qukit::project_symmetric(psi);
    if (!out.empty()) qukit::write_compressed_file(out, proj.sym);

    nlohmann::ordered_json doc;
    doc["n_sites"] = psi.n_sites;
    doc["local_dim"] = psi.local_dim;
    doc["sym_dim"] = proj.sym.dim();
    doc["symmetric_norm"] = proj.sym.norm();
    doc["residual_norm"] = proj.residual_norm;
    std::cout << doc.dump(2) << "\n";
    std::cerr << "residual " << proj.residual_norm << ", compressed dim "
              << proj.sym.dim() << (out.empty() ? "" : ", wrote " + out) << "\n";
    return 0;
}

int run_verify_cmd(const qukit::VerifyOptions& options) {
    const qukit::VerifyReport report = qukit::run_verify(options);
    std::cout << qukit::serialize_verify_report(report) << "\n";
    std::cerr << "theorem1 " << report.theorem1_pass << "/" << report.theorem1_total
              << ", theorem2 " << report.theorem2_pass << "/" << report.theorem2_total
              << ", max defect " << report.max_defect << ", elapsed "
              << report.elapsed_seconds << " s\n";
    return report.all_passed() ? 0 : 1;
}

int run_bench_cmd(const qukit::BenchOptions& options) {
    const qukit::BenchReport report = qukit::run_bench(options);
    std::cout << qukit::serialize_bench_report(report) << "\n";
    std::cerr << report.mode << " dim " << report.dim << ": collective apply "
              << report.collective_apply_seconds * 1e3 << " ms/op, coherent construct "
              << report.coherent_construct_seconds * 1e3 << " ms/op\n";
    return 0;
}

int run_main(int argc, char** argv) {
    CLI::App app{"symmetric-subspace states, coherent states, and the product-state criterion"};
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a state file");
    gen->add_option("kind", gen_args.kind, "coherent | dicke | product | random")
        ->required();
    gen->add_option("--n", gen_args.n_sites, "number of subsystems N");
    gen->add_option("--k", gen_args.local_dim, "local dimension K");
    gen->add_option("--tau", gen_args.tau, "K-1 complex tau values, e.g. 0.5+0.5i,0.1");
    gen->add_option("--eta", gen_args.eta, "K-1 complex eta values (displacement)");
    gen->add_option("--occ", gen_args.occ, "occupation counts, e.g. 1,2,0");
    gen->add_option("--seed", gen_args.seed, "random seed");
    gen->add_option("--out", gen_args.out, "output state file")->required();

    std::string classify_in;
    double classify_tol = qukit::kDefaultTol;
    auto* classify = app.add_subcommand("classify", "product-vs-entangled verdict");
    classify->add_option("input", classify_in, "state file (full or compressed)")
        ->required();
    classify->add_option("--tol", classify_tol, "relative tolerance");

    std::string project_in;
    std::string project_out;
    auto* project = app.add_subcommand("project", "project onto the symmetric subspace");
    project->add_option("input", project_in, "full state file")->required();
    project->add_option("--out", project_out, "compressed output file");

    qukit::VerifyOptions verify_options;
    auto* verify = app.add_subcommand("verify", "run the theorem sweeps");
    verify->add_option("--n", verify_options.n_sites, "number of subsystems N");
    verify->add_option("--k", verify_options.local_dim, "local dimension K");
    verify->add_option("--samples", verify_options.samples, "samples per sweep");
    verify->add_option("--seed", verify_options.seed, "random seed");
    verify->add_option("--tol", verify_options.tol, "classifier tolerance");
    verify->add_option("--threads", verify_options.threads, "worker threads");

    qukit::BenchOptions bench_options;
    std::string bench_mode = "compressed";
    auto* bench = app.add_subcommand("bench", "full vs compressed timings");
    bench->add_option("--n", bench_options.n_sites, "number of subsystems N");
    bench->add_option("--k", bench_options.local_dim, "local dimension K");
    bench->add_option("--mode", bench_mode, "full | compressed")
        ->check(CLI::IsMember({"full", "compressed"}));
    bench->add_option("--reps", bench_options.reps, "repetitions per op");
    bench->add_option("--seed", bench_options.seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitError;
    }

    try {
        if (gen->parsed()) return run_gen(gen_args);
        if (classify->parsed()) return run_classify(classify_in, classify_tol);
        if (project->parsed()) return run_project(project_in, project_out);
        if (verify->parsed()) return run_verify_cmd(verify_options);
        if (bench->parsed()) {
            bench_options.mode = (bench_mode == "full") ? qukit::BenchMode::Full
                                                        : qukit::BenchMode::Compressed;
            return run_bench_cmd(bench_options);
        }
    } catch (const qukit::SizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSizeGuard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_main(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
