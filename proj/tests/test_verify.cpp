#include <doctest.h>

#include "qukit/verify.hpp"

#include "qukit/errors.hpp"

using namespace qukit;

TEST_CASE("run_verify passes cleanly at desk scale") {
    VerifyOptions options;
    options.n_sites = 3;
    options.local_dim = 2;
    options.samples = 25;
    options.seed = 7;
    const VerifyReport report = run_verify(options);
    CHECK(report.theorem1_pass == 25);
    CHECK(report.theorem2_pass == 25);
    CHECK(report.all_passed());
    CHECK(report.max_defect < 1e-10);
}

TEST_CASE("run_verify is deterministic given the seed") {
    VerifyOptions options;
    options.n_sites = 2;
    options.local_dim = 3;
    options.samples = 10;
    options.seed = 42;
    const std::string first = serialize_verify_report(run_verify(options));
    const std::string second = serialize_verify_report(run_verify(options));
    CHECK(first == second);
}

TEST_CASE("run_verify with threads matches single-threaded results") {
    VerifyOptions options;
    options.n_sites = 2;
    options.local_dim = 2;
    options.samples = 16;
    options.seed = 11;
    const std::string serial = serialize_verify_report(run_verify(options));
    options.threads = 4;
    const std::string parallel = serialize_verify_report(run_verify(options));
    CHECK(serial == parallel);
}

TEST_CASE("run_verify guards the oracle leg") {
    VerifyOptions options;
    options.n_sites = 7;
    options.local_dim = 4; // 4^7 = 16384 > 4096
    CHECK_THROWS_AS(run_verify(options), SizeError);
}

TEST_CASE("run_bench in both modes") {
    SUBCASE("compressed") {
        BenchOptions options;
        options.n_sites = 12;
        options.local_dim = 2;
        options.reps = 10;
        const BenchReport report = run_bench(options);
        CHECK(report.mode == "compressed");
        CHECK(report.dim == 13); // binom(13, 12)
        CHECK(report.collective_apply_seconds >= 0.0);
        const std::string json = serialize_bench_report(report);
        CHECK(json.find("\"op\": \"collective_apply\"") != std::string::npos);
        CHECK(json.find("\"op\": \"coherent_construct\"") != std::string::npos);
        CHECK(json.find("\"throughput\"") != std::string::npos);
    }
    SUBCASE("full") {
        BenchOptions options;
        options.n_sites = 6;
        options.local_dim = 2;
        options.mode = BenchMode::Full;
        options.reps = 10;
        const BenchReport report = run_bench(options);
        CHECK(report.mode == "full");
        CHECK(report.dim == 64);
    }
    SUBCASE("full-mode guard rejects 3^20") {
        BenchOptions options;
        options.n_sites = 20;
        options.local_dim = 3;
        options.mode = BenchMode::Full;
        CHECK_THROWS_AS(run_bench(options), SizeError);
    }
}
