#pragma once

// Theorem verification sweeps and the full-vs-compressed benchmark, shared
// by the CLI and the acceptance suite.
//
// Theorem 1 samples check both directions: a random coherent state must be
// symmetric, Product under the parallelity criterion and the SVD oracle,
// and must return its tau; a random symmetric state must get the same
// verdict from the compressed classifier and the oracle. Theorem 2 samples
// check that a random state in S-perp is entangled by both routes and that
// a random product state always has a symmetric witness.

#include <cstdint>
#include <string>

#include "qukit/tensor_core.hpp"

namespace qukit {

struct VerifyOptions {
    int n_sites = 3;
    int local_dim = 2;
    int samples = 100;
    std::uint64_t seed = 1;
    double tol = 1e-10;
    int threads = 1;
};

struct VerifyReport {
    int n_sites = 0;
    int local_dim = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    int theorem1_pass = 0;
    int theorem1_total = 0;
    int theorem2_pass = 0;
    int theorem2_total = 0;
    double max_defect = 0.0;
    double elapsed_seconds = 0.0;

    bool all_passed() const {
        return theorem1_pass == theorem1_total && theorem2_pass == theorem2_total;
    }
};

/// Runs the sweeps. Requires K^N <= 4096 (the oracle leg); threads > 1
/// splits samples across a worker pool without changing any result.
VerifyReport run_verify(const VerifyOptions& options);

/// Deterministic JSON given the seed: everything except elapsed_seconds,
/// which varies run to run and is reported on stderr instead.
std::string serialize_verify_report(const VerifyReport& report);

enum class BenchMode { Full, Compressed };

struct BenchOptions {
    int n_sites = 10;
    int local_dim = 2;
    BenchMode mode = BenchMode::Compressed;
    int reps = 100;
    std::uint64_t seed = 1;
};

struct BenchReport {
    std::string mode;
    int n_sites = 0;
    int local_dim = 0;
    std::uint64_t dim = 0; // K^N in full mode, binom(N+K-1, N) in compressed
    double collective_apply_seconds = 0.0; // wall time per op
    double coherent_construct_seconds = 0.0;
    double collective_apply_ops_per_second = 0.0;
    double coherent_construct_ops_per_second = 0.0;
};

/// Times collective-operator application and coherent-state construction in
/// the requested mode. Full mode requires K^N <= 2^20; compressed mode
/// requires dim S <= 2^20.
BenchReport run_bench(const BenchOptions& options);

std::string serialize_bench_report(const BenchReport& report);

} // namespace qukit
