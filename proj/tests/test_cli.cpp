// Exercises the installed CLI binary end to end: exit-code contract, file
// formats, and byte-level determinism. The binary path arrives in the
// QUKIT_CLI environment variable (set by CTest).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "qukit/io.hpp"
#include "qukit/tensor_core.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

struct CliFixture {
    fs::path dir;
    std::string cli;

    CliFixture() {
        const char* env = std::getenv("QUKIT_CLI");
        REQUIRE_MESSAGE(env != nullptr, "QUKIT_CLI must point at the qukit binary");
        cli = env;
        dir = fs::temp_directory_path() /
              ("qukit_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~CliFixture() { fs::remove_all(dir); }

    fs::path file(const std::string& name) const { return dir / name; }

    RunResult run(const std::string& args) const {
        const fs::path out_path = dir / "stdout.txt";
        const std::string cmd =
            cli + " " + args + " > " + out_path.string() + " 2> /dev/null";
        const int status = std::system(cmd.c_str());
        RunResult result;
        result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        std::ifstream in(out_path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        result.out = buffer.str();
        return result;
    }
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

TEST_CASE("gen coherent --tau 0 writes the lowest weight state") {
    CliFixture cli;
    const auto out = cli.file("lowest.json");
    const RunResult r =
        cli.run("gen coherent --n 3 --k 2 --tau 0 --out " + out.string());
    REQUIRE(r.exit_code == 0);
    const qukit::StateVector psi = qukit::read_state_file(out);
    CHECK(psi.n_sites == 3);
    CHECK(psi.amps[0] == qukit::cdouble{1.0, 0.0});
    CHECK(psi.norm_sq() == 1.0);
}

TEST_CASE("gen dicke --occ 1,2,0 writes 1/sqrt(3) on each permutation word") {
    CliFixture cli;
    const auto out = cli.file("dicke.json");
    const RunResult r = cli.run("gen dicke --occ 1,2,0 --out " + out.string());
    REQUIRE(r.exit_code == 0);
    const qukit::StateVector psi = qukit::read_state_file(out);
    const double expected = 1.0 / std::sqrt(3.0);
    CHECK(std::abs(psi.amps[qukit::basis_index(std::array{1, 2, 2}, 3)] -
                   qukit::cdouble{expected, 0.0}) < 1e-12);
    CHECK(std::abs(psi.amps[qukit::basis_index(std::array{2, 2, 1}, 3)] -
                   qukit::cdouble{expected, 0.0}) < 1e-12);
}

TEST_CASE("gen random with a fixed seed is byte-identical") {
    CliFixture cli;
    const auto a = cli.file("a.json");
    const auto b = cli.file("b.json");
    REQUIRE(cli.run("gen random --n 3 --k 2 --seed 7 --out " + a.string()).exit_code == 0);
    REQUIRE(cli.run("gen random --n 3 --k 2 --seed 7 --out " + b.string()).exit_code == 0);
    CHECK(slurp(a) == slurp(b));

    const auto c = cli.file("c.json");
    REQUIRE(cli.run("gen random --n 3 --k 2 --seed 8 --out " + c.string()).exit_code == 0);
    CHECK(slurp(a) != slurp(c));
}

TEST_CASE("classify exit codes: product 0, entangled 1, malformed 2") {
    CliFixture cli;
    const auto coherent = cli.file("coherent.json");
    REQUIRE(cli.run("gen coherent --n 3 --k 2 --tau 0.5+0.5i --out " +
                    coherent.string())
                .exit_code == 0);
    const RunResult product = cli.run("classify " + coherent.string());
    CHECK(product.exit_code == 0);
    CHECK(product.out.find("\"verdict\": \"product\"") != std::string::npos);

    const auto dicke = cli.file("w.json");
    REQUIRE(cli.run("gen dicke --occ 2,1 --out " + dicke.string()).exit_code == 0);
    const RunResult entangled = cli.run("classify " + dicke.string());
    CHECK(entangled.exit_code == 1);
    CHECK(entangled.out.find("\"verdict\": \"entangled\"") != std::string::npos);

    const auto broken = cli.file("broken.json");
    std::ofstream(broken) << "{\"n_sites\": 2,";
    CHECK(cli.run("classify " + broken.string()).exit_code == 2);
}

TEST_CASE("project writes a compressed file that classify understands") {
    CliFixture cli;
    const auto state = cli.file("coh.json");
    const auto sym = cli.file("coh_sym.json");
    REQUIRE(cli.run("gen coherent --n 4 --k 3 --tau 0.3,0.2-0.1i --out " +
                    state.string())
                .exit_code == 0);
    const RunResult proj =
        cli.run("project " + state.string() + " --out " + sym.string());
    REQUIRE(proj.exit_code == 0);
    CHECK(proj.out.find("\"residual_norm\"") != std::string::npos);

    const RunResult verdict = cli.run("classify " + sym.string());
    CHECK(verdict.exit_code == 0);
    CHECK(verdict.out.find("\"chart\"") != std::string::npos);

    // an entangled symmetric state through the same compressed path
    const auto w_state = cli.file("w2.json");
    const auto w_sym = cli.file("w2_sym.json");
    REQUIRE(cli.run("gen dicke --occ 2,1 --out " + w_state.string()).exit_code == 0);
    REQUIRE(cli.run("project " + w_state.string() + " --out " + w_sym.string())
                .exit_code == 0);
    const RunResult w_verdict = cli.run("classify " + w_sym.string());
    CHECK(w_verdict.exit_code == 1);
    CHECK(w_verdict.out.find("\"verdict\": \"entangled\"") != std::string::npos);

    // An S-perp-heavy state classifies as entangled after projecting? No:
    // projection keeps only the symmetric part, so classify the full state.
    const auto rand_state = cli.file("rand.json");
    REQUIRE(cli.run("gen random --n 3 --k 2 --seed 3 --out " + rand_state.string())
                .exit_code == 0);
    CHECK(cli.run("classify " + rand_state.string()).exit_code == 1);
}

TEST_CASE("gen product states classify as product") {
    CliFixture cli;
    const auto out = cli.file("product.json");
    REQUIRE(cli.run("gen product --n 4 --k 3 --seed 5 --out " + out.string())
                .exit_code == 0);
    CHECK(cli.run("classify " + out.string()).exit_code == 0);
}

TEST_CASE("verify emits byte-identical reports for a fixed seed") {
    CliFixture cli;
    const std::string args = "verify --n 3 --k 2 --samples 20 --seed 1";
    const RunResult first = cli.run(args);
    const RunResult second = cli.run(args);
    REQUIRE(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find("\"theorem1_pass\": 20") != std::string::npos);
    CHECK(first.out.find("\"theorem2_pass\": 20") != std::string::npos);

    // worker-pool runs merge order-independently into the same report
    const RunResult threaded = cli.run(args + " --threads 4");
    REQUIRE(threaded.exit_code == 0);
    CHECK(threaded.out == first.out);
}

TEST_CASE("size guards exit with code 3") {
    CliFixture cli;
    CHECK(cli.run("bench --n 20 --k 3 --mode full").exit_code == 3);
    CHECK(cli.run("gen random --n 21 --k 2 --out " + cli.file("big.json").string())
              .exit_code == 3);
}

TEST_CASE("bench compressed at N=20 K=3 reports dim 231") {
    CliFixture cli;
    const RunResult r = cli.run("bench --n 20 --k 3 --mode compressed --reps 5");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("\"dim\": 231") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CliFixture cli;
    CHECK(cli.run("gen coherent --n 3 --k 2 --out " +
                  cli.file("missing_tau.json").string())
              .exit_code == 2);
    CHECK(cli.run("gen dicke --occ 1,2,0 --n 7 --out " +
                  cli.file("bad_n.json").string())
              .exit_code == 2);
    CHECK(cli.run("nonsense").exit_code == 2);
}
