#include <doctest.h>

#include <array>
#include <cmath>

#include "qukit/sampling.hpp"
#include "qukit/tensor_core.hpp"

using namespace qukit;

namespace {

double max_abs_diff(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
    REQUIRE(a.size() == b.size());
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace

TEST_CASE("basis_index matches the mixed-radix definition") {
    CHECK(basis_index(std::array{1, 1}, 2) == 0);
    CHECK(basis_index(std::array{2, 1}, 2) == 2);
    // (1,2,2), K=2: 0*4 + 1*2 + 1 = 3
    CHECK(basis_index(std::array{1, 2, 2}, 2) == 3);

    CHECK_THROWS_AS(basis_index(std::array{0, 1}, 2), IndexError);
    CHECK_THROWS_AS(basis_index(std::array{1, 3}, 2), IndexError);
}

TEST_CASE("basis_index is a bijection (exhaustive N<=4, K<=3)") {
    for (int k = 2; k <= 3; ++k)
        for (int n = 1; n <= 4; ++n) {
            const std::size_t dim = pow_dim(k, n);
            std::vector<bool> seen(dim, false);
            for (std::size_t idx = 0; idx < dim; ++idx) {
                const auto word = basis_word(idx, n, k);
                const std::size_t back = basis_index(word, k);
                CHECK(back == idx);
                CHECK(!seen[back]);
                seen[back] = true;
            }
        }
}

TEST_CASE("StateVector validates its shape") {
    CHECK_THROWS_AS(StateVector(2, 2, std::vector<cdouble>(3)), ShapeError);
    CHECK_THROWS_AS(StateVector(0, 2), ShapeError);
    CHECK_THROWS_AS(StateVector(2, 1), ShapeError);
    const StateVector psi(3, 2);
    CHECK(psi.dim() == 8);
}

TEST_CASE("make_product_state expands the tensor product") {
    SUBCASE("basis word |1>|2>") {
        ProductFactors f{2, {{{1.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {1.0, 0.0}}}};
        const StateVector psi = make_product_state(f);
        CHECK(psi.amps[0] == cdouble{0.0, 0.0});
        CHECK(psi.amps[1] == cdouble{1.0, 0.0});
        CHECK(psi.amps[2] == cdouble{0.0, 0.0});
        CHECK(psi.amps[3] == cdouble{0.0, 0.0});
    }
    SUBCASE("uniform qubit pair: all four amplitudes 1/2") {
        const double r = 1.0 / std::sqrt(2.0);
        ProductFactors f{2, {{{r, 0.0}, {r, 0.0}}, {{r, 0.0}, {r, 0.0}}}};
        const StateVector psi = make_product_state(f);
        for (const auto& a : psi.amps) CHECK(std::abs(a - cdouble{0.5, 0.0}) < 1e-15);
    }
    SUBCASE("single site is the factor itself") {
        ProductFactors f{3, {{{0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}}}};
        const StateVector psi = make_product_state(f);
        CHECK(psi.amps == std::vector<cdouble>{{0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}});
    }
    SUBCASE("zero factor is rejected") {
        ProductFactors f{2, {{{0.0, 0.0}, {0.0, 0.0}}, {{1.0, 0.0}, {0.0, 0.0}}}};
        CHECK_THROWS_AS(make_product_state(f), DegenerateInput);
    }
    SUBCASE("normalized factors give a unit-norm state") {
        Rng rng(11);
        for (int trial = 0; trial < 20; ++trial) {
            const auto f = random_factors(3, 3, rng);
            CHECK(std::abs(make_product_state(f).norm() - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("inner_product is the Hermitian form") {
    SUBCASE("orthogonal basis words") {
        StateVector a(2, 2), b(2, 2);
        a.amps[basis_index(std::array{1, 1}, 2)] = 1.0;
        b.amps[basis_index(std::array{1, 2}, 2)] = 1.0;
        CHECK(inner_product(a, b) == cdouble{0.0, 0.0});
        CHECK(inner_product(a, a) == cdouble{1.0, 0.0});
    }
    SUBCASE("unnormalized |3;1,2,0> with itself is 3") {
        // |122> + |212> + |221> over K=3: indices 4, 10, 12.
        StateVector psi(3, 3);
        psi.amps[basis_index(std::array{1, 2, 2}, 3)] = 1.0;
        psi.amps[basis_index(std::array{2, 1, 2}, 3)] = 1.0;
        psi.amps[basis_index(std::array{2, 2, 1}, 3)] = 1.0;
        CHECK(inner_product(psi, psi) == cdouble{3.0, 0.0});
    }
    SUBCASE("conjugate-linear in the first argument") {
        StateVector a(1, 2, {{0.0, 1.0}, {0.0, 0.0}});
        StateVector b(1, 2, {{1.0, 0.0}, {0.0, 0.0}});
        CHECK(inner_product(a, b) == cdouble{0.0, -1.0});
    }
    SUBCASE("shape mismatch") {
        CHECK_THROWS_AS(inner_product(StateVector(2, 2), StateVector(1, 2)), ShapeError);
        CHECK_THROWS_AS(inner_product(StateVector(2, 2), StateVector(2, 3)), ShapeError);
    }
}

TEST_CASE("site_decompose splits against each site") {
    SUBCASE("|12> at site 1") {
        StateVector psi(2, 2);
        psi.amps[basis_index(std::array{1, 2}, 2)] = 1.0;
        const auto dec = site_decompose(psi, 1);
        CHECK(dec.partials[0] == std::vector<cdouble>{{0.0, 0.0}, {1.0, 0.0}});
        CHECK(dec.partials[1] == std::vector<cdouble>{{0.0, 0.0}, {0.0, 0.0}});
    }
    SUBCASE("Bell state at site 1") {
        const double r = 1.0 / std::sqrt(2.0);
        StateVector psi(2, 2);
        psi.amps[basis_index(std::array{1, 1}, 2)] = r;
        psi.amps[basis_index(std::array{2, 2}, 2)] = r;
        const auto dec = site_decompose(psi, 1);
        CHECK(max_abs_diff(dec.partials[0], {{r, 0.0}, {0.0, 0.0}}) == 0.0);
        CHECK(max_abs_diff(dec.partials[1], {{0.0, 0.0}, {r, 0.0}}) == 0.0);
    }
    SUBCASE("partials of a product state are pairwise parallel") {
        Rng rng(5);
        const auto psi = make_product_state(random_factors(3, 2, rng));
        for (int site = 1; site <= 3; ++site) {
            const auto dec = site_decompose(psi, site);
            const auto& u = dec.partials[0];
            const auto& v = dec.partials[1];
            double max_minor = 0.0;
            for (std::size_t a = 0; a + 1 < u.size(); ++a)
                for (std::size_t b = a + 1; b < u.size(); ++b)
                    max_minor = std::max(max_minor, std::abs(u[a] * v[b] - u[b] * v[a]));
            CHECK(max_minor < 1e-14);
        }
    }
    SUBCASE("site out of range") {
        CHECK_THROWS_AS(site_decompose(StateVector(2, 2), 0), IndexError);
        CHECK_THROWS_AS(site_decompose(StateVector(2, 2), 3), IndexError);
    }
}

TEST_CASE("site_decompose round trip and Parseval") {
    Rng rng(99);
    for (int k = 2; k <= 3; ++k)
        for (int n = 1; n <= 4; ++n) {
            const StateVector psi = random_state(n, k, rng);
            for (int site = 1; site <= n; ++site) {
                const auto dec = site_decompose(psi, site);

                // Reassemble sum_k |k>_site (x) u^k.
                StateVector rebuilt(n, k);
                double parseval = 0.0;
                for (int label = 1; label <= k; ++label) {
                    const auto& u = dec.partials[static_cast<std::size_t>(label - 1)];
                    for (std::size_t j = 0; j < u.size(); ++j) {
                        std::vector<int> word;
                        if (n > 1) word = basis_word(j, n - 1, k);
                        word.insert(word.begin() + (site - 1), label);
                        rebuilt.amps[basis_index(word, k)] += u[j];
                        parseval += std::norm(u[j]);
                    }
                }
                CHECK(max_abs_diff(rebuilt.amps, psi.amps) == 0.0);
                CHECK(std::abs(parseval - psi.norm_sq()) < 1e-12);
            }
        }
}

TEST_CASE("normalize") {
    SUBCASE("scales to unit norm, direction preserved") {
        StateVector psi(2, 2, {{2.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}});
        const StateVector unit = normalize(psi);
        CHECK(unit.amps[0] == cdouble{1.0, 0.0});
        CHECK(std::abs(unit.norm() - 1.0) < 1e-15);
    }
    SUBCASE("unnormalized Dicke |3;1,2,0| -> 1/sqrt(3) on each word") {
        StateVector psi(3, 3);
        psi.amps[basis_index(std::array{1, 2, 2}, 3)] = 1.0;
        psi.amps[basis_index(std::array{2, 1, 2}, 3)] = 1.0;
        psi.amps[basis_index(std::array{2, 2, 1}, 3)] = 1.0;
        const StateVector unit = normalize(psi);
        const double r = 1.0 / std::sqrt(3.0);
        CHECK(std::abs(unit.amps[basis_index(std::array{1, 2, 2}, 3)] - cdouble{r, 0.0}) <
              1e-15);
        CHECK(std::abs(unit.norm() - 1.0) < 1e-14);
    }
    SUBCASE("idempotent on normalized input") {
        Rng rng(3);
        const StateVector psi = random_state(3, 2, rng);
        const StateVector again = normalize(psi);
        CHECK(max_abs_diff(again.amps, psi.amps) < 1e-14);
    }
    SUBCASE("zero vector throws") {
        CHECK_THROWS_AS(normalize(StateVector(2, 2)), DegenerateInput);
    }
}

TEST_CASE("fidelity ignores global phase") {
    Rng rng(21);
    const StateVector psi = random_state(2, 3, rng);
    StateVector rotated = psi;
    const cdouble phase = std::polar(1.0, 1.234);
    for (auto& a : rotated.amps) a *= phase;
    CHECK(std::abs(fidelity(psi, rotated) - 1.0) < 1e-12);
}
