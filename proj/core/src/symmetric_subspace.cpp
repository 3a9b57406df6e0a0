#include "qukit/symmetric_subspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

namespace qukit {

namespace {

void validate_occupation(const Occupation& occ) {
    if (occ.local_dim() < 2)
        throw IndexError("occupation needs at least 2 slots");
    int total = 0;
    for (int c : occ.counts) {
        if (c < 0) throw IndexError("occupation count < 0");
        total += c;
    }
    if (total < 1) throw IndexError("occupation sums to zero");
}

/// Word 1^n_1 2^n_2 ... K^n_K in ascending label order, the starting point
/// for multiset permutation enumeration.
std::vector<int> sorted_word(const Occupation& occ) {
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(occ.n_sites()));
    for (int k = 0; k < occ.local_dim(); ++k)
        word.insert(word.end(), static_cast<std::size_t>(occ.counts[static_cast<std::size_t>(k)]),
                    k + 1);
    return word;
}

std::map<std::vector<int>, std::size_t> rank_table(int n_sites, int local_dim) {
    std::map<std::vector<int>, std::size_t> table;
    const auto occs = enumerate_occupations(n_sites, local_dim);
    for (std::size_t r = 0; r < occs.size(); ++r) table[occs[r].counts] = r;
    return table;
}

} // namespace

int Occupation::n_sites() const {
    int total = 0;
    for (int c : counts) total += c;
    return total;
}

std::uint64_t factorial(int n) {
    if (n < 0) throw IndexError("factorial of a negative number");
    if (n > 20) throw SizeError("factorial(" + std::to_string(n) + ") overflows 64 bits");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > std::numeric_limits<std::uint64_t>::max())
            throw SizeError("binomial overflows 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t multinomial(const Occupation& occ) {
    validate_occupation(occ);
    // Product of binomials: choose n_1 positions, then n_2 of the rest, ...
    unsigned __int128 r = 1;
    int remaining = occ.n_sites();
    for (int c : occ.counts) {
        r *= binomial(remaining, c);
        if (r > std::numeric_limits<std::uint64_t>::max())
            throw SizeError("multinomial overflows 64 bits");
        remaining -= c;
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t symmetric_dimension(int n_sites, int local_dim) {
    if (n_sites < 0 || local_dim < 1)
        throw IndexError("symmetric_dimension: bad shape");
    return binomial(n_sites + local_dim - 1, n_sites);
}

std::vector<Occupation> enumerate_occupations(int n_sites, int local_dim) {
    if (n_sites < 1 || local_dim < 2)
        throw IndexError("enumerate_occupations: need N >= 1, K >= 2");
    std::vector<Occupation> out;
    out.reserve(symmetric_dimension(n_sites, local_dim));
    std::vector<int> current(static_cast<std::size_t>(local_dim), 0);

    // Descending choice per slot yields the lexicographically decreasing order.
    auto rec = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == local_dim - 1) {
            current[static_cast<std::size_t>(slot)] = remaining;
            out.push_back(Occupation{current});
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            current[static_cast<std::size_t>(slot)] = v;
            self(self, slot + 1, remaining - v);
        }
    };
    rec(rec, 0, n_sites);
    return out;
}

std::size_t occupation_rank(const Occupation& occ) {
    validate_occupation(occ);
    std::size_t rank = 0;
    int remaining = occ.n_sites();
    const int K = occ.local_dim();
    for (int slot = 0; slot < K - 1; ++slot) {
        const int v = occ.counts[static_cast<std::size_t>(slot)];
        // Occupations whose entry at this slot is larger all come first.
        for (int higher = remaining; higher > v; --higher)
            rank += symmetric_dimension(remaining - higher, K - slot - 1);
        remaining -= v;
    }
    return rank;
}

double SymStateCompressed::norm() const {
    const auto occs = enumerate_occupations(n_sites, local_dim);
    double s = 0.0;
    for (std::size_t r = 0; r < coeffs.size(); ++r)
        s += std::norm(coeffs[r]) * static_cast<double>(multinomial(occs[r]));
    return std::sqrt(s);
}

StateVector dicke_unnormalized(const Occupation& occ) {
    validate_occupation(occ);
    StateVector psi(occ.n_sites(), occ.local_dim());
    auto word = sorted_word(occ);
    // std::next_permutation over the multiset visits every distinct word once.
    do {
        psi.amps[basis_index(word, occ.local_dim())] = cdouble{1.0, 0.0};
    } while (std::next_permutation(word.begin(), word.end()));
    return psi;
}

StateVector dicke_normalized(const Occupation& occ) {
    StateVector psi = dicke_unnormalized(occ);
    const double scale = 1.0 / std::sqrt(static_cast<double>(multinomial(occ)));
    for (auto& a : psi.amps) a *= scale;
    return psi;
}

StateVector dicke_via_ladders(const Occupation& occ) {
    validate_occupation(occ);
    const int N = occ.n_sites();
    const int K = occ.local_dim();
    if (pow_dim(K, N) > kFullSpaceGuard)
        throw SizeError("dicke_via_ladders: K^N exceeds the full-space guard");

    // All-ones lowest weight state.
    StateVector psi(N, K);
    psi.amps[0] = cdouble{1.0, 0.0};
    for (int k = 2; k <= K; ++k) {
        const int reps = occ.counts[static_cast<std::size_t>(k - 1)];
        if (reps == 0) continue;
        const SiteOperator raise = ladder(k, 1, K);
        for (int t = 0; t < reps; ++t) psi = collective_apply(raise, psi);
    }

    // E~_{2,1}^{n_2} ... E~_{K,1}^{n_K} |1..1> = (prod_{k>=2} n_k!) x the
    // unnormalized Dicke state, so dividing by that product and by the
    // unnormalized norm sqrt(N!/prod n_k!) lands on the unit-norm state.
    double ladder_orderings = 1.0;
    for (int k = 1; k < K; ++k)
        ladder_orderings *= static_cast<double>(factorial(occ.counts[static_cast<std::size_t>(k)]));
    const double scale =
        1.0 / (ladder_orderings * std::sqrt(static_cast<double>(multinomial(occ))));
    for (auto& a : psi.amps) a *= scale;
    return psi;
}

Eigen::VectorXcd to_orthonormal(const SymStateCompressed& sym) {
    const auto occs = enumerate_occupations(sym.n_sites, sym.local_dim);
    if (sym.coeffs.size() != occs.size())
        throw ShapeError("compressed state has wrong coefficient count");
    Eigen::VectorXcd v(static_cast<Eigen::Index>(occs.size()));
    for (std::size_t r = 0; r < occs.size(); ++r)
        v(static_cast<Eigen::Index>(r)) =
            sym.coeffs[r] * std::sqrt(static_cast<double>(multinomial(occs[r])));
    return v;
}

SymStateCompressed from_orthonormal(int n_sites, int local_dim,
                                    const Eigen::VectorXcd& coeffs) {
    const auto occs = enumerate_occupations(n_sites, local_dim);
    if (static_cast<std::size_t>(coeffs.size()) != occs.size())
        throw ShapeError("orthonormal coefficient vector has wrong length");
    SymStateCompressed sym{n_sites, local_dim, {}};
    sym.coeffs.resize(occs.size());
    for (std::size_t r = 0; r < occs.size(); ++r)
        sym.coeffs[r] = coeffs(static_cast<Eigen::Index>(r)) /
                        std::sqrt(static_cast<double>(multinomial(occs[r])));
    return sym;
}

SymProjection project_symmetric(const StateVector& psi) {
    const auto occs = enumerate_occupations(psi.n_sites, psi.local_dim);
    const auto ranks = rank_table(psi.n_sites, psi.local_dim);

    // Bucket amplitude sums by the letter counts of each word.
    std::vector<cdouble> buckets(occs.size(), cdouble{0.0, 0.0});
    std::vector<int> counts(static_cast<std::size_t>(psi.local_dim));
    for (std::size_t idx = 0; idx < psi.dim(); ++idx) {
        std::fill(counts.begin(), counts.end(), 0);
        std::size_t rem = idx;
        for (int n = 0; n < psi.n_sites; ++n) {
            ++counts[rem % static_cast<std::size_t>(psi.local_dim)];
            rem /= static_cast<std::size_t>(psi.local_dim);
        }
        buckets[ranks.at(counts)] += psi.amps[idx];
    }

    SymProjection proj;
    proj.sym = SymStateCompressed{psi.n_sites, psi.local_dim, {}};
    proj.sym.coeffs.resize(occs.size());
    for (std::size_t r = 0; r < occs.size(); ++r)
        proj.sym.coeffs[r] = buckets[r] / static_cast<double>(multinomial(occs[r]));

    // Residual as an explicit vector difference; the norm-difference formula
    // would square away everything below ~1e-8.
    double res_sq = 0.0;
    for (std::size_t idx = 0; idx < psi.dim(); ++idx) {
        std::fill(counts.begin(), counts.end(), 0);
        std::size_t rem = idx;
        for (int n = 0; n < psi.n_sites; ++n) {
            ++counts[rem % static_cast<std::size_t>(psi.local_dim)];
            rem /= static_cast<std::size_t>(psi.local_dim);
        }
        res_sq += std::norm(psi.amps[idx] - proj.sym.coeffs[ranks.at(counts)]);
    }
    proj.residual_norm = std::sqrt(res_sq);
    return proj;
}

StateVector expand(const SymStateCompressed& sym) {
    const auto occs = enumerate_occupations(sym.n_sites, sym.local_dim);
    if (sym.coeffs.size() != occs.size())
        throw ShapeError("compressed state has wrong coefficient count");
    if (pow_dim(sym.local_dim, sym.n_sites) > kFullSpaceGuard)
        throw SizeError("expand: K^N exceeds the full-space guard");

    StateVector psi(sym.n_sites, sym.local_dim);
    for (std::size_t r = 0; r < occs.size(); ++r) {
        const cdouble c = sym.coeffs[r];
        if (c == cdouble{0.0, 0.0}) continue;
        auto word = sorted_word(occs[r]);
        do {
            psi.amps[basis_index(word, sym.local_dim)] += c;
        } while (std::next_permutation(word.begin(), word.end()));
    }
    return psi;
}

std::vector<std::pair<int, Occupation>> recursion_split(const Occupation& occ) {
    validate_occupation(occ);
    std::vector<std::pair<int, Occupation>> children;
    for (int k = 0; k < occ.local_dim(); ++k) {
        if (occ.counts[static_cast<std::size_t>(k)] == 0) continue; // n_k - 1 < 0
        Occupation child = occ;
        --child.counts[static_cast<std::size_t>(k)];
        children.emplace_back(k + 1, std::move(child));
    }
    return children;
}

Eigen::MatrixXcd collective_compressed(const SiteOperator& op, int n_sites) {
    const int K = op.local_dim;
    const auto occs = enumerate_occupations(n_sites, K);
    const auto dim = static_cast<Eigen::Index>(occs.size());
    if (occs.size() > kFullSpaceGuard)
        throw SizeError("collective_compressed: dim S exceeds the guard");

    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t col = 0; col < occs.size(); ++col) {
        const auto& n = occs[col].counts;
        for (int j = 0; j < K; ++j) {
            if (n[static_cast<std::size_t>(j)] == 0) continue;
            for (int i = 0; i < K; ++i) {
                const cdouble x = op.matrix(i, j);
                if (x == cdouble{0.0, 0.0}) continue;
                if (i == j) {
                    mat(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(col)) +=
                        x * static_cast<double>(n[static_cast<std::size_t>(j)]);
                    continue;
                }
                Occupation target = occs[col];
                --target.counts[static_cast<std::size_t>(j)];
                ++target.counts[static_cast<std::size_t>(i)];
                const double amp = std::sqrt(
                    static_cast<double>(n[static_cast<std::size_t>(j)]) *
                    static_cast<double>(target.counts[static_cast<std::size_t>(i)]));
                mat(static_cast<Eigen::Index>(occupation_rank(target)),
                    static_cast<Eigen::Index>(col)) += x * amp;
            }
        }
    }
    return mat;
}

SymStateCompressed relabel(const SymStateCompressed& sym, const std::vector<int>& perm) {
    const int K = sym.local_dim;
    if (static_cast<int>(perm.size()) != K)
        throw ShapeError("relabel: permutation has wrong length");
    std::vector<bool> seen(static_cast<std::size_t>(K), false);
    for (int p : perm) {
        if (p < 1 || p > K || seen[static_cast<std::size_t>(p - 1)])
            throw IndexError("relabel: not a permutation of 1..K");
        seen[static_cast<std::size_t>(p - 1)] = true;
    }

    const auto occs = enumerate_occupations(sym.n_sites, K);
    if (sym.coeffs.size() != occs.size())
        throw ShapeError("compressed state has wrong coefficient count");
    SymStateCompressed out{sym.n_sites, K, std::vector<cdouble>(sym.coeffs.size())};
    Occupation image{std::vector<int>(static_cast<std::size_t>(K))};
    for (std::size_t r = 0; r < occs.size(); ++r) {
        for (int k = 0; k < K; ++k)
            image.counts[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)] - 1)] =
                occs[r].counts[static_cast<std::size_t>(k)];
        out.coeffs[occupation_rank(image)] = sym.coeffs[r];
    }
    return out;
}

} // namespace qukit
