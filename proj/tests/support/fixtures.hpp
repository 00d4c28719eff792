#pragma once

#include <map>
#include <vector>

#include "qpolymat/code.hpp"
#include "qpolymat/rng.hpp"

namespace qpolymat::testing {

/// The 2x3 binary code <M1, M2, M3> used as the worked example everywhere:
/// every nonzero codeword has rank 2.
inline RankMetricCode example_code() {
    Field f(2);
    std::vector<MatrixGF> gens{
        MatrixGF(f, 2, 3, {1, 0, 0, 0, 1, 0}),
        MatrixGF(f, 2, 3, {0, 1, 0, 0, 0, 1}),
        MatrixGF(f, 2, 3, {0, 0, 1, 1, 1, 0}),
    };
    return RankMetricCode(f, 2, 3, gens);
}

inline MatrixGF example_m1() { return MatrixGF(Field(2), 2, 3, {1, 0, 0, 0, 1, 0}); }
inline MatrixGF example_m2() { return MatrixGF(Field(2), 2, 3, {0, 1, 0, 0, 0, 1}); }
inline MatrixGF example_m3() { return MatrixGF(Field(2), 2, 3, {0, 0, 1, 1, 1, 0}); }

inline MatrixGF random_matrix(Rng& rng, const Field& f, int rows, int cols) {
    MatrixGF M(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) M.set(i, j, rng.below(f.iq()));
    return M;
}

/// Deterministic corpus of random codes: q in {2, 3}, n, m in {1..3},
/// dim <= 4, lattices shared per (q, n).
inline std::vector<RankMetricCode> build_corpus(size_t min_count, std::uint64_t seed) {
    Rng rng(seed);
    std::map<std::pair<unsigned, int>, LatticePtr> lattices;
    std::vector<RankMetricCode> codes;
    const unsigned qs[2] = {2, 3};
    while (codes.size() < min_count) {
        Field f(qs[rng.below(2)]);
        int n = 1 + rng.below(3);
        int m = 1 + rng.below(3);
        int k_target = rng.below(std::min(4, n * m) + 1);
        auto key = std::make_pair(f.q(), n);
        auto it = lattices.find(key);
        if (it == lattices.end()) it = lattices.emplace(key, make_lattice(f, n)).first;
        std::vector<MatrixGF> gens;
        for (int t = 0; t < k_target; ++t) gens.push_back(random_matrix(rng, f, n, m));
        codes.emplace_back(f, n, m, gens, it->second);
    }
    return codes;
}

}  // namespace qpolymat::testing
