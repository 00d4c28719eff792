#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qpolymat/identities.hpp"
#include "qpolymat/qfuncs.hpp"
#include "support/fixtures.hpp"

using namespace qpolymat;
using namespace qpolymat::testing;

namespace {

ExactPoly xy(int ex, int ey, const mpq_class& c = 1) {
    return ExactPoly::monomial(ring_xy(), {ex, ey}, c);
}

}  // namespace

TEST_CASE("higher enumerators of the example code, all routes") {
    RankMetricCode C = example_code();
    QMPolymatroid P = from_code(C);
    std::vector<ExactPoly> expected{xy(2, 0), xy(0, 2, 7), xy(0, 2, 7), xy(0, 2, 1)};
    for (int r = 0; r <= 3; ++r) {
        CHECK(higher_enumerator_brute(C, r) == expected[r]);
        CHECK(greene_cj_form(C, r) == expected[r]);
        CHECK(higher_enumerator_greene(C, P, r) == expected[r]);
        for (int t = 1; t <= std::max(1, r); ++t)
            CHECK(higher_enumerator_truncated(C, P, r, t) == expected[r]);
    }
    CHECK_THROWS_AS(higher_enumerator_brute(C, 4), std::invalid_argument);
    CHECK_THROWS_AS(higher_enumerator_brute(C, -1), std::invalid_argument);
}

TEST_CASE("zero code enumerators") {
    RankMetricCode zero(Field(2), 2, 3, {});
    CHECK(higher_enumerator_brute(zero, 0) == xy(2, 0));
    CHECK(higher_enumerator_greene(zero, 0) == xy(2, 0));
}

TEST_CASE("all enumerator routes agree on random codes") {
    auto corpus = build_corpus(40, 71);
    for (const auto& C : corpus) {
        QMPolymatroid P = from_code(C);
        for (int r = 0; r <= C.dim(); ++r) {
            ExactPoly brute = higher_enumerator_brute(C, r);
            CHECK(brute == higher_enumerator_greene(C, P, r));
            for (int t = 1; t <= std::max(1, r); ++t)
                CHECK(brute == higher_enumerator_truncated(C, P, r, t));
        }
    }
}

TEST_CASE("moment tables of the example code") {
    RankMetricCode C = example_code();
    MomentTable mt = moments_from_code(C);
    mpz_class q(2);
    for (int w = 0; w <= 2; ++w) CHECK(mt.b(0, w) == qbinom_z(2, w, q));
    CHECK(mt.b(1, 2) == 7);
    CHECK(mt.b(1, 1) == 0);
    CHECK(mt.n_count(3, 2) == 1);
    CHECK(mt.n_count(0, 1) == 3);
    CHECK(mt.n_count(0, 0) == 1);
    CHECK(mt.n_count(1, 2) == 0);
}

TEST_CASE("moment table invariants over the corpus") {
    auto corpus = build_corpus(20, 70);
    for (const auto& C : corpus) {
        MomentTable mt = moments_from_code(C);
        mpz_class q(static_cast<long>(C.field().q()));
        for (int w = 0; w <= mt.n; ++w) {
            CHECK(mt.b(0, w) == qbinom_z(mt.n, w, q));
            mpz_class total = 0;
            for (int a = 0; a <= mt.k; ++a) total += mt.n_count(a, w);
            CHECK(total == qbinom_z(mt.n, w, q));
        }
    }
}

TEST_CASE("inverse Greene on the example code") {
    RankMetricCode C = example_code();
    MomentTable mt = moments_from_code(C);
    CHECK(inverse_greene(mt, 3) == rank_gen_R(from_code(C)));
}

TEST_CASE("inverse Greene on the zero code") {
    RankMetricCode zero(Field(2), 2, 3, {});
    MomentTable mt = moments_from_code(zero);
    // N^(0)(w) = [n choose w]_q, so R = sum_w [n w]_q X2^{mw} g_w
    mpz_class q(2);
    ExactPoly expected(ring_R());
    for (int w = 0; w <= 2; ++w) {
        ExactPoly mono = ExactPoly::monomial(ring_R(), {0, 3 * w, 0, 0}, qbinom(2, 2 - w, q));
        expected += mono * g_poly(w, q, ring_R(), 2, 3);
    }
    CHECK(inverse_greene(mt, 3) == expected);
    CHECK(inverse_greene(mt, 3) == rank_gen_R(from_code(zero)));
}

TEST_CASE("lambda extraction") {
    mpz_class q(2);
    // F = y^n: b_n = 1, all other b_w = 0
    for (int n = 1; n <= 3; ++n) {
        CHECK(lambda_extract(xy(0, n), n, n, q) == 1);
        for (int w = 0; w < n; ++w) CHECK(lambda_extract(xy(0, n), w, n, q) == 0);
    }

    // the example code's W^(1) recovers B^(1)(w)
    RankMetricCode C = example_code();
    MomentTable mt = moments_from_code(C);
    ExactPoly w1 = higher_enumerator_greene(C, 1);
    for (int w = 0; w <= 2; ++w)
        CHECK(lambda_extract(w1, w, 2, q) == mpq_class(mt.b(1, w)));
}

TEST_CASE("lambda extraction round-trips random coefficient vectors") {
    Rng rng(72);
    for (unsigned qv : {2u, 3u}) {
        mpz_class q(static_cast<long>(qv));
        for (int n = 1; n <= 4; ++n)
            for (int trial = 0; trial < 10; ++trial) {
                std::vector<int> b(n + 1);
                for (auto& v : b) v = rng.below(20) - 4;
                ExactPoly F(ring_xy());
                for (int w = 0; w <= n; ++w)
                    F += xy(0, w, b[w]) * g_poly(n - w, q, ring_xy(), 0, 1);
                for (int w = 0; w <= n; ++w) CHECK(lambda_extract(F, w, n, q) == b[w]);
            }
    }
}

TEST_CASE("R from the enumerator family") {
    RankMetricCode C = example_code();
    QMPolymatroid P = from_code(C);
    CHECK(r_from_enumerators(enumerator_family(C, P), 3) == rank_gen_R(P));

    RankMetricCode zero(Field(2), 2, 3, {});
    EnumeratorFamily zf{2, 0, 2, {xy(2, 0)}};
    CHECK(r_from_enumerators(zf, 3) == rank_gen_R(from_code(zero)));
}

TEST_CASE("support distributions from the rank function") {
    RankMetricCode C = example_code();
    QMPolymatroid P = from_code(C);
    Field f2(2);
    Subspace full = Subspace::span(f2, 2, {{1, 0}, {0, 1}});

    SupportDistribution a1 = a_from_rho(P, 1);
    CHECK(a1.table.size() == 1);
    CHECK(a1.at(full) == 7);

    for (int r = 0; r <= 3; ++r)
        CHECK(a_from_rho(P, r).table == support_distribution(C, r).table);
}

TEST_CASE("rank function from A^(1)") {
    RankMetricCode C = example_code();
    QMPolymatroid P = from_code(C);
    CHECK(rho_from_a1(support_distribution(C, 1), C.lattice(), C.m()) == P);

    RankMetricCode zero(Field(2), 2, 3, {});
    QMPolymatroid Pz = rho_from_a1(SupportDistribution{1, {}}, zero.lattice(), 3);
    CHECK(Pz == from_code(zero));
}

TEST_CASE("unrealizable distributions are rejected") {
    Field f2(2);
    LatticePtr lat = make_lattice(f2, 2);
    SupportDistribution bad{1, {}};
    bad.table[Subspace::span(f2, 2, {{1, 0}})] = 2;  // 1 + (q-1)*2 = 3, not a power of 2
    CHECK_THROWS_AS(rho_from_a1(bad, lat, 3), VerificationError);
}

TEST_CASE("A <-> rho equivalence on random codes") {
    auto corpus = build_corpus(30, 73);
    for (const auto& C : corpus) {
        QMPolymatroid P = from_code(C);
        for (int r = 0; r <= C.dim(); ++r)
            CHECK(a_from_rho(P, r).table == support_distribution(C, r).table);
        SupportDistribution a1 =
            C.dim() >= 1 ? support_distribution(C, 1) : SupportDistribution{1, {}};
        CHECK(rho_from_a1(a1, C.lattice(), C.m()) == P);
    }
}

TEST_CASE("minimal supports via cocircuits of truncations") {
    RankMetricCode C = example_code();
    QMPolymatroid P = from_code(C);
    Field f2(2);
    Subspace full = Subspace::span(f2, 2, {{1, 0}, {0, 1}});
    CHECK(minimal_supports_via_cocircuits(P, 1) == std::vector<Subspace>{full});

    MatrixGF rank1(f2, 2, 3, {1, 0, 1, 0, 0, 0});
    RankMetricCode single(f2, 2, 3, {rank1});
    CHECK(minimal_supports_via_cocircuits(from_code(single), 1) ==
          std::vector<Subspace>{Subspace::span(f2, 2, {{1, 0}})});

    auto corpus = build_corpus(30, 74);
    for (const auto& code : corpus) {
        QMPolymatroid Q = from_code(code);
        for (int r = 1; r <= code.dim(); ++r) {
            std::vector<Subspace> direct = min_supports(code, r);
            std::vector<Subspace> via = minimal_supports_via_cocircuits(Q, r);
            std::sort(direct.begin(), direct.end());
            std::sort(via.begin(), via.end());
            CHECK(direct == via);
        }
    }
}

TEST_CASE("girth-distance equality and Singleton bound") {
    RankMetricCode C = example_code();
    SingletonReport report = singleton_check(C);
    REQUIRE(report.rows.size() == 3);
    CHECK(report.pass());
    CHECK(report.rows[0].d == 2);
    CHECK(report.rows[0].bound == 2);  // 2 - floor(2/3); MRD meets it with equality

    auto corpus = build_corpus(30, 75);
    for (const auto& code : corpus)
        if (code.dim() >= 1) CHECK(singleton_check(code).pass());
}

TEST_CASE("MacWilliams identity for binomial moments") {
    Field f2(2);
    RankMetricCode zero(f2, 2, 3, {});
    CHECK(macwilliams_moments(zero).pass);

    RankMetricCode C = example_code();
    CHECK(macwilliams_moments(C).pass);

    // (j, r) = (2, 1): LHS = 7 and only l = 0 contributes on the RHS
    MomentTable mt = moments_from_code(C);
    MomentTable dual_mt = moments_from_code(dual_code(C));
    mpz_class q(2);
    CHECK(mt.b(1, 2) == 7);
    CHECK(qbinom(3, 1, q) * dual_mt.b(0, 0) == 7);

    auto corpus = build_corpus(25, 76);
    for (const auto& code : corpus) {
        MacWilliamsReport rep = macwilliams_moments(code);
        if (!rep.pass) FAIL(rep.witness);
    }
}

TEST_CASE("Klove identity at the polymatroid level") {
    QMPolymatroid U = uniform(1, 2, 3, Field(2));
    CHECK(klove_polymatroid(U, 0) == xy(2, 0));
    // U(1; 2, 3) is self-dual
    for (int r = 0; r <= 3; ++r) CHECK(klove_polymatroid(U, r) == w_poly(U, r));

    auto corpus = build_corpus(20, 77);
    for (const auto& C : corpus) {
        QMPolymatroid P = from_code(C);
        QMPolymatroid Pd = dual(P);
        for (int r = 0; r <= 3; ++r) CHECK(klove_polymatroid(P, r) == w_poly(Pd, r));
    }
}

TEST_CASE("Klove corollary against brute-force dual enumerators") {
    RankMetricCode C = example_code();
    RankMetricCode D = dual_code(C);
    CHECK(klove_code(C, 0) == xy(2, 0));
    CHECK(klove_code(C, 1) == higher_enumerator_brute(D, 1));
    CHECK(klove_code(C, 3) == higher_enumerator_brute(D, 3));
    CHECK_THROWS_AS(klove_code(C, 4), std::invalid_argument);  // r > nm - k

    auto corpus = build_corpus(15, 78);
    for (const auto& code : corpus) {
        RankMetricCode dual_c = dual_code(code);
        int rmax = std::min(2, code.n() * code.m() - code.dim());
        for (int r = 0; r <= rmax; ++r) {
            if (num_subcodes(dual_c, r) > 200000) continue;
            CHECK(klove_code(code, r) == higher_enumerator_brute(dual_c, r));
        }
    }
}

TEST_CASE("MRD detection and closed forms") {
    RankMetricCode C = example_code();
    CHECK(mrd_check(C));
    CHECK(*min_distance(C) == 2);

    mpz_class q(2);
    CHECK(mrd_enumerator(2, 3, q, 2, 3, 0) == xy(2, 0));
    CHECK(mrd_enumerator(2, 3, q, 2, 3, 1) == xy(0, 2, 7));
    CHECK(mrd_enumerator(2, 3, q, 2, 3, 2) == xy(0, 2, 7));
    CHECK(mrd_enumerator(2, 3, q, 2, 3, 3) == xy(0, 2, 1));
    CHECK_THROWS_AS(mrd_enumerator(2, 3, q, 2, 4, 1), std::invalid_argument);

    MrdReport report = mrd_report(C);
    CHECK(report.is_mrd);
    CHECK(report.formula_stated_range);
    CHECK(report.formulas_match);

    RankMetricCode zero(Field(2), 2, 3, {});
    CHECK(!mrd_check(zero));
    CHECK(!min_distance(zero).has_value());
}

TEST_CASE("full matrix spaces are MRD with d = 1") {
    // k = nm = m(n - 1 + 1)
    for (unsigned qv : {2u, 3u}) {
        Field f(qv);
        RankMetricCode full = dual_code(RankMetricCode(f, 2, 3, {}));
        CHECK(mrd_check(full));
        MrdReport report = mrd_report(full);
        CHECK(report.formulas_match);
    }
}

TEST_CASE("randomly found MRD codes match the closed form") {
    // search 3-dimensional codes in Mat(2x3, F_2) whose nonzero codewords
    // all have rank 2
    Rng rng(79);
    Field f2(2);
    LatticePtr lat = make_lattice(f2, 2);
    int found = 0;
    for (int trial = 0; trial < 400 && found < 5; ++trial) {
        std::vector<MatrixGF> gens;
        for (int t = 0; t < 3; ++t) gens.push_back(random_matrix(rng, f2, 2, 3));
        RankMetricCode C(f2, 2, 3, gens, lat);
        if (C.dim() != 3 || !mrd_check(C)) continue;
        ++found;
        QMPolymatroid P = from_code(C);
        CHECK(P == uniform(1, 3, lat));  // MRD codes induce the uniform polymatroid
        for (int r = 0; r <= 3; ++r)
            CHECK(mrd_enumerator(2, 3, mpz_class(2), 2, 3, r) == higher_enumerator_greene(C, P, r));
    }
    CHECK(found == 5);
}

TEST_CASE("klove rejects negative r") {
    CHECK_THROWS_AS(klove_polymatroid(from_code(example_code()), -1), std::invalid_argument);
}

TEST_CASE("routes agree over F_5 as well") {
    Rng rng(80);
    Field f5(5);
    LatticePtr lat = make_lattice(f5, 2);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<MatrixGF> gens;
        for (int t = 0; t < 2; ++t) gens.push_back(random_matrix(rng, f5, 2, 2));
        RankMetricCode C(f5, 2, 2, gens, lat);
        QMPolymatroid P = from_code(C);
        CHECK(!check_axioms(P));
        CHECK(dual(P) == from_code(dual_code(C)));
        for (int r = 0; r <= C.dim(); ++r) {
            ExactPoly brute = higher_enumerator_brute(C, r);
            CHECK(brute == higher_enumerator_greene(C, P, r));
            for (int t = 1; t <= std::max(1, r); ++t)
                CHECK(brute == higher_enumerator_truncated(C, P, r, t));
            CHECK(brute == klove_polymatroid(dual(P), r));
        }
        CHECK(macwilliams_moments(C).pass);
        CHECK(r_from_enumerators(enumerator_family(C, P), C.m()) == rank_gen_R(P));
    }
}
