// Acceptance suite: one pass/fail line per criterion, exit 0 only if all
// criteria hold. Exact comparisons throughout; the only tolerances are the
// two wall-clock budgets stated with criteria 1 and 5.

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "qpolymat/identities.hpp"
#include "qpolymat/qfuncs.hpp"
#include "qpolymat/verify.hpp"
#include "support/fixtures.hpp"

using namespace qpolymat;
using namespace qpolymat::testing;

namespace {

constexpr std::uint64_t kCorpusSeed = 20260808;
constexpr size_t kCorpusSize = 220;

struct Outcome {
    int id;
    std::string name;
    bool pass;
    std::string detail;
};

std::vector<Outcome> results;

void record(int id, const std::string& name, bool pass, const std::string& detail = "") {
    results.push_back({id, name, pass, detail});
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ExactPoly xy(int ex, int ey, const mpq_class& c = 1) {
    return ExactPoly::monomial(ring_xy(), {ex, ey}, c);
}

ExactPoly example_rank_gen() {
    ExactPoly x1 = ExactPoly::variable(ring_R(), 0);
    ExactPoly x2 = ExactPoly::variable(ring_R(), 1);
    ExactPoly x3 = ExactPoly::variable(ring_R(), 2);
    ExactPoly x4 = ExactPoly::variable(ring_R(), 3);
    return x1.pow(3) + (x3 - x4).scaled(3) + x2.pow(3) * (x3 - x4) * (x3 - x4.scaled(2));
}

void criterion_1_example_rank_gen() {
    auto t0 = std::chrono::steady_clock::now();
    RankMetricCode C = example_code();
    ExactPoly R = rank_gen_R(from_code(C));
    double elapsed = seconds_since(t0);
    bool equal = (R == example_rank_gen());
    std::ostringstream os;
    os << "computed in " << elapsed << " s";
    record(1, "worked-example rank generating function", equal && elapsed < 1.0,
           equal ? os.str() : "polynomial mismatch: " + R.to_string());
}

void criterion_2_shiromoto() {
    RankMetricCode C = example_code();
    QMPolymatroid P = from_code(C);
    ExactPoly W = mth_root_substitute(rank_gen_R(P), C.n(), C.m(), P.rank(), 2);
    bool ok = (W == xy(2, 0) + xy(0, 2, 7));
    ok = ok && (weight_distribution(C) == std::vector<mpz_class>{1, 0, 7});
    ExactPoly brute(ring_xy());
    std::vector<mpz_class> A = weight_distribution(C);
    for (int w = 0; w <= C.n(); ++w) brute.add_term({C.n() - w, w}, mpq_class(A[w]));
    ok = ok && (W == brute);
    record(2, "Shiromoto specialization x^2 + 7y^2", ok, ok ? "" : W.to_string());
}

void criterion_3_higher_enumerators() {
    RankMetricCode C = example_code();
    QMPolymatroid P = from_code(C);
    std::vector<ExactPoly> expected{xy(2, 0), xy(0, 2, 7), xy(0, 2, 7), xy(0, 2, 1)};
    bool ok = true;
    std::string detail;
    for (int r = 0; r <= 3 && ok; ++r) {
        ok = ok && higher_enumerator_brute(C, r) == expected[r];
        ok = ok && greene_cj_form(C, r) == expected[r];
        ok = ok && w_poly(P, r) == expected[r];
        for (int t = 1; t <= std::max(1, r); ++t)
            ok = ok && higher_enumerator_truncated(C, P, r, t) == expected[r];
        if (!ok) detail = "mismatch at r = " + std::to_string(r);
    }
    record(3, "higher enumerators, all routes, worked example", ok, detail);
}

void criterion_4_mrd() {
    RankMetricCode C = example_code();
    bool ok = mrd_check(C);
    mpz_class q(2);
    ok = ok && mrd_enumerator(2, 3, q, 2, 3, 0) == xy(2, 0);
    for (int r = 1; r <= 3; ++r)
        ok = ok && mrd_enumerator(2, 3, q, 2, 3, r) == xy(0, 2, qbinom(3, r, q));
    record(4, "MRD check and closed forms, worked example", ok);
}

void criterion_5_route_agreement(const std::vector<RankMetricCode>& corpus) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    size_t mrd_hits = 0;
    for (size_t idx = 0; idx < corpus.size() && ok; ++idx) {
        const RankMetricCode& C = corpus[idx];
        QMPolymatroid P = from_code(C);
        if (check_axioms(P)) {
            ok = false;
            detail = "axiom failure at corpus index " + std::to_string(idx);
            break;
        }
        if (!(dual(P) == from_code(dual_code(C)))) {
            ok = false;
            detail = "duality mismatch at corpus index " + std::to_string(idx);
            break;
        }
        QMPolymatroid Pd = dual(P);
        MrdReport mrd = mrd_report(C);
        if (mrd.is_mrd && mrd.formula_stated_range) ++mrd_hits;
        for (int r = 0; r <= C.dim() && ok; ++r) {
            ExactPoly brute = higher_enumerator_brute(C, r);
            if (brute != greene_cj_form(C, r) || brute != w_poly(P, r)) {
                ok = false;
                detail = "Greene route mismatch at index " + std::to_string(idx) +
                         ", r = " + std::to_string(r);
                break;
            }
            for (int t = 1; t <= std::max(1, r); ++t)
                if (brute != higher_enumerator_truncated(C, P, r, t)) {
                    ok = false;
                    detail = "truncated route mismatch at index " + std::to_string(idx) +
                             ", (r, t) = (" + std::to_string(r) + ", " + std::to_string(t) + ")";
                    break;
                }
            if (ok && brute != klove_polymatroid(Pd, r)) {
                ok = false;
                detail = "Klove-on-dual mismatch at index " + std::to_string(idx) +
                         ", r = " + std::to_string(r);
            }
            if (ok && mrd.is_mrd && mrd.formula_stated_range &&
                brute != mrd_enumerator(C.n(), C.m(), mpz_class(static_cast<long>(C.field().q())),
                                        *mrd.d, C.dim(), r)) {
                ok = false;
                detail = "MRD closed form mismatch at index " + std::to_string(idx);
            }
        }
    }
    double elapsed = seconds_since(t0);
    std::ostringstream os;
    os << corpus.size() << " codes, " << mrd_hits << " MRD, " << elapsed << " s";
    record(5, "route agreement + axioms + duality over the corpus",
           ok && elapsed < 300.0, ok ? os.str() : detail);
}

void criterion_6_inverse_greene(const std::vector<RankMetricCode>& corpus) {
    bool ok = true;
    std::string detail;
    for (size_t idx = 0; idx < corpus.size() && ok; ++idx) {
        const RankMetricCode& C = corpus[idx];
        QMPolymatroid P = from_code(C);
        ExactPoly R = rank_gen_R(P);
        if (r_from_enumerators(enumerator_family(C, P), C.m()) != R ||
            inverse_greene(moments_from_code(C), C.m()) != R) {
            ok = false;
            detail = "round trip failed at corpus index " + std::to_string(idx);
        }
    }
    record(6, "inverse-Greene round trips over the corpus", ok, detail);
}

void criterion_7_equivalence(const std::vector<RankMetricCode>& corpus) {
    bool ok = true;
    std::string detail;
    for (size_t idx = 0; idx < corpus.size() && ok; ++idx) {
        const RankMetricCode& C = corpus[idx];
        QMPolymatroid P = from_code(C);
        try {
            for (int r = 0; r <= C.dim() && ok; ++r)
                if (a_from_rho(P, r).table != support_distribution(C, r).table) {
                    ok = false;
                    detail = "A^(r) mismatch at index " + std::to_string(idx);
                }
            SupportDistribution a1 =
                C.dim() >= 1 ? support_distribution(C, 1) : SupportDistribution{1, {}};
            if (ok && !(rho_from_a1(a1, C.lattice(), C.m()) == P)) {
                ok = false;
                detail = "rho reconstruction mismatch at index " + std::to_string(idx);
            }
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception at index ") + std::to_string(idx) + ": " + e.what();
        }
    }
    record(7, "A <-> rho equivalence over the corpus", ok, detail);
}

void criterion_8_cocircuits(const std::vector<RankMetricCode>& corpus) {
    bool ok = true;
    std::string detail;
    for (size_t idx = 0; idx < corpus.size() && ok; ++idx) {
        const RankMetricCode& C = corpus[idx];
        if (C.dim() == 0) continue;
        QMPolymatroid P = from_code(C);
        for (int r = 1; r <= C.dim() && ok; ++r) {
            std::vector<Subspace> direct = min_supports(C, r);
            std::vector<Subspace> via = minimal_supports_via_cocircuits(P, r);
            std::sort(direct.begin(), direct.end());
            std::sort(via.begin(), via.end());
            if (direct != via) {
                ok = false;
                detail = "cocircuit mismatch at index " + std::to_string(idx);
            }
        }
        if (ok && !singleton_check(C).pass()) {
            ok = false;
            detail = "girth/Singleton failure at index " + std::to_string(idx);
        }
    }
    // MRD code meets the bound with equality at r = 1
    if (ok) {
        SingletonReport rep = singleton_check(example_code());
        ok = rep.rows[0].d == rep.rows[0].bound;
        if (!ok) detail = "worked example does not meet the Singleton bound with equality";
    }
    record(8, "cocircuit theorem, girth equality, Singleton bound", ok, detail);
}

void criterion_9_macwilliams(const std::vector<RankMetricCode>& corpus) {
    bool ok = true;
    std::string detail;
    size_t negative_cases = 0;
    for (size_t idx = 0; idx < corpus.size() && ok; ++idx) {
        const RankMetricCode& C = corpus[idx];
        if (C.dim() - C.m() * C.n() < 0) ++negative_cases;  // j = 0 column uses a negative upper argument
        MacWilliamsReport rep = macwilliams_moments(C);
        if (!rep.pass) {
            ok = false;
            detail = "index " + std::to_string(idx) + ": " + rep.witness;
        }
    }
    ok = ok && negative_cases > 0;
    std::ostringstream os;
    os << negative_cases << " codes exercised negative upper arguments";
    record(9, "binomial-moment MacWilliams identity over the corpus", ok,
           ok ? os.str() : detail);
}

void criterion_10_klove(const std::vector<RankMetricCode>& corpus) {
    bool ok = true;
    std::string detail;
    size_t code_comparisons = 0;
    for (size_t idx = 0; idx < corpus.size() && ok; ++idx) {
        const RankMetricCode& C = corpus[idx];
        QMPolymatroid P = from_code(C);
        QMPolymatroid Pd = dual(P);
        for (int r = 0; r <= 3 && ok; ++r)
            if (klove_polymatroid(P, r) != w_poly(Pd, r)) {
                ok = false;
                detail = "polymatroid identity failed at index " + std::to_string(idx) +
                         ", r = " + std::to_string(r);
            }
        if (!ok) break;
        RankMetricCode D = dual_code(C);
        int rmax = std::min(3, C.n() * C.m() - C.dim());
        for (int r = 0; r <= rmax && ok; ++r) {
            if (num_subcodes(D, r) > static_cast<long>(C.cap())) continue;
            if (klove_code(C, r) != higher_enumerator_brute(D, r)) {
                ok = false;
                detail = "code corollary failed at index " + std::to_string(idx) +
                         ", r = " + std::to_string(r);
            } else {
                ++code_comparisons;
            }
        }
    }
    ok = ok && code_comparisons >= 100;
    std::ostringstream os;
    os << code_comparisons << " code-level comparisons";
    record(10, "Klove identity (polymatroid + code corollary)", ok, ok ? os.str() : detail);
}

void criterion_11_lemmas() {
    SuiteReport rep = verify_lemmas(kCorpusSeed);
    std::string detail;
    for (const auto& line : rep.lines)
        if (!line.pass) detail += line.name + "; ";
    record(11, "algebraic lemma suite", rep.pass(), detail);
}

void criterion_12_uniform_closed_form() {
    bool ok = true;
    std::string detail;
    for (unsigned qv : {2u, 3u}) {
        Field f(qv);
        mpz_class q(static_cast<long>(qv));
        for (int n = 0; n <= 4 && ok; ++n) {
            LatticePtr lat = make_lattice(f, n);
            for (int m = 1; m <= 3 && ok; ++m)
                for (int ell = 0; ell <= n && ok; ++ell) {
                    QMPolymatroid U = uniform(ell, m, lat);
                    ExactPoly R = rank_gen_R(U);
                    if (R != rank_gen_uniform_closed(ell, n, m, q)) {
                        ok = false;
                        detail = "closed form mismatch at (q, n, m, ell)";
                    }
                    if (ok && whitney_to_R(whitney(U), m, U.rank(), q) != R) {
                        ok = false;
                        detail = "Whitney round trip mismatch";
                    }
                }
        }
    }
    record(12, "uniform closed form and Whitney round trip", ok, detail);
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<RankMetricCode> corpus = build_corpus(kCorpusSize, kCorpusSeed);

    criterion_1_example_rank_gen();
    criterion_2_shiromoto();
    criterion_3_higher_enumerators();
    criterion_4_mrd();
    criterion_5_route_agreement(corpus);
    criterion_6_inverse_greene(corpus);
    criterion_7_equivalence(corpus);
    criterion_8_cocircuits(corpus);
    criterion_9_macwilliams(corpus);
    criterion_10_klove(corpus);
    criterion_11_lemmas();
    criterion_12_uniform_closed_form();

    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": " << r.name;
        if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
        all = all && r.pass;
    }
    std::cout << (all ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " in "
              << seconds_since(t0) << " s\n";
    return all ? 0 : 1;
}
