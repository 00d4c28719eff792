#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpolymat/code.hpp"
#include "qpolymat/mupoly.hpp"
#include "qpolymat/polymatroid.hpp"
#include "qpolymat/rankgen.hpp"

namespace qpolymat {

/// The family W^(0..k) of higher rank-weight enumerators of a code.
struct EnumeratorFamily {
    int n;
    int k;
    mpz_class q;
    std::vector<ExactPoly> w;  // (x, y) ring, index r
};

/// Aggregated q-Bernstein coefficients B^(r)(w) and restriction-dimension
/// counts N^(a)(w).
struct MomentTable {
    int n;
    int k;
    mpz_class q;
    std::vector<std::vector<mpz_class>> B;  // B[r][w]
    std::vector<std::vector<mpz_class>> N;  // N[a][w]

    mpz_class b(int r, int w) const;
    mpz_class n_count(int a, int w) const;
};

/// Direct sum over all r-dimensional subcodes.
ExactPoly higher_enumerator_brute(const RankMetricCode& C, int r);

/// Restriction-dimension form of the Greene identity:
/// sum_J [dim C(J) choose r]_q y^{dim J} g_{n-dim J}(x, y).
ExactPoly greene_cj_form(const RankMetricCode& C, int r);

/// Both displayed Greene forms (restriction form and rank-function form),
/// cross-checked against each other.
ExactPoly higher_enumerator_greene(const RankMetricCode& C, const QMPolymatroid& P, int r);
ExactPoly higher_enumerator_greene(const RankMetricCode& C, int r);

/// Truncation route: alternating combination of S_{P^(t-1)}(q^i, x, y),
/// with each S value cross-checked against the m-th-root substitution of
/// the truncation's rank generating function.
ExactPoly higher_enumerator_truncated(const RankMetricCode& C, const QMPolymatroid& P, int r, int t);
ExactPoly higher_enumerator_truncated(const RankMetricCode& C, int r, int t);

/// Family of all W^(r) via the verified Greene route.
EnumeratorFamily enumerator_family(const RankMetricCode& C, const QMPolymatroid& P);

/// B and N tables from restriction dimensions, with both directions of the
/// B <-> N conversion verified on the result.
MomentTable moments_from_code(const RankMetricCode& C);

/// Rebuild the rank generating function from an N table.
ExactPoly inverse_greene(const MomentTable& mt, int m);

/// Coefficient extraction: for F = sum_w b_w y^w g_{n-w}(x, y), returns b_w.
mpq_class lambda_extract(const ExactPoly& F, int w, int n, const mpz_class& q);

/// Full chain {W^(r)} -> Lambda -> moment conversion -> rank generating
/// function.
ExactPoly r_from_enumerators(const EnumeratorFamily& family, int m);

/// A^(r) by Möbius inversion over the rank table.
SupportDistribution a_from_rho(const QMPolymatroid& P, int r);

/// Recover the rank function from A^(1); throws if any 1 + (q-1) * partial
/// sum fails to be a power of q (not realizable by a code).
QMPolymatroid rho_from_a1(const SupportDistribution& A1, const LatticePtr& lattice, int m);

/// Cocircuits of the (r-1)-st truncation of P_C.
std::vector<Subspace> minimal_supports_via_cocircuits(const QMPolymatroid& P, int r);

struct SingletonRow {
    int r;
    int d;
    std::optional<int> girth_of_dual_truncation;
    int bound;
    bool girth_matches;
    bool bound_holds;
};

struct SingletonReport {
    std::vector<SingletonRow> rows;
    bool pass() const;
};

/// Girth/distance equality and the Singleton-type bound for every r.
SingletonReport singleton_check(const RankMetricCode& C);

struct MacWilliamsReport {
    bool pass;
    std::string witness;
};

/// Generalized-binomial-moment MacWilliams identity, all (j, r), exact.
MacWilliamsReport macwilliams_moments(const RankMetricCode& C);

/// Kløve-type MacWilliams identity: W^(r) of the dual polymatroid from the
/// family of W^(l) of P, via q-transforms at mu = mj.
ExactPoly klove_polymatroid(const QMPolymatroid& P, int r);

/// Code corollary; r is capped at nm - dim C.
ExactPoly klove_code(const RankMetricCode& C, int r);

/// Minimum nonzero rank; nullopt for the zero code.
std::optional<int> min_distance(const RankMetricCode& C);

bool mrd_check(const RankMetricCode& C);

/// Closed-form higher enumerator of an n x m MRD code with the given
/// parameters (stated for m > n).
ExactPoly mrd_enumerator(int n, int m, const mpz_class& q, int d, int k, int r);

struct MrdReport {
    bool is_mrd;
    std::optional<int> d;
    int k;
    bool formula_stated_range;  // m > n
    bool formulas_match;        // closed form vs Greene route, all r (when evaluated)
    std::string note;
};

MrdReport mrd_report(const RankMetricCode& C);

}  // namespace qpolymat
