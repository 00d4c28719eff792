#include "qpolymat/rankgen.hpp"

#include <stdexcept>

#include "qpolymat/errors.hpp"
#include "qpolymat/qfuncs.hpp"

namespace qpolymat {

const std::vector<std::string>& ring_R() {
    static const std::vector<std::string> v{"X1", "X2", "X3", "X4"};
    return v;
}

const std::vector<std::string>& ring_xy() {
    static const std::vector<std::string> v{"x", "y"};
    return v;
}

const std::vector<std::string>& ring_uxy() {
    static const std::vector<std::string> v{"u", "x", "y"};
    return v;
}

const std::vector<std::string>& ring_XY() {
    static const std::vector<std::string> v{"X", "Y"};
    return v;
}

ExactPoly rank_gen_R(const QMPolymatroid& P) {
    const LatticeIndex& lat = *P.lattice();
    const mpz_class q(static_cast<long>(P.field().q()));
    std::vector<ExactPoly> g_by_dim;
    for (int d = 0; d <= P.n(); ++d) g_by_dim.push_back(g_poly(d, q, ring_R(), 2, 3));
    ExactPoly out(ring_R());
    for (int i = 0; i < lat.size(); ++i) {
        int a = P.rank() - P.rho(i);
        int b = P.m() * lat.dim(i) - P.rho(i);
        ExactPoly mono = ExactPoly::monomial(ring_R(), {a, b, 0, 0}, 1);
        out += mono * g_by_dim[lat.dim(i)];
    }
    return out;
}

ExactPoly rank_gen_uniform_closed(int ell, int n, int m, const mpz_class& q) {
    if (ell < 0 || ell > n) throw std::invalid_argument("rank_gen_uniform_closed: ell out of range");
    ExactPoly out(ring_R());
    for (int j = 0; j <= ell; ++j) {
        ExactPoly mono = ExactPoly::monomial(ring_R(), {m * (ell - j), 0, 0, 0}, qbinom(n, j, q));
        out += mono * g_poly(j, q, ring_R(), 2, 3);
    }
    for (int j = ell + 1; j <= n; ++j) {
        ExactPoly mono = ExactPoly::monomial(ring_R(), {0, m * (j - ell), 0, 0}, qbinom(n, j, q));
        out += mono * g_poly(j, q, ring_R(), 2, 3);
    }
    return out;
}

ExactPoly whitney(const QMPolymatroid& P) {
    const LatticeIndex& lat = *P.lattice();
    ExactPoly out(ring_XY());
    for (int i = 0; i < lat.size(); ++i)
        out.add_term({P.rank() - P.rho(i), P.m() * lat.dim(i) - P.rho(i)}, 1);
    return out;
}

ExactPoly whitney_to_R(const ExactPoly& wt, int m, int rhoE, const mpz_class& q) {
    if (wt.vars() != ring_XY()) throw std::invalid_argument("whitney_to_R: expected the (X, Y) ring");
    ExactPoly out(ring_R());
    for (const auto& [e, c] : wt.terms()) {
        int num = rhoE - e[0] + e[1];
        if (num < 0 || num % m != 0)
            throw std::invalid_argument("whitney_to_R: term X^" + std::to_string(e[0]) + " Y^" +
                                        std::to_string(e[1]) +
                                        " has no lattice dimension (malformed input)");
        ExactPoly mono = ExactPoly::monomial(ring_R(), {e[0], e[1], 0, 0}, c);
        out += mono * g_poly(num / m, q, ring_R(), 2, 3);
    }
    return out;
}

ExactPoly s_poly(const QMPolymatroid& P) {
    const LatticeIndex& lat = *P.lattice();
    const mpz_class q(static_cast<long>(P.field().q()));
    ExactPoly out(ring_uxy());
    for (int i = 0; i < lat.size(); ++i) {
        ExactPoly mono =
            ExactPoly::monomial(ring_uxy(), {P.rank() - P.rho(i), 0, P.n() - lat.dim(i)}, 1);
        out += mono * g_poly(lat.dim(i), q, ring_uxy(), 1, 2);
    }
    return out;
}

ExactPoly s_poly_at(const QMPolymatroid& P, const mpq_class& u) {
    const LatticeIndex& lat = *P.lattice();
    const mpz_class q(static_cast<long>(P.field().q()));
    ExactPoly out(ring_xy());
    for (int i = 0; i < lat.size(); ++i) {
        mpq_class weight(1);
        for (int t = 0; t < P.rank() - P.rho(i); ++t) weight *= u;
        ExactPoly mono = ExactPoly::monomial(ring_xy(), {0, P.n() - lat.dim(i)}, weight);
        out += mono * g_poly(lat.dim(i), q, ring_xy(), 0, 1);
    }
    return out;
}

ExactPoly w_poly(const QMPolymatroid& P, int r) {
    if (r < 0) throw std::invalid_argument("w_poly: negative r");
    const LatticeIndex& lat = *P.lattice();
    const mpz_class q(static_cast<long>(P.field().q()));
    ExactPoly out(ring_xy());
    for (int i = 0; i < lat.size(); ++i) {
        mpq_class weight = qbinom(P.rank() - P.rho(i), r, q);
        if (weight == 0) continue;
        ExactPoly mono = ExactPoly::monomial(ring_xy(), {0, P.n() - lat.dim(i)}, weight);
        out += mono * g_poly(lat.dim(i), q, ring_xy(), 0, 1);
    }
    if (!out.has_integer_coeffs()) throw VerificationError("w_poly: non-integral coefficients");
    return out;
}

ExactPoly w_tilde(const QMPolymatroid& P, int j) {
    if (j < 0) throw std::invalid_argument("w_tilde: negative j");
    const mpz_class q(static_cast<long>(P.field().q()));
    return s_poly_at(P, qpow_q(q, j));
}

ExactPoly mth_root_substitute(const ExactPoly& R, int n, int m, int rhoE, const mpq_class& scale) {
    if (R.vars() != ring_R()) throw std::invalid_argument("mth_root_substitute: expected the R ring");
    const std::vector<std::string> zring{"z", "x", "y"};
    std::vector<ExactPoly> images{
        ExactPoly::monomial(zring, {1, 0, 0}, scale),   // X1 -> scale * z
        ExactPoly::monomial(zring, {-1, 0, 0}, 1),      // X2 -> z^{-1}
        ExactPoly::variable(zring, 1),                  // X3 -> x
        ExactPoly::variable(zring, 2),                  // X4 -> y
    };
    ExactPoly in_z = R.substitute(zring, images) *
                     ExactPoly::monomial(zring, {m * n - rhoE, 0, 0}, 1);
    ExactPoly out(ring_xy());
    for (const auto& [e, c] : in_z.terms()) {
        if (e[0] % m != 0)
            throw VerificationError("mth_root_substitute: z-exponent " + std::to_string(e[0]) +
                                    " not divisible by m = " + std::to_string(m));
        int ey = e[2] + e[0] / m;
        if (e[1] < 0 || ey < 0)
            throw VerificationError("mth_root_substitute: negative exponent in the result");
        out.add_term({e[1], ey}, c);
    }
    return out;
}

}  // namespace qpolymat
