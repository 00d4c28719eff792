#pragma once

#include "qpolymat/poly.hpp"
#include "qpolymat/polymatroid.hpp"

namespace qpolymat {

/// Variable lists of the fixed rings used below.
const std::vector<std::string>& ring_R();   // {X1, X2, X3, X4}
const std::vector<std::string>& ring_xy();  // {x, y}
const std::vector<std::string>& ring_uxy(); // {u, x, y}
const std::vector<std::string>& ring_XY();  // {X, Y}

/// Four-variable rank generating function:
/// sum_A X1^{rho(E)-rho(A)} X2^{m dim A - rho(A)} g_{dim A}(X3, X4).
ExactPoly rank_gen_R(const QMPolymatroid& P);

/// Closed form of rank_gen_R for the uniform polymatroid U(ell; n, m).
ExactPoly rank_gen_uniform_closed(int ell, int n, int m, const mpz_class& q);

/// Two-variable Whitney form, sum_J X^{rho(E)-rho(J)} Y^{m dim J - rho(J)};
/// equals rank_gen_R evaluated at (X, Y, 1, 0).
ExactPoly whitney(const QMPolymatroid& P);

/// Rebuild rank_gen_R from the Whitney form: each c_{a,b} X^a Y^b becomes
/// c_{a,b} X1^a X2^b g_{(rhoE-a+b)/m}; throws on a divisibility failure,
/// which no valid polymatroid produces.
ExactPoly whitney_to_R(const ExactPoly& wt, int m, int rhoE, const mpz_class& q);

/// S_P(u, x, y) = sum_U u^{rho(E)-rho(U)} y^{n-dim U} g_{dim U}(x, y).
ExactPoly s_poly(const QMPolymatroid& P);

/// S_P with u fixed to a scalar, in the (x, y) ring.
ExactPoly s_poly_at(const QMPolymatroid& P, const mpq_class& u);

/// W_P^(r)(x, y) = sum_U [rho(E)-rho(U) choose r]_q y^{n-dim U} g_{dim U}(x, y).
ExactPoly w_poly(const QMPolymatroid& P, int r);

/// W-tilde^<j>: the scaled-polymatroid sum with q^{j(rho(E)-rho(U))} weights.
ExactPoly w_tilde(const QMPolymatroid& P, int j);

/// Substitute X1 := scale * z, X2 := z^{-1}, X3 := x, X4 := y into an R-ring
/// polynomial, multiply by z^{mn - rhoE}, and identify z^m with y. With
/// scale = q this turns R_{P_C} into the weight enumerator W_C(x, y); with
/// scale = q^i it computes S_P(q^i, x, y). Divisibility or negativity
/// failures signal a rank table not arising from any valid polymatroid.
ExactPoly mth_root_substitute(const ExactPoly& R, int n, int m, int rhoE, const mpq_class& scale);

}  // namespace qpolymat
