#pragma once

#include <gmpxx.h>

namespace qpolymat {

/// q^e as an exact rational; e may be negative.
mpq_class qpow_q(const mpz_class& q, long e);

/// Extended Gaussian binomial: 0 for b < 0, otherwise
/// prod_{i=0}^{b-1} (q^{a-i} - 1) / (q^{b-i} - 1), which is the standard
/// subspace count for 0 <= b <= a and an exact rational for any integer a.
mpq_class qbinom(long a, long b, const mpz_class& q);

/// Gaussian binomial known to be integral (throws if it is not).
mpz_class qbinom_z(long a, long b, const mpz_class& q);

/// Number of subspaces of F_q^n (sum of Gaussian binomials).
mpz_class galois_number(int n, const mpz_class& q);

/// g_ell(X, Y) = prod_{i=0}^{ell-1} (X - q^i Y) at scalar arguments.
mpq_class g_scalar(int ell, const mpz_class& q, const mpq_class& X, const mpq_class& Y);

/// C(d, 2) for d >= 0.
inline long binom2(long d) { return d * (d - 1) / 2; }

}  // namespace qpolymat
