#include "qpolymat/qfuncs.hpp"

#include <stdexcept>

namespace qpolymat {

mpq_class qpow_q(const mpz_class& q, long e) {
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return mpq_class(p);
    mpq_class out(1, p);
    out.canonicalize();
    return out;
}

mpq_class qbinom(long a, long b, const mpz_class& q) {
    if (b < 0) return 0;
    mpq_class out(1);
    for (long i = 0; i < b; ++i) {
        mpq_class num = qpow_q(q, a - i) - 1;
        mpq_class den = qpow_q(q, b - i) - 1;
        out *= num / den;
    }
    return out;
}

mpz_class qbinom_z(long a, long b, const mpz_class& q) {
    mpq_class v = qbinom(a, b, q);
    if (v.get_den() != 1) throw std::logic_error("qbinom_z: non-integral Gaussian binomial");
    return v.get_num();
}

mpz_class galois_number(int n, const mpz_class& q) {
    mpz_class total = 0;
    for (int j = 0; j <= n; ++j) total += qbinom_z(n, j, q);
    return total;
}

mpq_class g_scalar(int ell, const mpz_class& q, const mpq_class& X, const mpq_class& Y) {
    mpq_class out(1);
    for (int i = 0; i < ell; ++i) out *= X - qpow_q(q, i) * Y;
    return out;
}

}  // namespace qpolymat
