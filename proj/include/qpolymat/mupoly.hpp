#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qpolymat/poly.hpp"

namespace qpolymat {

/// Laurent polynomial over Q in one symbol s, where s stands for q^mu. The
/// shift mu -> mu - i of the q-product becomes the exact substitution
/// s -> q^{-i} s, i.e. each coefficient of s^e picks up a factor q^{-ie}.
class SymbolPoly {
public:
    SymbolPoly() = default;

    static SymbolPoly constant(const mpq_class& c);
    static SymbolPoly s_power(int e, const mpq_class& c = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, mpq_class>& terms() const { return terms_; }

    void add_term(int e, const mpq_class& c);

    SymbolPoly operator+(const SymbolPoly& other) const;
    SymbolPoly operator*(const SymbolPoly& other) const;
    SymbolPoly scaled(const mpq_class& c) const;

    /// mu -> mu - i.
    SymbolPoly shifted(int i, const mpz_class& q) const;

    /// s := q^mu.
    mpq_class eval_at_mu(long mu, const mpz_class& q) const;

    std::string to_string() const;

    friend bool operator==(const SymbolPoly&, const SymbolPoly&) = default;

private:
    std::map<int, mpq_class> terms_;
};

/// Homogeneous bivariate polynomial in (x, y) of fixed degree whose
/// coefficients are functions of mu represented as SymbolPoly values;
/// coeff(i) multiplies x^{deg-i} y^i.
class MuPoly {
public:
    explicit MuPoly(int degree) : coeffs_(static_cast<size_t>(degree) + 1) {}

    static MuPoly one();
    static MuPoly x_power(int N);
    static MuPoly y_var();
    static MuPoly x_minus_y();
    /// a(x, y; mu) = x + (q^mu - 1) y.
    static MuPoly x_plus_qmu_minus_one_y();
    /// c(x, y; mu) = q^mu y.
    static MuPoly qmu_y();
    /// Lift a homogeneous (x, y)-polynomial with constant coefficients.
    static MuPoly from_xy(const ExactPoly& homogeneous);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const SymbolPoly& coeff(int i) const { return coeffs_[i]; }
    void set_coeff(int i, SymbolPoly c) { coeffs_[i] = std::move(c); }

    MuPoly operator+(const MuPoly& other) const;
    MuPoly scaled(const mpq_class& c) const;

    /// Substitute the concrete mu; the result lives in the (x, y) ring.
    ExactPoly eval_mu(long mu, const mpz_class& q) const;

    std::string to_string() const;

    friend bool operator==(const MuPoly&, const MuPoly&) = default;

private:
    std::vector<SymbolPoly> coeffs_;
};

/// The q-product a *_mu b: c_u(mu) = sum_i q^{is} a_i(mu) b_{u-i}(mu - i)
/// with s the degree of b. Associative but not commutative.
MuPoly qprod(const MuPoly& a, const MuPoly& b, const mpz_class& q);

/// Left-nested q-power a^<N>.
MuPoly qpow(const MuPoly& a, int N, const mpz_class& q);

/// q-transform of a homogeneous F = sum f_i x^{n-i} y^i with substituted
/// arguments: sum_i f_i argB^<i> *_mu argA^<n-i>, evaluated at mu.
ExactPoly qtransform(const ExactPoly& F, long mu, const MuPoly& argA, const MuPoly& argB,
                     const mpz_class& q);

}  // namespace qpolymat
