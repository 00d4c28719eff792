#include "qpolymat/mupoly.hpp"

#include <sstream>
#include <stdexcept>

#include "qpolymat/qfuncs.hpp"

namespace qpolymat {

SymbolPoly SymbolPoly::constant(const mpq_class& c) {
    SymbolPoly p;
    p.add_term(0, c);
    return p;
}

SymbolPoly SymbolPoly::s_power(int e, const mpq_class& c) {
    SymbolPoly p;
    p.add_term(e, c);
    return p;
}

void SymbolPoly::add_term(int e, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymbolPoly SymbolPoly::operator+(const SymbolPoly& other) const {
    SymbolPoly out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, c);
    return out;
}

SymbolPoly SymbolPoly::operator*(const SymbolPoly& other) const {
    SymbolPoly out;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

SymbolPoly SymbolPoly::scaled(const mpq_class& c) const {
    SymbolPoly out;
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, c * v);
    return out;
}

SymbolPoly SymbolPoly::shifted(int i, const mpz_class& q) const {
    SymbolPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * qpow_q(q, -static_cast<long>(i) * e));
    return out;
}

mpq_class SymbolPoly::eval_at_mu(long mu, const mpz_class& q) const {
    mpq_class acc(0);
    for (const auto& [e, c] : terms_) acc += c * qpow_q(q, mu * e);
    return acc;
}

std::string SymbolPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        os << it->second.get_str();
        if (it->first != 0) os << "*s^" << it->first;
        first = false;
    }
    return os.str();
}

MuPoly MuPoly::one() {
    MuPoly p(0);
    p.set_coeff(0, SymbolPoly::constant(1));
    return p;
}

MuPoly MuPoly::x_power(int N) {
    MuPoly p(N);
    p.set_coeff(0, SymbolPoly::constant(1));
    return p;
}

MuPoly MuPoly::y_var() {
    MuPoly p(1);
    p.set_coeff(1, SymbolPoly::constant(1));
    return p;
}

MuPoly MuPoly::x_minus_y() {
    MuPoly p(1);
    p.set_coeff(0, SymbolPoly::constant(1));
    p.set_coeff(1, SymbolPoly::constant(-1));
    return p;
}

MuPoly MuPoly::x_plus_qmu_minus_one_y() {
    MuPoly p(1);
    p.set_coeff(0, SymbolPoly::constant(1));
    p.set_coeff(1, SymbolPoly::s_power(1) + SymbolPoly::constant(-1));
    return p;
}

MuPoly MuPoly::qmu_y() {
    MuPoly p(1);
    p.set_coeff(1, SymbolPoly::s_power(1));
    return p;
}

MuPoly MuPoly::from_xy(const ExactPoly& homogeneous) {
    int deg = homogeneous.homogeneous_degree();
    if (deg < 0) throw std::invalid_argument("MuPoly::from_xy: polynomial is not homogeneous");
    if (homogeneous.arity() != 2)
        throw std::invalid_argument("MuPoly::from_xy: expected a bivariate polynomial");
    MuPoly p(deg);
    for (const auto& [e, c] : homogeneous.terms()) p.set_coeff(e[1], SymbolPoly::constant(c));
    return p;
}

MuPoly MuPoly::operator+(const MuPoly& other) const {
    if (degree() != other.degree())
        throw std::invalid_argument("MuPoly::operator+: degree mismatch");
    MuPoly out(degree());
    for (int i = 0; i <= degree(); ++i) out.set_coeff(i, coeffs_[i] + other.coeffs_[i]);
    return out;
}

MuPoly MuPoly::scaled(const mpq_class& c) const {
    MuPoly out(degree());
    for (int i = 0; i <= degree(); ++i) out.set_coeff(i, coeffs_[i].scaled(c));
    return out;
}

ExactPoly MuPoly::eval_mu(long mu, const mpz_class& q) const {
    ExactPoly out(std::vector<std::string>{"x", "y"});
    for (int i = 0; i <= degree(); ++i)
        out.add_term({degree() - i, i}, coeffs_[i].eval_at_mu(mu, q));
    return out;
}

std::string MuPoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << coeffs_[i].to_string() << ")*x^" << degree() - i << "*y^" << i;
        first = false;
    }
    return first ? "0" : os.str();
}

MuPoly qprod(const MuPoly& a, const MuPoly& b, const mpz_class& q) {
    const int r = a.degree();
    const int s = b.degree();
    MuPoly out(r + s);
    for (int u = 0; u <= r + s; ++u) {
        SymbolPoly acc;
        for (int i = std::max(0, u - s); i <= std::min(u, r); ++i) {
            if (a.coeff(i).is_zero() || b.coeff(u - i).is_zero()) continue;
            SymbolPoly term = a.coeff(i) * b.coeff(u - i).shifted(i, q);
            acc = acc + term.scaled(qpow_q(q, static_cast<long>(i) * s));
        }
        out.set_coeff(u, std::move(acc));
    }
    return out;
}

MuPoly qpow(const MuPoly& a, int N, const mpz_class& q) {
    if (N < 0) throw std::invalid_argument("qpow: negative power");
    MuPoly out = MuPoly::one();
    for (int i = 0; i < N; ++i) out = qprod(out, a, q);
    return out;
}

ExactPoly qtransform(const ExactPoly& F, long mu, const MuPoly& argA, const MuPoly& argB,
                     const mpz_class& q) {
    int n = F.homogeneous_degree();
    if (n < 0 || F.arity() != 2)
        throw std::invalid_argument("qtransform: input must be homogeneous and bivariate");
    if (argA.degree() != 1 || argB.degree() != 1)
        throw std::invalid_argument("qtransform: argument polynomials must have degree 1");

    std::vector<MuPoly> powA, powB;
    powA.reserve(n + 1);
    powB.reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
        powA.push_back(qpow(argA, i, q));
        powB.push_back(qpow(argB, i, q));
    }

    ExactPoly out(std::vector<std::string>{"x", "y"});
    for (const auto& [e, c] : F.terms()) {
        int i = e[1];  // F = sum f_i x^{n-i} y^i
        MuPoly t = qprod(powB[i], powA[n - i], q);
        out += t.eval_mu(mu, q).scaled(c);
    }
    return out;
}

}  // namespace qpolymat
