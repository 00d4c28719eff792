#include "qpolymat/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qpolymat/qfuncs.hpp"

namespace qpolymat {

bool GradedLexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    long long da = std::accumulate(a.begin(), a.end(), 0LL);
    long long db = std::accumulate(b.begin(), b.end(), 0LL);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

ExactPoly ExactPoly::constant(std::vector<std::string> vars, const mpq_class& c) {
    ExactPoly p(std::move(vars));
    p.add_term(std::vector<int>(p.vars_.size(), 0), c);
    return p;
}

ExactPoly ExactPoly::variable(std::vector<std::string> vars, int index) {
    if (index < 0 || index >= static_cast<int>(vars.size()))
        throw std::invalid_argument("ExactPoly::variable: index out of range");
    ExactPoly p(std::move(vars));
    std::vector<int> e(p.vars_.size(), 0);
    e[index] = 1;
    p.add_term(std::move(e), 1);
    return p;
}

ExactPoly ExactPoly::monomial(std::vector<std::string> vars, std::vector<int> exps,
                              const mpq_class& c) {
    ExactPoly p(std::move(vars));
    if (exps.size() != p.vars_.size())
        throw std::invalid_argument("ExactPoly::monomial: exponent arity mismatch");
    p.add_term(std::move(exps), c);
    return p;
}

mpq_class ExactPoly::coeff(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void ExactPoly::add_term(std::vector<int> exps, const mpq_class& c) {
    if (exps.size() != vars_.size())
        throw std::invalid_argument("ExactPoly::add_term: exponent arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(exps), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void ExactPoly::require_same_ring(const ExactPoly& other, const char* op) const {
    if (vars_ != other.vars_)
        throw std::invalid_argument(std::string(op) + ": polynomials over different variable lists");
}

ExactPoly ExactPoly::operator-() const {
    ExactPoly out(vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& other) {
    require_same_ring(other, "ExactPoly::operator+=");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& other) {
    require_same_ring(other, "ExactPoly::operator-=");
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

ExactPoly ExactPoly::operator+(const ExactPoly& other) const {
    ExactPoly out = *this;
    out += other;
    return out;
}

ExactPoly ExactPoly::operator-(const ExactPoly& other) const {
    ExactPoly out = *this;
    out -= other;
    return out;
}

ExactPoly ExactPoly::operator*(const ExactPoly& other) const {
    require_same_ring(other, "ExactPoly::operator*");
    ExactPoly out(vars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(std::move(e), ca * cb);
        }
    return out;
}

ExactPoly ExactPoly::scaled(const mpq_class& c) const {
    ExactPoly out(vars_);
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, c * v);
    return out;
}

ExactPoly ExactPoly::pow(int e) const {
    if (e < 0) {
        if (terms_.size() != 1)
            throw std::invalid_argument("ExactPoly::pow: negative power of a non-monomial");
        const auto& [exps, c] = *terms_.begin();
        std::vector<int> inv_e(exps.size());
        for (size_t i = 0; i < exps.size(); ++i) inv_e[i] = -exps[i];
        mpq_class inv_c = 1 / c;
        return monomial(vars_, std::move(inv_e), inv_c).pow(-e);
    }
    ExactPoly out = constant(vars_, 1);
    for (int i = 0; i < e; ++i) out = out * (*this);
    return out;
}

mpq_class ExactPoly::eval(const std::vector<mpq_class>& values) const {
    if (values.size() != vars_.size())
        throw std::invalid_argument("ExactPoly::eval: value count mismatch");
    mpq_class acc(0);
    for (const auto& [e, c] : terms_) {
        mpq_class term = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (values[i] == 0) {
                if (e[i] < 0) throw std::domain_error("ExactPoly::eval: zero to a negative power");
                term = 0;
                break;
            }
            mpq_class p(1);
            for (int t = 0; t < (e[i] < 0 ? -e[i] : e[i]); ++t) p *= values[i];
            term *= (e[i] < 0) ? mpq_class(1) / p : p;
        }
        acc += term;
    }
    return acc;
}

ExactPoly ExactPoly::substitute(const std::vector<std::string>& target_vars,
                                const std::vector<ExactPoly>& images) const {
    if (images.size() != vars_.size())
        throw std::invalid_argument("ExactPoly::substitute: image count mismatch");
    for (const auto& img : images)
        if (img.vars() != target_vars)
            throw std::invalid_argument("ExactPoly::substitute: image over wrong variable list");
    ExactPoly out(target_vars);
    for (const auto& [e, c] : terms_) {
        ExactPoly term = ExactPoly::constant(target_vars, c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term = term * images[i].pow(e[i]);
        out += term;
    }
    return out;
}

int ExactPoly::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    long long deg = -1;
    for (const auto& [e, c] : terms_) {
        long long d = std::accumulate(e.begin(), e.end(), 0LL);
        if (deg == -1)
            deg = d;
        else if (d != deg)
            return -1;
    }
    return static_cast<int>(deg);
}

bool ExactPoly::has_integer_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

bool ExactPoly::has_nonnegative_exponents() const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x < 0) return false;
    return true;
}

std::string ExactPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpq_class a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            os << a.get_str();
        else if (a == 1)
            os << mono;
        else
            os << a.get_str() << "*" << mono;
        first = false;
    }
    return os.str();
}

ExactPoly g_poly(int ell, const mpz_class& q, const std::vector<std::string>& vars, int ix, int iy) {
    if (ell < 0) throw std::invalid_argument("g_poly: negative index");
    ExactPoly out = ExactPoly::constant(vars, 1);
    ExactPoly X = ExactPoly::variable(vars, ix);
    ExactPoly Y = ExactPoly::variable(vars, iy);
    for (int i = 0; i < ell; ++i) out = out * (X - Y.scaled(qpow_q(q, i)));
    return out;
}

}  // namespace qpolymat
