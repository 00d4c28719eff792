#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qpolymat {

/// Graded-lexicographic order on exponent tuples (total degree first).
struct GradedLexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Multivariate polynomial with exact rational coefficients over a fixed,
/// ordered variable list. Exponents are plain ints and may be negative
/// (Laurent terms are used internally by the m-th root substitution); zero
/// coefficients are never stored, so operator== is semantic equality.
class ExactPoly {
public:
    using TermMap = std::map<std::vector<int>, mpq_class, GradedLexLess>;

    ExactPoly() = default;
    explicit ExactPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static ExactPoly constant(std::vector<std::string> vars, const mpq_class& c);
    static ExactPoly variable(std::vector<std::string> vars, int index);
    static ExactPoly monomial(std::vector<std::string> vars, std::vector<int> exps,
                              const mpq_class& c);

    const std::vector<std::string>& vars() const { return vars_; }
    int arity() const { return static_cast<int>(vars_.size()); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }

    mpq_class coeff(const std::vector<int>& exps) const;
    void add_term(std::vector<int> exps, const mpq_class& c);

    ExactPoly operator-() const;
    ExactPoly operator+(const ExactPoly& other) const;
    ExactPoly operator-(const ExactPoly& other) const;
    ExactPoly operator*(const ExactPoly& other) const;
    ExactPoly& operator+=(const ExactPoly& other);
    ExactPoly& operator-=(const ExactPoly& other);
    ExactPoly scaled(const mpq_class& c) const;
    ExactPoly pow(int e) const;

    /// Full evaluation; values are positionally matched to vars().
    mpq_class eval(const std::vector<mpq_class>& values) const;

    /// Ring morphism: replace each variable by the given image polynomial
    /// (all images over target_vars). Negative exponents require monomial
    /// images, which are inverted exactly.
    ExactPoly substitute(const std::vector<std::string>& target_vars,
                         const std::vector<ExactPoly>& images) const;

    /// Homogeneous total degree, or -1 if not homogeneous (zero counts as
    /// homogeneous of any degree and reports 0).
    int homogeneous_degree() const;

    bool has_integer_coeffs() const;
    bool has_nonnegative_exponents() const;

    /// Canonical expanded form: graded-lex, highest degree first.
    std::string to_string() const;

    friend bool operator==(const ExactPoly&, const ExactPoly&) = default;

private:
    void require_same_ring(const ExactPoly& other, const char* op) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

inline ExactPoly operator*(const mpq_class& c, const ExactPoly& p) { return p.scaled(c); }

/// g_ell(X, Y) = prod_{i=0}^{ell-1}(X - q^i Y) in the given ring, with X and Y
/// picked out by variable index.
ExactPoly g_poly(int ell, const mpz_class& q, const std::vector<std::string>& vars, int ix, int iy);

}  // namespace qpolymat
