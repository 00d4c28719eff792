#include "qpolymat/subspace.hpp"

#include <sstream>
#include <stdexcept>

namespace qpolymat {

Subspace::Subspace(Field field, int ambient_dim) : basis_(field, 0, ambient_dim) {
    if (ambient_dim < 0) throw std::invalid_argument("Subspace: negative ambient dimension");
}

Subspace Subspace::span(const Field& field, int ambient_dim,
                        const std::vector<std::vector<int>>& vectors) {
    std::vector<int> entries;
    entries.reserve(vectors.size() * ambient_dim);
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != ambient_dim)
            throw std::invalid_argument("Subspace::span: vector length mismatch");
        for (int e : v) entries.push_back(field.reduce(e));
    }
    MatrixGF stacked(field, static_cast<int>(vectors.size()), ambient_dim, std::move(entries));
    RrefResult rr = rref(stacked);
    std::vector<int> kept;
    kept.reserve(static_cast<size_t>(rr.rank) * ambient_dim);
    for (int i = 0; i < rr.rank; ++i)
        for (int j = 0; j < ambient_dim; ++j) kept.push_back(rr.R.at(i, j));
    return Subspace(MatrixGF(field, rr.rank, ambient_dim, std::move(kept)));
}

Subspace Subspace::from_rref(MatrixGF basis) { return Subspace(std::move(basis)); }

std::string Subspace::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    os << "<";
    for (int i = 0; i < dim(); ++i) {
        if (i) os << ", ";
        os << "(";
        for (int j = 0; j < ambient(); ++j) {
            if (j) os << ",";
            os << basis_.at(i, j);
        }
        os << ")";
    }
    os << ">";
    return os.str();
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
    if (auto c = a.ambient() <=> b.ambient(); c != 0) return c;
    if (auto c = a.dim() <=> b.dim(); c != 0) return c;
    return a.basis_.flat() <=> b.basis_.flat();
}

namespace {

void require_same_ambient(const Subspace& A, const Subspace& B, const char* op) {
    if (A.field() != B.field() || A.ambient() != B.ambient())
        throw std::invalid_argument(std::string(op) + ": ambient space mismatch");
}

}  // namespace

Subspace sum(const Subspace& A, const Subspace& B) {
    require_same_ambient(A, B, "sum");
    std::vector<std::vector<int>> rows;
    rows.reserve(A.dim() + B.dim());
    for (int i = 0; i < A.dim(); ++i) rows.push_back(A.basis().row(i));
    for (int i = 0; i < B.dim(); ++i) rows.push_back(B.basis().row(i));
    return Subspace::span(A.field(), A.ambient(), rows);
}

Subspace perp(const Subspace& J) {
    auto basis = kernel(J.basis());
    return Subspace::span(J.field(), J.ambient(), basis);
}

Subspace intersect(const Subspace& A, const Subspace& B) {
    require_same_ambient(A, B, "intersect");
    // A cap B = (A^perp + B^perp)^perp; the standard dot product is
    // nondegenerate on E, so perp dimensions are exact.
    return perp(sum(perp(A), perp(B)));
}

bool contains(const Subspace& outer, const Subspace& inner) {
    require_same_ambient(outer, inner, "contains");
    if (inner.dim() > outer.dim()) return false;
    return sum(outer, inner) == outer;
}

mpz_class mobius(const Subspace& K, const Subspace& J) {
    require_same_ambient(K, J, "mobius");
    if (!contains(J, K)) return 0;
    int d = J.dim() - K.dim();
    mpz_class out;
    mpz_class q(static_cast<long>(K.field().q()));
    mpz_pow_ui(out.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d) * (d - 1) / 2);
    return (d % 2 == 0) ? out : -out;
}

Subspace column_space(const MatrixGF& M) {
    std::vector<std::vector<int>> cols;
    cols.reserve(M.cols());
    for (int j = 0; j < M.cols(); ++j) {
        std::vector<int> col(M.rows());
        for (int i = 0; i < M.rows(); ++i) col[i] = M.at(i, j);
        cols.push_back(std::move(col));
    }
    return Subspace::span(M.field(), M.rows(), cols);
}

}  // namespace qpolymat
