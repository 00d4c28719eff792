#include "qpolymat/gfq.hpp"

#include <sstream>
#include <stdexcept>

namespace qpolymat {

namespace {

bool is_prime(unsigned q) {
    if (q < 2) return false;
    for (unsigned d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace

Field::Field(unsigned q) : q_(q) {
    if (!is_prime(q)) throw std::invalid_argument("Field: q = " + std::to_string(q) + " is not prime");
    if (q > 46340) throw std::invalid_argument("Field: q too large for int residue arithmetic");
}

int Field::inv(int a) const {
    if (a == 0) throw std::invalid_argument("Field::inv: zero has no inverse");
    // extended Euclid on (a, q)
    int t = 0, new_t = 1;
    int r = iq(), new_r = a;
    while (new_r != 0) {
        int quot = r / new_r;
        int tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    return t < 0 ? t + iq() : t;
}

int Field::reduce(long long v) const {
    long long r = v % iq();
    return static_cast<int>(r < 0 ? r + iq() : r);
}

MatrixGF::MatrixGF(Field field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("MatrixGF: negative shape");
}

MatrixGF::MatrixGF(Field field, int rows, int cols, std::vector<int> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("MatrixGF: negative shape");
    if (entries_.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument("MatrixGF: entry count does not match shape");
    for (int e : entries_)
        if (e < 0 || e >= field_.iq()) throw std::invalid_argument("MatrixGF: entry out of range [0, q)");
}

MatrixGF MatrixGF::from_integers(const Field& field, int rows, int cols,
                                 const std::vector<long long>& entries) {
    if (entries.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument("MatrixGF: entry count does not match shape");
    std::vector<int> reduced(entries.size());
    for (size_t i = 0; i < entries.size(); ++i) reduced[i] = field.reduce(entries[i]);
    return MatrixGF(field, rows, cols, std::move(reduced));
}

void MatrixGF::set(int i, int j, int value) {
    if (value < 0 || value >= field_.iq()) throw std::invalid_argument("MatrixGF::set: value out of range");
    entries_[static_cast<size_t>(i) * cols_ + j] = value;
}

std::vector<int> MatrixGF::row(int i) const {
    return std::vector<int>(entries_.begin() + static_cast<size_t>(i) * cols_,
                            entries_.begin() + static_cast<size_t>(i + 1) * cols_);
}

bool MatrixGF::row_is_zero(int i) const {
    for (int j = 0; j < cols_; ++j)
        if (at(i, j) != 0) return false;
    return true;
}

bool MatrixGF::is_zero() const {
    for (int e : entries_)
        if (e != 0) return false;
    return true;
}

namespace {

void require_same_shape(const MatrixGF& a, const MatrixGF& b, const char* op) {
    if (a.field() != b.field()) throw std::invalid_argument(std::string(op) + ": field mismatch");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument(std::string(op) + ": shape mismatch");
}

}  // namespace

MatrixGF MatrixGF::operator+(const MatrixGF& other) const {
    require_same_shape(*this, other, "MatrixGF::operator+");
    MatrixGF out(field_, rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = field_.add(entries_[i], other.entries_[i]);
    return out;
}

MatrixGF MatrixGF::operator-(const MatrixGF& other) const {
    require_same_shape(*this, other, "MatrixGF::operator-");
    MatrixGF out(field_, rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = field_.sub(entries_[i], other.entries_[i]);
    return out;
}

MatrixGF MatrixGF::operator*(const MatrixGF& other) const {
    if (field_ != other.field()) throw std::invalid_argument("MatrixGF::operator*: field mismatch");
    if (cols_ != other.rows()) throw std::invalid_argument("MatrixGF::operator*: inner dimension mismatch");
    MatrixGF out(field_, rows_, other.cols());
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            int a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < other.cols(); ++j)
                out.set(i, j, field_.add(out.at(i, j), field_.mul(a, other.at(k, j))));
        }
    return out;
}

MatrixGF MatrixGF::scaled(int c) const {
    MatrixGF out(field_, rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = field_.mul(entries_[i], c);
    return out;
}

MatrixGF MatrixGF::transposed() const {
    MatrixGF out(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
    return out;
}

std::string MatrixGF::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j);
        }
    }
    os << "]";
    return os.str();
}

std::strong_ordering operator<=>(const MatrixGF& a, const MatrixGF& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    if (auto c = a.field_.q() <=> b.field_.q(); c != 0) return c;
    return a.entries_ <=> b.entries_;
}

RrefResult rref(const MatrixGF& M) {
    const Field& f = M.field();
    MatrixGF R = M;
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < M.cols() && r < M.rows(); ++col) {
        int pivot_row = -1;
        for (int i = r; i < M.rows(); ++i)
            if (R.at(i, col) != 0) {
                pivot_row = i;
                break;
            }
        if (pivot_row < 0) continue;
        if (pivot_row != r)
            for (int j = 0; j < M.cols(); ++j) {
                int tmp = R.at(r, j);
                R.set(r, j, R.at(pivot_row, j));
                R.set(pivot_row, j, tmp);
            }
        int inv = f.inv(R.at(r, col));
        if (inv != 1)
            for (int j = 0; j < M.cols(); ++j) R.set(r, j, f.mul(R.at(r, j), inv));
        for (int i = 0; i < M.rows(); ++i) {
            if (i == r) continue;
            int c = R.at(i, col);
            if (c == 0) continue;
            for (int j = 0; j < M.cols(); ++j) R.set(i, j, f.sub(R.at(i, j), f.mul(c, R.at(r, j))));
        }
        pivots.push_back(col);
        ++r;
    }
    return RrefResult{std::move(R), r, std::move(pivots)};
}

int mat_rank(const MatrixGF& M) { return rref(M).rank; }

std::vector<std::vector<int>> kernel(const MatrixGF& M) {
    const Field& f = M.field();
    RrefResult rr = rref(M);
    std::vector<bool> is_pivot(M.cols(), false);
    for (int p : rr.pivots) is_pivot[p] = true;
    std::vector<std::vector<int>> basis;
    for (int free_col = 0; free_col < M.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<int> v(M.cols(), 0);
        v[free_col] = 1;
        for (int i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = f.neg(rr.R.at(i, free_col));
        basis.push_back(std::move(v));
    }
    return basis;
}

int trace_inner(const MatrixGF& M, const MatrixGF& N) {
    require_same_shape(M, N, "trace_inner");
    const Field& f = M.field();
    int acc = 0;
    for (size_t i = 0; i < M.flat().size(); ++i) acc = f.add(acc, f.mul(M.flat()[i], N.flat()[i]));
    return acc;
}

}  // namespace qpolymat
