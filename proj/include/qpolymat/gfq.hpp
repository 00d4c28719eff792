#pragma once

#include <compare>
#include <string>
#include <vector>

namespace qpolymat {

/// Prime field F_q. Elements are canonical residues in [0, q).
class Field {
public:
    explicit Field(unsigned q);

    unsigned q() const { return q_; }
    int iq() const { return static_cast<int>(q_); }

    int add(int a, int b) const { return (a + b) % iq(); }
    int sub(int a, int b) const {
        int r = (a - b) % iq();
        return r < 0 ? r + iq() : r;
    }
    int mul(int a, int b) const { return (a * b) % iq(); }
    int neg(int a) const { return a == 0 ? 0 : iq() - a; }
    int inv(int a) const;
    int reduce(long long v) const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    unsigned q_;
};

/// Dense matrix over F_q with eagerly reduced entries, so equality is structural.
class MatrixGF {
public:
    MatrixGF(Field field, int rows, int cols);
    MatrixGF(Field field, int rows, int cols, std::vector<int> entries);

    static MatrixGF from_integers(const Field& field, int rows, int cols,
                                  const std::vector<long long>& entries);

    const Field& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    void set(int i, int j, int value);

    std::vector<int> row(int i) const;
    bool row_is_zero(int i) const;
    bool is_zero() const;

    MatrixGF operator+(const MatrixGF& other) const;
    MatrixGF operator-(const MatrixGF& other) const;
    MatrixGF operator*(const MatrixGF& other) const;
    MatrixGF scaled(int c) const;
    MatrixGF transposed() const;

    /// Row-major flattening, used to treat n x m matrices as vectors in F_q^{nm}.
    const std::vector<int>& flat() const { return entries_; }

    std::string to_string() const;

    friend bool operator==(const MatrixGF&, const MatrixGF&) = default;
    friend std::strong_ordering operator<=>(const MatrixGF& a, const MatrixGF& b);

private:
    Field field_;
    int rows_;
    int cols_;
    std::vector<int> entries_;
};

struct RrefResult {
    MatrixGF R;
    int rank;
    std::vector<int> pivots;
};

/// Reduced row-echelon form; unique per row space.
RrefResult rref(const MatrixGF& M);

int mat_rank(const MatrixGF& M);

/// Basis of the right kernel {v : Mv = 0}; dimension cols - rank.
std::vector<std::vector<int>> kernel(const MatrixGF& M);

/// Tr(M N^T) = sum of entrywise products, reduced mod q.
int trace_inner(const MatrixGF& M, const MatrixGF& N);

}  // namespace qpolymat
