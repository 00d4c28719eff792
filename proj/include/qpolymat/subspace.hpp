#pragma once

#include <compare>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qpolymat/gfq.hpp"

namespace qpolymat {

/// Subspace of E = F_q^n, held as its unique RREF basis (no zero rows), so
/// structural equality is semantic equality and the ordering (dim, then
/// row-major basis entries) is a total order usable as a lattice position.
class Subspace {
public:
    /// Zero subspace of F_q^n.
    Subspace(Field field, int ambient_dim);

    static Subspace span(const Field& field, int ambient_dim,
                         const std::vector<std::vector<int>>& vectors);

    /// Wrap a matrix already known to be in RREF with no zero rows.
    static Subspace from_rref(MatrixGF basis);

    const Field& field() const { return basis_.field(); }
    int ambient() const { return basis_.cols(); }
    int dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient(); }
    const MatrixGF& basis() const { return basis_; }

    std::string to_string() const;

    friend bool operator==(const Subspace&, const Subspace&) = default;
    friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

private:
    explicit Subspace(MatrixGF basis) : basis_(std::move(basis)) {}

    MatrixGF basis_;  // dim x ambient, RREF
};

Subspace sum(const Subspace& A, const Subspace& B);
Subspace intersect(const Subspace& A, const Subspace& B);
bool contains(const Subspace& outer, const Subspace& inner);
Subspace perp(const Subspace& J);

/// Möbius function of the subspace lattice: 0 unless K <= J, else
/// (-1)^d q^C(d,2) with d = dim J - dim K.
mpz_class mobius(const Subspace& K, const Subspace& J);

/// Column space of M, as a subspace of F_q^rows.
Subspace column_space(const MatrixGF& M);

}  // namespace qpolymat
