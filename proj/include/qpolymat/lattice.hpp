#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "qpolymat/errors.hpp"
#include "qpolymat/subspace.hpp"

namespace qpolymat {

/// Streams every RREF matrix with j nonzero rows over F_q^n to fn, grouped by
/// pivot-column choice. Deterministic but not sorted.
void for_each_rref(const Field& field, int n, int j,
                   const std::function<void(const MatrixGF&)>& fn);

/// All j-dimensional subspaces of F_q^n in canonical (entry-lex) order.
std::vector<Subspace> grassmannian(const Field& field, int n, int j,
                                   long long cap = kDefaultCap);

/// The full subspace lattice of E = F_q^n in a fixed order: dimension-major,
/// then lexicographic on the canonical basis. Positions in this order index
/// rank tables and distributions everywhere else.
class LatticeIndex {
public:
    LatticeIndex(Field field, int n, long long cap = kDefaultCap);

    const Field& field() const { return field_; }
    int ambient() const { return n_; }
    long long cap() const { return cap_; }

    int size() const { return static_cast<int>(spaces_.size()); }
    const Subspace& at(int idx) const { return spaces_[idx]; }
    int dim(int idx) const { return spaces_[idx].dim(); }
    int index_of(const Subspace& s) const;

    int zero_index() const { return 0; }
    int full_index() const { return size() - 1; }

    /// Indices with a given dimension form one contiguous block.
    std::pair<int, int> dim_range(int d) const { return {dim_offset_[d], dim_offset_[d + 1]}; }

    int perp(int idx) const { return perp_[idx]; }
    int join(int i, int j) const;
    int meet(int i, int j) const;
    bool leq(int small, int big) const;
    mpz_class mobius(int k_idx, int j_idx) const;

private:
    bool has_tables() const { return !join_.empty(); }
    size_t pos(int i, int j) const { return static_cast<size_t>(i) * spaces_.size() + j; }

    Field field_;
    int n_;
    long long cap_;
    std::vector<Subspace> spaces_;
    std::vector<int> dim_offset_;
    std::vector<int> perp_;
    std::vector<int> join_;
    std::vector<int> meet_;
    std::vector<bool> leq_;
};

using LatticePtr = std::shared_ptr<const LatticeIndex>;

LatticePtr make_lattice(const Field& field, int n, long long cap = kDefaultCap);

}  // namespace qpolymat
