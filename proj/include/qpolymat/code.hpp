#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "qpolymat/lattice.hpp"

namespace qpolymat {

/// Delsarte rank-metric code: an F_q-subspace of n x m matrices, held by a
/// canonical basis (RREF of the flattened generators), so equal codes compare
/// equal structurally. Shares a lattice index over E = F_q^n with everything
/// derived from it.
class RankMetricCode {
public:
    RankMetricCode(Field field, int n, int m, const std::vector<MatrixGF>& generators,
                   long long cap = kDefaultCap);
    RankMetricCode(Field field, int n, int m, const std::vector<MatrixGF>& generators,
                   LatticePtr lattice);

    const Field& field() const { return field_; }
    int n() const { return n_; }
    int m() const { return m_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<MatrixGF>& basis() const { return basis_; }
    const LatticePtr& lattice() const { return lattice_; }
    long long cap() const { return lattice_->cap(); }

    friend bool operator==(const RankMetricCode& a, const RankMetricCode& b) {
        return a.field_ == b.field_ && a.n_ == b.n_ && a.m_ == b.m_ && a.basis_ == b.basis_;
    }

private:
    Field field_;
    int n_;
    int m_;
    std::vector<MatrixGF> basis_;
    LatticePtr lattice_;
};

/// Basis of an r-dimensional subcode.
using SubcodeBasis = std::vector<MatrixGF>;

struct SupportDistribution {
    int r;
    std::map<Subspace, long long> table;

    long long at(const Subspace& w) const {
        auto it = table.find(w);
        return it == table.end() ? 0 : it->second;
    }
};

/// Rank-support of a codeword: its column space.
Subspace supp(const MatrixGF& M);

/// Higher rank-support of a subcode, summed over a basis (equals the sum over
/// all members; the exhaustive form is exercised by tests).
Subspace supp_subcode(const Field& field, int n, const SubcodeBasis& basis);

int rank_weight(const MatrixGF& M);

/// Streams all q^k codewords in coefficient-counter order.
void for_each_codeword(const RankMetricCode& C,
                       const std::function<void(const MatrixGF&)>& fn);

/// Streams a basis for each of the [k r]_q subcodes of dimension r, one per
/// RREF coefficient matrix over F_q^k.
void for_each_subcode(const RankMetricCode& C, int r,
                      const std::function<void(const SubcodeBasis&)>& fn);

mpz_class num_codewords(const RankMetricCode& C);
mpz_class num_subcodes(const RankMetricCode& C, int r);

/// C(J) = { M in C : supp(M) <= J }, solved as a linear system on the
/// coefficient space.
RankMetricCode code_restrict(const RankMetricCode& C, const Subspace& J);

/// Dimension of C(J) for every lattice position.
std::vector<int> restrict_dims(const RankMetricCode& C);

/// Trace dual: { N : Tr(M N^T) = 0 for all M in C }.
RankMetricCode dual_code(const RankMetricCode& C);

/// Code with every generator transposed (m x n).
RankMetricCode transpose_code(const RankMetricCode& C);

/// A_C(w) for w = 0..n.
std::vector<mpz_class> weight_distribution(const RankMetricCode& C);

/// A^(r)_C: counts of r-dimensional subcodes by exact support.
SupportDistribution support_distribution(const RankMetricCode& C, int r);

/// B^(r)_C(J) = [dim C(J) choose r]_q for every lattice position.
std::vector<mpz_class> b_distribution(const RankMetricCode& C, int r);

/// Minimal members of { Supp(D) : D an r-dimensional subcode }; computed both
/// from the support set and from the minimal-restriction characterization,
/// which must agree.
std::vector<Subspace> min_supports(const RankMetricCode& C, int r);

/// d^(r)_C; nullopt means no r-dimensional subcode exists.
std::optional<int> generalized_weight(const RankMetricCode& C, int r);

}  // namespace qpolymat
