#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpolymat/code.hpp"
#include "qpolymat/lattice.hpp"

namespace qpolymat {

struct AxiomViolation {
    int axiom;  // 1, 2 or 3
    int a_idx;
    int b_idx;  // -1 for R1
    std::string detail;
};

/// (q, m)-polymatroid as an explicit rank table aligned with a LatticeIndex.
class QMPolymatroid {
public:
    QMPolymatroid(LatticePtr lattice, int m, std::vector<int> rank_table);

    const Field& field() const { return lattice_->field(); }
    int n() const { return lattice_->ambient(); }
    int m() const { return m_; }
    const LatticePtr& lattice() const { return lattice_; }
    const std::vector<int>& rank_table() const { return rank_; }

    int rho(int idx) const { return rank_[idx]; }
    int rho(const Subspace& J) const { return rank_[lattice_->index_of(J)]; }
    /// rho(E), the rank of the polymatroid.
    int rank() const { return rank_.back(); }

    friend bool operator==(const QMPolymatroid& a, const QMPolymatroid& b) {
        return a.m_ == b.m_ && a.lattice_->field() == b.lattice_->field() &&
               a.lattice_->ambient() == b.lattice_->ambient() && a.rank_ == b.rank_;
    }

private:
    LatticePtr lattice_;
    int m_;
    std::vector<int> rank_;
};

/// First violated axiom among R1 (bounds), R2 (monotonicity),
/// R3 (submodularity), or nullopt if the table is a valid (q, m)-polymatroid.
std::optional<AxiomViolation> check_axioms(const QMPolymatroid& P);

/// rho_C(J) = dim C - dim C(J^perp).
QMPolymatroid from_code(const RankMetricCode& C);

/// Uniform polymatroid: rho(J) = m min{dim J, ell}.
QMPolymatroid uniform(int ell, int n, int m, const Field& field, long long cap = kDefaultCap);
QMPolymatroid uniform(int ell, int m, LatticePtr lattice);

/// rho*(J) = rho(J^perp) + m dim J - rho(E).
QMPolymatroid dual(const QMPolymatroid& P);

/// t-th truncation: rho capped at rho(E) - t.
QMPolymatroid truncation(const QMPolymatroid& P, int t);

/// P^[j]: ranks scaled by j; a (q, mj)-polymatroid.
QMPolymatroid scale(const QMPolymatroid& P, int j);

bool is_independent(const QMPolymatroid& P, int idx);
bool is_independent(const QMPolymatroid& P, const Subspace& J);

/// Minimal dependent spaces.
std::vector<Subspace> circuits(const QMPolymatroid& P);

/// Spaces of non-full rank whose proper superspaces all have full rank.
std::vector<Subspace> hyperplanes(const QMPolymatroid& P);

/// Computed both as circuits(dual(P)) and as perps of hyperplanes(P); the two
/// routes must coincide.
std::vector<Subspace> cocircuits(const QMPolymatroid& P);

/// Minimum circuit dimension; nullopt when there is no circuit.
std::optional<int> girth(const QMPolymatroid& P);

}  // namespace qpolymat
