#include "qpolymat/polymatroid.hpp"

#include <algorithm>
#include <stdexcept>

#include "qpolymat/errors.hpp"

namespace qpolymat {

QMPolymatroid::QMPolymatroid(LatticePtr lattice, int m, std::vector<int> rank_table)
    : lattice_(std::move(lattice)), m_(m), rank_(std::move(rank_table)) {
    if (m_ < 0) throw std::invalid_argument("QMPolymatroid: negative weight parameter");
    if (static_cast<int>(rank_.size()) != lattice_->size())
        throw std::invalid_argument("QMPolymatroid: rank table size does not match the lattice");
}

std::optional<AxiomViolation> check_axioms(const QMPolymatroid& P) {
    const LatticeIndex& lat = *P.lattice();
    for (int i = 0; i < lat.size(); ++i) {
        if (P.rho(i) < 0 || P.rho(i) > P.m() * lat.dim(i))
            return AxiomViolation{1, i, -1,
                                  "rho(" + lat.at(i).to_string() + ") = " + std::to_string(P.rho(i)) +
                                      " violates 0 <= rho <= m dim"};
    }
    for (int i = 0; i < lat.size(); ++i)
        for (int j = 0; j < lat.size(); ++j) {
            if (i == j || !lat.leq(i, j)) continue;
            if (P.rho(i) > P.rho(j))
                return AxiomViolation{2, i, j,
                                      "rho(" + lat.at(i).to_string() + ") > rho(" +
                                          lat.at(j).to_string() + ")"};
        }
    for (int i = 0; i < lat.size(); ++i)
        for (int j = i; j < lat.size(); ++j) {
            int join = lat.join(i, j);
            int meet = lat.meet(i, j);
            if (P.rho(join) + P.rho(meet) > P.rho(i) + P.rho(j))
                return AxiomViolation{3, i, j,
                                      "submodularity fails at A = " + lat.at(i).to_string() +
                                          ", B = " + lat.at(j).to_string()};
        }
    return std::nullopt;
}

QMPolymatroid from_code(const RankMetricCode& C) {
    const LatticeIndex& lat = *C.lattice();
    std::vector<int> dims = restrict_dims(C);
    std::vector<int> rank(lat.size());
    for (int i = 0; i < lat.size(); ++i) rank[i] = C.dim() - dims[lat.perp(i)];
    return QMPolymatroid(C.lattice(), C.m(), std::move(rank));
}

QMPolymatroid uniform(int ell, int n, int m, const Field& field, long long cap) {
    return uniform(ell, m, make_lattice(field, n, cap));
}

QMPolymatroid uniform(int ell, int m, LatticePtr lattice) {
    if (ell < 0 || ell > lattice->ambient())
        throw std::invalid_argument("uniform: ell out of range");
    std::vector<int> rank(lattice->size());
    for (int i = 0; i < lattice->size(); ++i) rank[i] = m * std::min(lattice->dim(i), ell);
    return QMPolymatroid(std::move(lattice), m, std::move(rank));
}

QMPolymatroid dual(const QMPolymatroid& P) {
    const LatticeIndex& lat = *P.lattice();
    std::vector<int> rank(lat.size());
    for (int i = 0; i < lat.size(); ++i)
        rank[i] = P.rho(lat.perp(i)) + P.m() * lat.dim(i) - P.rank();
    return QMPolymatroid(P.lattice(), P.m(), std::move(rank));
}

QMPolymatroid truncation(const QMPolymatroid& P, int t) {
    if (t < 0 || t > P.rank()) throw std::invalid_argument("truncation: t out of range");
    const int cap = P.rank() - t;
    std::vector<int> rank(P.rank_table());
    for (int& v : rank) v = std::min(v, cap);
    return QMPolymatroid(P.lattice(), P.m(), std::move(rank));
}

QMPolymatroid scale(const QMPolymatroid& P, int j) {
    if (j < 0) throw std::invalid_argument("scale: negative factor");
    std::vector<int> rank(P.rank_table());
    for (int& v : rank) v *= j;
    return QMPolymatroid(P.lattice(), P.m() * j, std::move(rank));
}

bool is_independent(const QMPolymatroid& P, int idx) {
    return P.rho(idx) == P.m() * P.lattice()->dim(idx);
}

bool is_independent(const QMPolymatroid& P, const Subspace& J) {
    return is_independent(P, P.lattice()->index_of(J));
}

std::vector<Subspace> circuits(const QMPolymatroid& P) {
    const LatticeIndex& lat = *P.lattice();
    std::vector<int> found;
    for (int i = 0; i < lat.size(); ++i) {
        if (is_independent(P, i)) continue;
        bool contains_smaller = false;
        for (int c : found)
            if (lat.leq(c, i)) {
                contains_smaller = true;
                break;
            }
        if (!contains_smaller) found.push_back(i);
    }
    std::vector<Subspace> out;
    out.reserve(found.size());
    for (int i : found) out.push_back(lat.at(i));
    return out;
}

std::vector<Subspace> hyperplanes(const QMPolymatroid& P) {
    const LatticeIndex& lat = *P.lattice();
    std::vector<int> low;
    for (int i = 0; i < lat.size(); ++i)
        if (P.rho(i) < P.rank()) low.push_back(i);
    std::vector<Subspace> out;
    for (int h : low) {
        bool maximal = true;
        for (int other : low)
            if (other != h && lat.leq(h, other)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(lat.at(h));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subspace> cocircuits(const QMPolymatroid& P) {
    std::vector<Subspace> via_dual = circuits(dual(P));
    std::sort(via_dual.begin(), via_dual.end());

    const LatticeIndex& lat = *P.lattice();
    std::vector<Subspace> via_hyperplanes;
    for (const auto& h : hyperplanes(P)) via_hyperplanes.push_back(lat.at(lat.perp(lat.index_of(h))));
    std::sort(via_hyperplanes.begin(), via_hyperplanes.end());

    if (via_dual != via_hyperplanes)
        throw VerificationError("cocircuits: circuits of the dual differ from perps of hyperplanes");
    return via_dual;
}

std::optional<int> girth(const QMPolymatroid& P) {
    auto cs = circuits(P);
    if (cs.empty()) return std::nullopt;
    int best = cs[0].dim();
    for (const auto& c : cs) best = std::min(best, c.dim());
    return best;
}

}  // namespace qpolymat
