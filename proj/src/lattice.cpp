#include "qpolymat/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "qpolymat/qfuncs.hpp"

namespace qpolymat {

namespace {

// Largest lattice for which the quadratic join/meet/leq tables are built.
constexpr int kTableLimit = 1200;

}  // namespace

void for_each_rref(const Field& field, int n, int j,
                   const std::function<void(const MatrixGF&)>& fn) {
    if (j < 0 || j > n) throw std::invalid_argument("for_each_rref: dimension out of range");
    if (j == 0) {
        fn(MatrixGF(field, 0, n));
        return;
    }
    std::vector<int> pivots(j);
    for (int i = 0; i < j; ++i) pivots[i] = i;
    const int q = field.iq();
    while (true) {
        std::vector<bool> is_pivot(n, false);
        for (int p : pivots) is_pivot[p] = true;
        // Free slots: to the right of each row's pivot, in non-pivot columns.
        std::vector<std::pair<int, int>> free_slots;
        for (int i = 0; i < j; ++i)
            for (int c = pivots[i] + 1; c < n; ++c)
                if (!is_pivot[c]) free_slots.emplace_back(i, c);

        MatrixGF M(field, j, n);
        for (int i = 0; i < j; ++i) M.set(i, pivots[i], 1);
        std::vector<int> odo(free_slots.size(), 0);
        while (true) {
            fn(M);
            size_t pos = 0;
            while (pos < odo.size()) {
                if (odo[pos] + 1 < q) {
                    ++odo[pos];
                    M.set(free_slots[pos].first, free_slots[pos].second, odo[pos]);
                    break;
                }
                odo[pos] = 0;
                M.set(free_slots[pos].first, free_slots[pos].second, 0);
                ++pos;
            }
            if (pos == odo.size()) break;
        }

        // next pivot combination in lex order
        int i = j - 1;
        while (i >= 0 && pivots[i] == n - j + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int t = i + 1; t < j; ++t) pivots[t] = pivots[t - 1] + 1;
    }
}

std::vector<Subspace> grassmannian(const Field& field, int n, int j, long long cap) {
    if (j < 0 || j > n) throw std::invalid_argument("grassmannian: dimension out of range");
    mpz_class count = qbinom_z(n, j, field.q());
    if (count > static_cast<long>(cap))
        throw ResourceLimitError("grassmannian(" + std::to_string(n) + ", " + std::to_string(j) + ")",
                                 count.fits_slong_p() ? count.get_si() : cap + 1, cap);
    std::vector<Subspace> out;
    out.reserve(count.get_ui());
    for_each_rref(field, n, j, [&](const MatrixGF& M) { out.push_back(Subspace::from_rref(M)); });
    std::sort(out.begin(), out.end());
    return out;
}

LatticeIndex::LatticeIndex(Field field, int n, long long cap) : field_(field), n_(n), cap_(cap) {
    if (n < 0) throw std::invalid_argument("LatticeIndex: negative ambient dimension");
    mpz_class total = galois_number(n, field.q());
    if (total > static_cast<long>(cap))
        throw ResourceLimitError("subspace lattice of F_" + std::to_string(field.q()) + "^" +
                                     std::to_string(n),
                                 total.fits_slong_p() ? total.get_si() : cap + 1, cap);
    spaces_.reserve(total.get_ui());
    dim_offset_.assign(n + 2, 0);
    for (int d = 0; d <= n; ++d) {
        dim_offset_[d] = static_cast<int>(spaces_.size());
        auto layer = grassmannian(field, n, d, cap);
        spaces_.insert(spaces_.end(), layer.begin(), layer.end());
    }
    dim_offset_[n + 1] = static_cast<int>(spaces_.size());

    perp_.resize(spaces_.size());
    for (int i = 0; i < size(); ++i) perp_[i] = index_of(qpolymat::perp(spaces_[i]));

    if (size() <= kTableLimit) {
        join_.assign(spaces_.size() * spaces_.size(), 0);
        meet_.assign(spaces_.size() * spaces_.size(), 0);
        leq_.assign(spaces_.size() * spaces_.size(), false);
        for (int i = 0; i < size(); ++i)
            for (int j = i; j < size(); ++j) {
                int s = index_of(sum(spaces_[i], spaces_[j]));
                join_[pos(i, j)] = join_[pos(j, i)] = s;
            }
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j) {
                // meet via duality keeps a single audited primitive in play
                meet_[pos(i, j)] = perp_[join_[pos(perp_[i], perp_[j])]];
                leq_[pos(i, j)] = (join_[pos(i, j)] == j);
            }
    }
}

int LatticeIndex::index_of(const Subspace& s) const {
    auto it = std::lower_bound(spaces_.begin(), spaces_.end(), s);
    if (it == spaces_.end() || *it != s)
        throw std::invalid_argument("LatticeIndex::index_of: subspace not in this lattice");
    return static_cast<int>(it - spaces_.begin());
}

int LatticeIndex::join(int i, int j) const {
    if (has_tables()) return join_[pos(i, j)];
    return index_of(sum(spaces_[i], spaces_[j]));
}

int LatticeIndex::meet(int i, int j) const {
    if (has_tables()) return meet_[pos(i, j)];
    return index_of(intersect(spaces_[i], spaces_[j]));
}

bool LatticeIndex::leq(int small, int big) const {
    if (has_tables()) return leq_[pos(small, big)];
    return contains(spaces_[big], spaces_[small]);
}

mpz_class LatticeIndex::mobius(int k_idx, int j_idx) const {
    if (!leq(k_idx, j_idx)) return 0;
    int d = dim(j_idx) - dim(k_idx);
    mpz_class out;
    mpz_class q(static_cast<long>(field_.q()));
    mpz_pow_ui(out.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(binom2(d)));
    return (d % 2 == 0) ? out : -out;
}

LatticePtr make_lattice(const Field& field, int n, long long cap) {
    return std::make_shared<const LatticeIndex>(field, n, cap);
}

}  // namespace qpolymat
