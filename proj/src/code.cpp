#include "qpolymat/code.hpp"

#include <algorithm>
#include <stdexcept>

#include "qpolymat/errors.hpp"
#include "qpolymat/qfuncs.hpp"

namespace qpolymat {

namespace {

std::vector<MatrixGF> reduce_generators(const Field& field, int n, int m,
                                        const std::vector<MatrixGF>& generators) {
    for (const auto& g : generators) {
        if (g.field() != field) throw std::invalid_argument("RankMetricCode: generator field mismatch");
        if (g.rows() != n || g.cols() != m)
            throw std::invalid_argument("RankMetricCode: generator shape mismatch");
    }
    std::vector<int> flat;
    flat.reserve(generators.size() * n * m);
    for (const auto& g : generators) flat.insert(flat.end(), g.flat().begin(), g.flat().end());
    MatrixGF stacked(field, static_cast<int>(generators.size()), n * m, std::move(flat));
    RrefResult rr = rref(stacked);
    std::vector<MatrixGF> basis;
    basis.reserve(rr.rank);
    for (int i = 0; i < rr.rank; ++i) basis.push_back(MatrixGF(field, n, m, rr.R.row(i)));
    return basis;
}

MatrixGF combine(const Field& field, int n, int m, const std::vector<MatrixGF>& basis,
                 const std::vector<int>& coeffs) {
    MatrixGF M(field, n, m);
    for (size_t t = 0; t < basis.size(); ++t) {
        if (coeffs[t] == 0) continue;
        M = M + basis[t].scaled(coeffs[t]);
    }
    return M;
}

}  // namespace

RankMetricCode::RankMetricCode(Field field, int n, int m, const std::vector<MatrixGF>& generators,
                               long long cap)
    : RankMetricCode(field, n, m, generators, make_lattice(field, n, cap)) {}

RankMetricCode::RankMetricCode(Field field, int n, int m, const std::vector<MatrixGF>& generators,
                               LatticePtr lattice)
    : field_(field), n_(n), m_(m), basis_(reduce_generators(field, n, m, generators)),
      lattice_(std::move(lattice)) {
    if (n < 1 || m < 1) throw std::invalid_argument("RankMetricCode: n and m must be positive");
    if (lattice_->field() != field_ || lattice_->ambient() != n_)
        throw std::invalid_argument("RankMetricCode: lattice does not match the ambient space");
}

Subspace supp(const MatrixGF& M) { return column_space(M); }

Subspace supp_subcode(const Field& field, int n, const SubcodeBasis& basis) {
    Subspace acc(field, n);
    for (const auto& M : basis) acc = sum(acc, supp(M));
    return acc;
}

int rank_weight(const MatrixGF& M) { return mat_rank(M); }

void for_each_codeword(const RankMetricCode& C, const std::function<void(const MatrixGF&)>& fn) {
    const int k = C.dim();
    mpz_class count;
    mpz_pow_ui(count.get_mpz_t(), mpz_class(static_cast<long>(C.field().q())).get_mpz_t(),
               static_cast<unsigned long>(k));
    if (count > static_cast<long>(C.cap()))
        throw ResourceLimitError("codeword enumeration",
                                 count.fits_slong_p() ? count.get_si() : C.cap() + 1, C.cap());
    std::vector<int> coeffs(k, 0);
    const int q = C.field().iq();
    while (true) {
        fn(combine(C.field(), C.n(), C.m(), C.basis(), coeffs));
        int pos = k - 1;
        while (pos >= 0 && coeffs[pos] == q - 1) coeffs[pos--] = 0;
        if (pos < 0) break;
        ++coeffs[pos];
    }
}

void for_each_subcode(const RankMetricCode& C, int r,
                      const std::function<void(const SubcodeBasis&)>& fn) {
    const int k = C.dim();
    if (r < 0 || r > k) throw std::invalid_argument("for_each_subcode: r out of range");
    mpz_class count = qbinom_z(k, r, C.field().q());
    if (count > static_cast<long>(C.cap()))
        throw ResourceLimitError("subcode enumeration",
                                 count.fits_slong_p() ? count.get_si() : C.cap() + 1, C.cap());
    for_each_rref(C.field(), k, r, [&](const MatrixGF& coeff_rows) {
        SubcodeBasis basis;
        basis.reserve(r);
        for (int i = 0; i < r; ++i)
            basis.push_back(combine(C.field(), C.n(), C.m(), C.basis(), coeff_rows.row(i)));
        fn(basis);
    });
}

mpz_class num_codewords(const RankMetricCode& C) {
    mpz_class count;
    mpz_pow_ui(count.get_mpz_t(), mpz_class(static_cast<long>(C.field().q())).get_mpz_t(),
               static_cast<unsigned long>(C.dim()));
    return count;
}

mpz_class num_subcodes(const RankMetricCode& C, int r) {
    return qbinom_z(C.dim(), r, C.field().q());
}

RankMetricCode code_restrict(const RankMetricCode& C, const Subspace& J) {
    if (J.field() != C.field() || J.ambient() != C.n())
        throw std::invalid_argument("code_restrict: subspace from the wrong ambient space");
    const int k = C.dim();
    // supp(M) <= J  iff  A M = 0 for A spanning J^perp.
    MatrixGF A = perp(J).basis();
    const int rows = A.rows() * C.m();
    MatrixGF constraints(C.field(), rows, k);
    for (int t = 0; t < k; ++t) {
        MatrixGF AB = A * C.basis()[t];
        for (int i = 0; i < AB.rows(); ++i)
            for (int j = 0; j < AB.cols(); ++j) constraints.set(i * C.m() + j, t, AB.at(i, j));
    }
    std::vector<MatrixGF> gens;
    for (const auto& coeffs : kernel(constraints))
        gens.push_back(combine(C.field(), C.n(), C.m(), C.basis(), coeffs));
    return RankMetricCode(C.field(), C.n(), C.m(), gens, C.lattice());
}

std::vector<int> restrict_dims(const RankMetricCode& C) {
    const LatticeIndex& lat = *C.lattice();
    std::vector<int> dims(lat.size());
    for (int i = 0; i < lat.size(); ++i) dims[i] = code_restrict(C, lat.at(i)).dim();
    return dims;
}

RankMetricCode dual_code(const RankMetricCode& C) {
    const int nm = C.n() * C.m();
    MatrixGF flat(C.field(), C.dim(), nm);
    for (int i = 0; i < C.dim(); ++i)
        for (int j = 0; j < nm; ++j) flat.set(i, j, C.basis()[i].flat()[j]);
    std::vector<MatrixGF> gens;
    for (const auto& v : kernel(flat)) {
        std::vector<int> entries(v.begin(), v.end());
        gens.push_back(MatrixGF(C.field(), C.n(), C.m(), entries));
    }
    return RankMetricCode(C.field(), C.n(), C.m(), gens, C.lattice());
}

RankMetricCode transpose_code(const RankMetricCode& C) {
    std::vector<MatrixGF> gens;
    gens.reserve(C.dim());
    for (const auto& M : C.basis()) gens.push_back(M.transposed());
    return RankMetricCode(C.field(), C.m(), C.n(), gens, C.cap());
}

std::vector<mpz_class> weight_distribution(const RankMetricCode& C) {
    std::vector<mpz_class> A(C.n() + 1, 0);
    for_each_codeword(C, [&](const MatrixGF& M) { A[rank_weight(M)] += 1; });
    return A;
}

SupportDistribution support_distribution(const RankMetricCode& C, int r) {
    SupportDistribution out{r, {}};
    for_each_subcode(C, r, [&](const SubcodeBasis& basis) {
        out.table[supp_subcode(C.field(), C.n(), basis)] += 1;
    });
    return out;
}

std::vector<mpz_class> b_distribution(const RankMetricCode& C, int r) {
    if (r < 0 || r > C.dim()) throw std::invalid_argument("b_distribution: r out of range");
    std::vector<int> dims = restrict_dims(C);
    std::vector<mpz_class> out(dims.size());
    for (size_t i = 0; i < dims.size(); ++i) out[i] = qbinom_z(dims[i], r, C.field().q());
    return out;
}

namespace {

std::vector<Subspace> minimal_members(std::vector<Subspace> spaces) {
    std::sort(spaces.begin(), spaces.end());
    spaces.erase(std::unique(spaces.begin(), spaces.end()), spaces.end());
    std::vector<Subspace> out;
    for (const auto& s : spaces) {
        bool minimal = true;
        for (const auto& t : spaces)
            if (t != s && contains(s, t)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(s);
    }
    return out;
}

}  // namespace

std::vector<Subspace> min_supports(const RankMetricCode& C, int r) {
    if (r < 1 || r > C.dim()) throw std::invalid_argument("min_supports: r out of range");
    std::vector<Subspace> supports;
    for_each_subcode(C, r, [&](const SubcodeBasis& basis) {
        supports.push_back(supp_subcode(C.field(), C.n(), basis));
    });
    std::vector<Subspace> from_supports = minimal_members(std::move(supports));

    // Min{ J : dim C(J) >= r } must give the same family.
    const LatticeIndex& lat = *C.lattice();
    std::vector<int> dims = restrict_dims(C);
    std::vector<Subspace> candidates;
    for (int i = 0; i < lat.size(); ++i)
        if (dims[i] >= r) candidates.push_back(lat.at(i));
    std::vector<Subspace> from_restrictions = minimal_members(std::move(candidates));

    if (from_supports != from_restrictions)
        throw VerificationError("min_supports: support family and restriction family disagree at r = " +
                                std::to_string(r));
    return from_supports;
}

std::optional<int> generalized_weight(const RankMetricCode& C, int r) {
    if (r < 1) throw std::invalid_argument("generalized_weight: r must be >= 1");
    if (r > C.dim()) return std::nullopt;
    const LatticeIndex& lat = *C.lattice();
    std::vector<int> dims = restrict_dims(C);
    std::optional<int> best;
    for (int i = 0; i < lat.size(); ++i)
        if (dims[i] >= r && (!best || lat.dim(i) < *best)) best = lat.dim(i);
    return best;
}

}  // namespace qpolymat
