// Induced maps between cohomologies in representative coordinates:
//
//   T      : Aeppli(p,p)            -> Dolbeault-dbar(p+1,p),   [w] -> [del w]
//   That_k : Aeppli(p+k-1,p-k+1)    -> BottChern(p+k,p-k+1),    [w] -> [del w]
//   I      : BottChern(p+k,p-k+1)   -> Dolbeault-del(p+k,p-k+1),[g] -> [g]
//   g_k    : I o That_k
//
// Well-definedness is re-verified at construction: the source modding
// subspace must be carried into the target modding subspace.

#pragma once

#include <utility>

#include "aeppli/cohomology.hpp"
#include "aeppli/errors.hpp"
#include "aeppli/linalg.hpp"

namespace aeppli {

struct InducedMap {
    CohomologySpace source;
    CohomologySpace target;
    Matrix<GaussRat> matrix;  // target coords x source coords

    std::size_t rank_of() const { return rank(matrix); }
    bool is_zero() const { return matrix.is_zero(); }
};

namespace detail {

enum class MapOp { Del, Identity };

inline InducedMap make_induced(const OperatorSet& ops, CohomologySpace src, CohomologySpace dst,
                               MapOp op) {
    internal_check(src.layout().blocks.size() == 1 && dst.layout().blocks.size() == 1,
                   "induced maps act on pure-type spaces");
    const auto [sp, sq] = src.layout().blocks[0];
    auto apply = [&](const Vec<GaussRat>& v) -> Vec<GaussRat> {
        const auto f = BidegreeForm::from_vector(ops.n(), sp, sq, v);
        const auto g = (op == MapOp::Del) ? ops.apply_del(f) : f;
        return g.to_vector();
    };
    // 1. kernel subspace maps into the target kernel subspace
    for (std::size_t i = 0; i < src.quotient().kernel_space().dim(); ++i)
        internal_check(dst.quotient().kernel_space().contains(apply(src.quotient().kernel_space().basis_row(i))),
                       "induced map leaves the target kernel subspace");
    // 2. modding subspace maps into the target modding subspace
    for (std::size_t i = 0; i < src.quotient().modding_space().dim(); ++i)
        internal_check(dst.quotient().modding_space().contains(apply(src.quotient().modding_space().basis_row(i))),
                       "induced map is not well defined on classes");
    Matrix<GaussRat> m(dst.dim(), src.dim());
    for (std::size_t j = 0; j < src.dim(); ++j) {
        const auto coords = dst.quotient().coords(apply(src.quotient().representatives()[j]));
        for (std::size_t i = 0; i < dst.dim(); ++i) m(i, j) = coords[i];
    }
    return InducedMap{std::move(src), std::move(dst), std::move(m)};
}

inline void check_pk(const OperatorSet& ops, int p, int k) {
    if (k < 1 || k > p + 1 || p + k > ops.n()) throw DomainError("(p,k) out of range: need 1 <= k <= p+1 and p+k <= n");
}

}  // namespace detail

inline InducedMap induced_T(const OperatorSet& ops, int p) {
    if (p < 0 || p + 1 > ops.n()) throw DomainError("bidegree out of range for T");
    return detail::make_induced(ops, aeppli_cohomology(ops, p, p), dolbeault(ops, p + 1, p, true),
                                detail::MapOp::Del);
}

inline InducedMap induced_That(const OperatorSet& ops, int p, int k) {
    detail::check_pk(ops, p, k);
    return detail::make_induced(ops, aeppli_cohomology(ops, p + k - 1, p - k + 1),
                                bott_chern(ops, p + k, p - k + 1), detail::MapOp::Del);
}

inline InducedMap induced_I(const OperatorSet& ops, int p, int k) {
    detail::check_pk(ops, p, k);
    return detail::make_induced(ops, bott_chern(ops, p + k, p - k + 1),
                                dolbeault(ops, p + k, p - k + 1, false), detail::MapOp::Identity);
}

inline InducedMap compose_g(const OperatorSet& ops, int p, int k) {
    auto that = induced_That(ops, p, k);
    auto i = induced_I(ops, p, k);
    Matrix<GaussRat> m = i.matrix * that.matrix;
    return InducedMap{std::move(that.source), std::move(i.target), std::move(m)};
}

// Exact subspace equality ker I^{p+k,p-k+1} = Im That_k inside the
// Bott-Chern representative coordinate space.
inline bool kernel_I_equals_image_That(const OperatorSet& ops, int p, int k) {
    const auto that = induced_That(ops, p, k);
    const auto i = induced_I(ops, p, k);
    return kernel(i.matrix) == image(that.matrix);
}

}  // namespace aeppli
