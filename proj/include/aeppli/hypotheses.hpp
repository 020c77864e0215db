// Exact subspace tests for every named hypothesis: the del-dbar lemma per
// bidegree and manifold-wide, (H_k), (Htilde_k), (*_k), the SKT <=> HS
// equivalence on del-dbar entries, the 2b_k inequality, and E_1-degeneration.
//
// "d-closed form in Im del" is the subspace Im del ^ ker dbar (del-closedness
// of del-images is automatic), so each hypothesis is a rank test.  A false
// verdict ships a witness vector picked deterministically: the first basis
// vector of the violating subspace, canonical order.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aeppli/cohomology.hpp"
#include "aeppli/errors.hpp"
#include "aeppli/form.hpp"
#include "aeppli/frolicher.hpp"
#include "aeppli/induced.hpp"
#include "aeppli/linalg.hpp"
#include "aeppli/operators.hpp"

namespace aeppli {

struct Verdict {
    bool holds = false;
    std::optional<BidegreeForm> witness;  // separating form when false
    std::string witness_note;             // which inclusion it violates
};

namespace detail {

inline Subspace<GaussRat> zero_space(int n, int p, int q) {
    return Subspace<GaussRat>(space_dim(n, p, q));
}

// Im del into (p,q).
inline Subspace<GaussRat> image_del(const OperatorSet& ops, int p, int q) {
    if (p < 1) return zero_space(ops.n(), p, q);
    return image(ops.del(p - 1, q));
}

inline Subspace<GaussRat> image_dbar(const OperatorSet& ops, int p, int q) {
    if (q < 1) return zero_space(ops.n(), p, q);
    return image(ops.dbar(p, q - 1));
}

inline Subspace<GaussRat> image_deldbar(const OperatorSet& ops, int p, int q) {
    if (p < 1 || q < 1) return zero_space(ops.n(), p, q);
    return image(ops.del(p - 1, q) * ops.dbar(p - 1, q - 1));
}

inline Subspace<GaussRat> kernel_dbar(const OperatorSet& ops, int p, int q) {
    if (q >= ops.n()) return Subspace<GaussRat>::full(space_dim(ops.n(), p, q));
    return kernel(ops.dbar(p, q));
}

inline Subspace<GaussRat> kernel_del(const OperatorSet& ops, int p, int q) {
    if (p >= ops.n()) return Subspace<GaussRat>::full(space_dim(ops.n(), p, q));
    return kernel(ops.del(p, q));
}

// d-closed del-exact forms of type (p,q): Im del ^ ker dbar.
inline Subspace<GaussRat> dclosed_del_exact(const OperatorSet& ops, int p, int q) {
    return image_del(ops, p, q).intersect(kernel_dbar(ops, p, q));
}

// First canonical basis vector of `sub` outside `target`.
inline std::optional<BidegreeForm> first_outside(const Subspace<GaussRat>& sub,
                                                 const Subspace<GaussRat>& target, int n, int p,
                                                 int q) {
    for (std::size_t i = 0; i < sub.dim(); ++i) {
        const auto v = sub.basis_row(i);
        if (!target.contains(v)) return BidegreeForm::from_vector(n, p, q, v);
    }
    return std::nullopt;
}

// The (*_k)-style implication at one bidegree: d-closed forms in Im del lie
// in Im del dbar.
inline Verdict im_del_implies_ddbar(const OperatorSet& ops, int p, int q) {
    const int n = ops.n();
    Verdict v;
    if (p < 0 || q < 0 || p > n || q > n) {  // zero space: vacuous
        v.holds = true;
        return v;
    }
    const auto closed_exact = dclosed_del_exact(ops, p, q);
    const auto target = image_deldbar(ops, p, q);
    v.holds = target.contains(closed_exact);
    if (!v.holds) {
        v.witness = first_outside(closed_exact, target, n, p, q);
        v.witness_note = "d-closed, del-exact, not del-dbar-exact at (" + std::to_string(p) + "," +
                         std::to_string(q) + ")";
    }
    return v;
}

}  // namespace detail

// (H_k): d-closed (p+k,p-k+1)-forms in Im del lie in Im dbar.
inline Verdict check_Hk(const OperatorSet& ops, int p, int k) {
    detail::check_pk(ops, p, k);
    const int a = p + k, b = p - k + 1;
    Verdict v;
    const auto closed_exact = detail::dclosed_del_exact(ops, a, b);
    const auto target = detail::image_dbar(ops, a, b);
    v.holds = target.contains(closed_exact);
    if (!v.holds) {
        v.witness = detail::first_outside(closed_exact, target, ops.n(), a, b);
        v.witness_note = "d-closed, del-exact, not dbar-exact at (" + std::to_string(a) + "," +
                         std::to_string(b) + ")";
    }
    return v;
}

// (Htilde_k), decided two independent ways and cross-asserted:
// (a) d-closed forms in Im del lie in Im del dbar at (p+k,p-k+1);
// (b) the induced map That_k vanishes identically.
inline Verdict check_Htilde_k(const OperatorSet& ops, int p, int k) {
    detail::check_pk(ops, p, k);
    Verdict v = detail::im_del_implies_ddbar(ops, p + k, p - k + 1);
    const bool via_that = induced_That(ops, p, k).is_zero();
    internal_check(v.holds == via_that,
                   "(Htilde_k) subspace route disagrees with the That_k route");
    return v;
}

// del-dbar lemma in one bidegree: within d-closed (p,q)-forms the four
// exactness subspaces (d-exact pure type, del-exact, dbar-exact,
// del-dbar-exact) coincide.
inline Verdict check_ddbar(const OperatorSet& ops, int p, int q) {
    const int n = ops.n();
    if (p < 0 || q < 0 || p > n || q > n) throw DomainError("bidegree out of range");
    const auto ker_d = detail::kernel_del(ops, p, q).intersect(detail::kernel_dbar(ops, p, q));

    // pure-type slice of Im d: project image of the total d to the (p,q) block
    const int deg = p + q;
    Subspace<GaussRat> dexact = detail::zero_space(n, p, q);
    if (deg >= 1) {
        const BlockLayout dst = BlockLayout::degree(n, deg);
        const auto im_total = image(total_d_matrix(ops, deg - 1));
        std::size_t off = 0, width = space_dim(n, p, q);
        for (std::size_t b = 0; b < dst.blocks.size(); ++b)
            if (dst.blocks[b] == std::make_pair(p, q)) off = dst.offsets[b];
        // forms in Im d that are purely of type (p,q): intersect with the
        // block-axis subspace, then slice
        std::vector<Vec<GaussRat>> axis;
        for (std::size_t i = 0; i < width; ++i) {
            Vec<GaussRat> e(dst.total, GaussRat(0));
            e[off + i] = GaussRat(1);
            axis.push_back(std::move(e));
        }
        const auto pure_slice = im_total.intersect(Subspace<GaussRat>::span(dst.total, axis));
        std::vector<Vec<GaussRat>> gens;
        for (std::size_t i = 0; i < pure_slice.dim(); ++i) {
            const auto row = pure_slice.basis_row(i);
            gens.push_back(Vec<GaussRat>(row.begin() + off, row.begin() + off + width));
        }
        dexact = Subspace<GaussRat>::span(width, gens);
    }

    const auto del_exact = detail::image_del(ops, p, q).intersect(detail::kernel_dbar(ops, p, q));
    const auto dbar_exact = detail::image_dbar(ops, p, q).intersect(detail::kernel_del(ops, p, q));
    const auto ddbar_exact = detail::image_deldbar(ops, p, q);
    internal_check(ker_d.contains(dexact) && ker_d.contains(del_exact) &&
                       ker_d.contains(dbar_exact) && ker_d.contains(ddbar_exact),
                   "exactness subspaces escape the d-closed forms");

    Verdict v;
    v.holds = dexact == del_exact && del_exact == dbar_exact && dbar_exact == ddbar_exact;
    if (!v.holds) {
        // deterministic witness: prefer a del-exact form missing one of the
        // other exactness subspaces, then a d-exact one
        if (auto w = detail::first_outside(del_exact, dbar_exact, n, p, q)) {
            v.witness = w;
            v.witness_note = "del-exact but not dbar-exact";
        } else if (auto w2 = detail::first_outside(del_exact, ddbar_exact, n, p, q)) {
            v.witness = w2;
            v.witness_note = "del-exact but not del-dbar-exact";
        } else if (auto w3 = detail::first_outside(dexact, del_exact, n, p, q)) {
            v.witness = w3;
            v.witness_note = "d-exact but not del-exact";
        } else if (auto w4 = detail::first_outside(dbar_exact, del_exact, n, p, q)) {
            v.witness = w4;
            v.witness_note = "dbar-exact but not del-exact";
        } else if (auto w5 = detail::first_outside(ddbar_exact, dexact, n, p, q)) {
            v.witness = w5;
            v.witness_note = "del-dbar-exact but not d-exact";
        } else {
            v.witness = detail::first_outside(dexact, ddbar_exact, n, p, q);
            v.witness_note = "d-exact but not del-dbar-exact";
        }
    }
    return v;
}

inline bool check_ddbar_manifold(const OperatorSet& ops) {
    for (int p = 0; p <= ops.n(); ++p)
        for (int q = 0; q <= ops.n(); ++q)
            if (!check_ddbar(ops, p, q).holds) return false;
    return true;
}

// (*_k): the Im del => Im del dbar implication for d-closed forms of types
// (p,q), (q,p), (p+1,q), (q+1,p) over all p+q = k and p+q = 2n-k.
inline Verdict check_star_k(const OperatorSet& ops, int k) {
    const int n = ops.n();
    if (k < 0 || k > 2 * n) throw DomainError("degree out of range");
    Verdict out;
    out.holds = true;
    for (int s : {k, 2 * n - k}) {
        for (int p = std::max(0, s - n); p <= std::min(n, s); ++p) {
            const int q = s - p;
            for (auto [a, b] : {std::pair{p, q}, {q, p}, {p + 1, q}, {q + 1, p}}) {
                if (a > n || b > n) continue;  // zero space, vacuous
                Verdict v = detail::im_del_implies_ddbar(ops, a, b);
                if (!v.holds) {
                    if (!out.witness) {
                        out.witness = v.witness;
                        out.witness_note = v.witness_note;
                    }
                    out.holds = false;
                }
            }
        }
    }
    return out;
}

struct AngellaTomassini {
    long long lhs;    // 2 b_k
    long long rhs;    // sum_{p+q=k} h_A + sum_{p+q=2n-k} h_A
    long long slack;  // rhs - lhs, always >= 0
};

inline AngellaTomassini angella_tomassini(const OperatorSet& ops, int k) {
    const int n = ops.n();
    if (k < 0 || k > 2 * n) throw DomainError("degree out of range");
    AngellaTomassini r{};
    r.lhs = 2 * betti(ops, k);
    r.rhs = 0;
    for (int s : {k, 2 * n - k})
        for (int p = std::max(0, s - n); p <= std::min(n, s); ++p)
            r.rhs += static_cast<long long>(aeppli_cohomology(ops, p, s - p).dim());
    r.slack = r.rhs - r.lhs;
    internal_check(r.slack >= 0, "2 b_k exceeds the Aeppli dimension bound");
    return r;
}

inline bool e1_degeneration(const OperatorSet& ops) {
    return frolicher(ops, 1) == frolicher_infinity(ops);
}

// SKT <=> HS equivalence data for a real (1,1)-form with del dbar w = 0:
// solve dbar b = -del w, del b = 0 for b in (2,0); then a^{0,2} = conj(b) and
// d(a^{0,2} + w + conj(a^{0,2})) = 0 exactly.
struct SktHsReport {
    bool precondition_ok = false;   // w real, del dbar w = 0
    bool ddbar_manifold = false;
    bool solvable = false;
    std::optional<BidegreeForm> alpha02;
    bool verified = false;          // exact d-closedness of the assembled 2-form
};

inline SktHsReport skt_hs_equivalence(const OperatorSet& ops, const BidegreeForm& w) {
    const int n = ops.n();
    SktHsReport rep;
    if (w.p() != 1 || w.q() != 1) throw DomainError("expected a (1,1)-form");
    if (!is_real(w)) throw DomainError("expected a real form");
    if (n >= 2 && !ops.apply_del_dbar(w).is_zero()) return rep;  // not SKT
    rep.precondition_ok = true;
    rep.ddbar_manifold = check_ddbar_manifold(ops);

    // b in (2,0) with dbar b = -del w and del b = 0, one coupled solve
    const std::size_t dim20 = space_dim(n, 2, 0);
    const std::size_t dim21 = space_dim(n, 2, 1);
    const std::size_t dim30 = space_dim(n, 3, 0);
    Matrix<GaussRat> m(dim21 + dim30, dim20);
    const auto& b21 = ops.dbar(2, 0);
    for (std::size_t i = 0; i < dim21; ++i)
        for (std::size_t j = 0; j < dim20; ++j) m(i, j) = b21(i, j);
    if (n >= 3) {
        const auto& d30 = ops.del(2, 0);
        for (std::size_t i = 0; i < dim30; ++i)
            for (std::size_t j = 0; j < dim20; ++j) m(dim21 + i, j) = d30(i, j);
    }
    Vec<GaussRat> rhs(dim21 + dim30, GaussRat(0));
    const auto dw = ops.apply_del(w).to_vector();
    for (std::size_t i = 0; i < dim21; ++i) rhs[i] = -dw[i];
    const auto sol = solve(m, rhs);
    if (!sol) {
        if (rep.ddbar_manifold)
            throw InternalCheckError("HS tower unsolvable on a del-dbar entry");
        return rep;
    }
    rep.solvable = true;
    const auto b = BidegreeForm::from_vector(n, 2, 0, *sol);
    rep.alpha02 = conjugate(b);

    TotalForm omega(n, 2);
    omega.set_block_add(*rep.alpha02);
    omega.set_block_add(w);
    omega.set_block_add(b);
    rep.verified = ops.apply_d(omega).is_zero();
    internal_check(rep.verified, "assembled HS 2-form is not d-closed");
    return rep;
}

}  // namespace aeppli
