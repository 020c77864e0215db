// Frolicher spectral pages computed by tower solvability.
//
// E_r^{p,q} = X_r / Y_r with
//   X_r = { a in L^{p,q} : dbar a = 0 and there are a_i in L^{p+i,q-i},
//           i = 1..r-1, with del a_{i-1} = -dbar a_i },
//   Y_r = dbar L^{p,q-1} + del { b in L^{p-1,q} : b is the top of a chain
//           b_{r-2},..,b_0 in L^{p-1-j,q+j} with dbar b_0 = 0,
//           del b_{j-1} = -dbar b_j }.
//
// Both sides are one coupled linear system each; signs of the tower unknowns
// absorb the sign difference between the two equivalent ladder conventions.

#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "aeppli/cohomology.hpp"
#include "aeppli/errors.hpp"
#include "aeppli/form.hpp"
#include "aeppli/linalg.hpp"
#include "aeppli/operators.hpp"

namespace aeppli {

namespace detail {

struct VarLayout {
    std::vector<std::pair<int, int>> blocks;
    std::vector<std::size_t> offsets;
    std::size_t total = 0;

    explicit VarLayout(int n, const std::vector<std::pair<int, int>>& bs) : blocks(bs) {
        for (auto [p, q] : blocks) {
            offsets.push_back(total);
            total += space_dim(n, p, q);
        }
    }
};

struct EqTerm {
    std::size_t var;
    bool dbar;  // false = del
    int sign;
};

// One equation block: sum of sign * op(var) = 0 landing in (tp,tq).
struct Equation {
    int tp, tq;
    std::vector<EqTerm> terms;
};

inline Matrix<GaussRat> assemble(const OperatorSet& ops, const VarLayout& vars,
                                 const std::vector<Equation>& eqs,
                                 std::vector<std::size_t>* eq_offsets = nullptr) {
    const int n = ops.n();
    std::size_t rows = 0;
    std::vector<std::size_t> roff;
    for (const auto& e : eqs) {
        roff.push_back(rows);
        rows += space_dim(n, e.tp, e.tq);
    }
    Matrix<GaussRat> m(rows, vars.total);
    for (std::size_t e = 0; e < eqs.size(); ++e) {
        if (space_dim(n, eqs[e].tp, eqs[e].tq) == 0) continue;
        for (const auto& t : eqs[e].terms) {
            auto [vp, vq] = vars.blocks[t.var];
            if (space_dim(n, vp, vq) == 0) continue;
            const Matrix<GaussRat>& op = t.dbar ? ops.dbar(vp, vq) : ops.del(vp, vq);
            for (std::size_t i = 0; i < op.rows(); ++i)
                for (std::size_t j = 0; j < op.cols(); ++j)
                    if (!op(i, j).is_zero())
                        m(roff[e] + i, vars.offsets[t.var] + j) +=
                            t.sign > 0 ? op(i, j) : -op(i, j);
        }
    }
    if (eq_offsets) *eq_offsets = roff;
    return m;
}

inline Subspace<GaussRat> project_block(const Subspace<GaussRat>& sol, const VarLayout& vars,
                                        std::size_t var) {
    std::vector<Vec<GaussRat>> gens;
    const std::size_t off = vars.offsets[var];
    const std::size_t width =
        (var + 1 < vars.offsets.size() ? vars.offsets[var + 1] : vars.total) - off;
    for (std::size_t i = 0; i < sol.dim(); ++i) {
        const auto row = sol.basis_row(i);
        gens.push_back(Vec<GaussRat>(row.begin() + off, row.begin() + off + width));
    }
    return Subspace<GaussRat>::span(width, gens);
}

}  // namespace detail

// Leading terms of classes on page r: forms admitting an (r-1)-step tower.
inline Subspace<GaussRat> frolicher_cocycles(const OperatorSet& ops, int p, int q, int r) {
    const int n = ops.n();
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < r; ++i) blocks.push_back({p + i, q - i});
    detail::VarLayout vars(n, blocks);
    std::vector<detail::Equation> eqs;
    eqs.push_back({p, q + 1, {{0, true, 1}}});
    for (int i = 1; i < r; ++i)
        eqs.push_back({p + i, q - i + 1,
                       {{static_cast<std::size_t>(i - 1), false, 1}, {static_cast<std::size_t>(i), true, 1}}});
    const auto sol = kernel(detail::assemble(ops, vars, eqs));
    return detail::project_block(sol, vars, 0);
}

// Boundary space on page r (see the header comment).
inline Subspace<GaussRat> frolicher_coboundaries(const OperatorSet& ops, int p, int q, int r) {
    const int n = ops.n();
    const std::size_t dim_pq = space_dim(n, p, q);
    Subspace<GaussRat> y =
        (q >= 1) ? image(ops.dbar(p, q - 1)) : Subspace<GaussRat>(dim_pq);
    if (r >= 2 && p >= 1) {
        std::vector<std::pair<int, int>> blocks;  // b_0,..,b_{r-2}; top is last
        for (int j = r - 2; j >= 0; --j) blocks.push_back({p - 1 - j, q + j});
        detail::VarLayout vars(n, blocks);
        std::vector<detail::Equation> eqs;
        eqs.push_back({p - r + 1, q + r - 1, {{0, true, 1}}});
        for (std::size_t j = 1; j < blocks.size(); ++j)
            eqs.push_back({blocks[j].first, blocks[j].second + 1, {{j - 1, false, 1}, {j, true, 1}}});
        const auto sol = kernel(detail::assemble(ops, vars, eqs));
        const auto tops = detail::project_block(sol, vars, blocks.size() - 1);
        std::vector<Vec<GaussRat>> gens;
        for (std::size_t i = 0; i < tops.dim(); ++i)
            gens.push_back(ops.del(p - 1, q) * tops.basis_row(i));
        y = y.sum(Subspace<GaussRat>::span(dim_pq, gens));
    }
    return y;
}

struct SpectralPage {
    int r;
    std::map<std::pair<int, int>, long long> dims;

    long long dim(int p, int q) const {
        auto it = dims.find({p, q});
        return it == dims.end() ? 0 : it->second;
    }

    long long total_of_degree(int k, int n) const {
        long long s = 0;
        for (int p = 0; p <= n; ++p)
            if (k - p >= 0 && k - p <= n) s += dim(p, k - p);
        return s;
    }

    friend bool operator==(const SpectralPage& a, const SpectralPage& b) {
        return a.dims == b.dims;
    }
};

inline SpectralPage frolicher(const OperatorSet& ops, int r) {
    if (r < 1) throw DomainError("spectral page index must be >= 1");
    const int n = ops.n();
    SpectralPage page{r, {}};
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            const auto x = frolicher_cocycles(ops, p, q, r);
            const auto y = frolicher_coboundaries(ops, p, q, r);
            internal_check(x.contains(y), "page boundaries escape page cocycles");
            page.dims[{p, q}] = static_cast<long long>(x.dim()) - static_cast<long long>(y.dim());
        }
    return page;
}

// Pages are constant from r = n+1 on: any later differential starts or ends
// in a vanishing bidegree.
inline SpectralPage frolicher_infinity(const OperatorSet& ops) {
    auto page = frolicher(ops, ops.n() + 1);
    page.r = -1;
    return page;
}

// The explicit tower behind E_k-closedness: dbar a = 0 and forms
// a_1,..,a_k with del a_{i-1} = -dbar a_i; returns the tower if solvable.
inline std::optional<std::vector<BidegreeForm>> is_Ek_closed(const OperatorSet& ops,
                                                             const BidegreeForm& a, int k) {
    if (k < 1) throw DomainError("tower length must be >= 1");
    const int n = ops.n();
    if (!ops.apply_dbar(a).is_zero()) return std::nullopt;
    const int p = a.p(), q = a.q();
    std::vector<std::pair<int, int>> blocks;
    for (int i = 1; i <= k; ++i) blocks.push_back({p + i, q - i});
    detail::VarLayout vars(n, blocks);
    std::vector<detail::Equation> eqs;
    std::vector<std::size_t> roff;
    for (int i = 1; i <= k; ++i) {
        detail::Equation e{p + i, q - i + 1, {}};
        if (i >= 2) e.terms.push_back({static_cast<std::size_t>(i - 2), false, 1});
        e.terms.push_back({static_cast<std::size_t>(i - 1), true, 1});
        eqs.push_back(e);
    }
    const auto m = detail::assemble(ops, vars, eqs, &roff);
    // right-hand side: the first ladder equation carries -del a
    Vec<GaussRat> rhs(m.rows(), GaussRat(0));
    if (space_dim(n, p + 1, q) > 0) {
        const auto da = ops.apply_del(a).to_vector();
        for (std::size_t i = 0; i < da.size(); ++i) rhs[roff[0] + i] = -da[i];
    }
    const auto sol = solve(m, rhs);
    if (!sol) return std::nullopt;
    std::vector<BidegreeForm> tower;
    for (int i = 1; i <= k; ++i) {
        const int bp = p + i, bq = q - i;
        if (space_dim(n, bp, bq) == 0) {
            tower.emplace_back(n, std::min(bp, n), std::max(bq, 0));
            continue;
        }
        Vec<GaussRat> w(space_dim(n, bp, bq));
        for (std::size_t j = 0; j < w.size(); ++j) w[j] = (*sol)[vars.offsets[i - 1] + j];
        tower.push_back(BidegreeForm::from_vector(n, bp, bq, w));
    }
    // exact re-verification of the ladder, skipping vanishing target spaces
    const BidegreeForm* prev = &a;
    for (int i = 1; i <= k; ++i) {
        if (space_dim(n, p + i, q - i + 1) > 0) {
            auto acc = ops.apply_del(*prev);
            if (space_dim(n, p + i, q - i) > 0) acc += ops.apply_dbar(tower[i - 1]);
            internal_check(acc.is_zero(), "tower ladder fails re-verification");
        }
        prev = &tower[i - 1];
    }
    return tower;
}

struct ClosedRepresentative {
    bool found = false;
    BidegreeForm form;          // a + del u + dbar v, d-closed, same Aeppli class
    BidegreeForm u, v;

    ClosedRepresentative(int n, int p, int q)
        : form(n, p, q), u(n, std::max(p - 1, 0), q), v(n, p, std::max(q - 1, 0)) {}
};

// The construction behind the injection H_A^{p,q} -> H_DR^{p+q}: solve
// del dbar v = -del a and del dbar u = dbar a, then a + del u + dbar v is
// d-closed and Aeppli-equivalent to a.
inline ClosedRepresentative dclosed_representative(const OperatorSet& ops,
                                                   const CohomologySpace& aeppli_space,
                                                   const Vec<GaussRat>& class_coords) {
    internal_check(aeppli_space.label == CohLabel::Aeppli, "needs an Aeppli space");
    const int n = ops.n();
    const auto [p, q] = aeppli_space.layout().blocks[0];
    ClosedRepresentative out(n, p, q);
    const BidegreeForm a = aeppli_space.lift(class_coords).block(p, q);

    // del dbar v = -del a, with v in (p,q-1); vacuous when del a lives in a
    // zero space, unsolvable without v when q = 0.
    if (p + 1 <= n) {
        const auto da = ops.apply_del(a);
        if (q >= 1) {
            const auto m = ops.del(p, q) * ops.dbar(p, q - 1);
            auto v = solve(m, (GaussRat(-1) * da).to_vector());
            if (!v) return out;
            out.v = BidegreeForm::from_vector(n, p, q - 1, *v);
        } else if (!da.is_zero()) {
            return out;
        }
    }

    // del dbar u = dbar a, with u in (p-1,q).
    if (q + 1 <= n) {
        const auto ba = ops.apply_dbar(a);
        if (p >= 1) {
            const auto m = ops.del(p - 1, q + 1) * ops.dbar(p - 1, q);
            auto u = solve(m, ba.to_vector());
            if (!u) return out;
            out.u = BidegreeForm::from_vector(n, p - 1, q, *u);
        } else if (!ba.is_zero()) {
            return out;
        }
    }

    out.form = a;
    if (p >= 1) out.form += ops.apply_del(out.u);
    if (q >= 1) out.form += ops.apply_dbar(out.v);
    const bool del_ok = p + 1 > n || ops.apply_del(out.form).is_zero();
    const bool dbar_ok = q + 1 > n || ops.apply_dbar(out.form).is_zero();
    if (!(del_ok && dbar_ok))
        throw InternalCheckError("closed representative fails d-closedness re-verification");
    internal_check(aeppli_space.class_of(out.form) == class_coords,
                   "closed representative changed the Aeppli class");
    out.found = true;
    return out;
}

// The induced injection H_A^{p,q} -> H_DR^{p+q} where every class admits a
// d-closed representative; empty when some class does not.
inline std::optional<Matrix<GaussRat>> aeppli_into_derham(const OperatorSet& ops, int p, int q,
                                                          const CohomologySpace& ha,
                                                          const CohomologySpace& hdr) {
    Matrix<GaussRat> m(hdr.dim(), ha.dim());
    for (std::size_t j = 0; j < ha.dim(); ++j) {
        Vec<GaussRat> e(ha.dim(), GaussRat(0));
        e[j] = GaussRat(1);
        const auto rep = dclosed_representative(ops, ha, e);
        if (!rep.found) return std::nullopt;
        TotalForm t(ops.n(), p + q);
        t.set_block(rep.form);
        const auto coords = hdr.class_of(t);
        for (std::size_t i = 0; i < hdr.dim(); ++i) m(i, j) = coords[i];
    }
    return m;
}

}  // namespace aeppli
