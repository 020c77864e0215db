// The positivity cones in Aeppli cohomology:
//
//   A_p = { [w]_A : w strictly weakly positive, del dbar w = 0 }
//   C_p = { [w]_A : w strictly weakly positive and p-HS }
//   (plus the one-extra-constraint p-Kahler flag: d w = 0)
//
// Feasibility and membership are LPs over the real vector space of
// conjugation-invariant (p,p)-forms: sampled frame positivity >= delta,
// trace against the standard frames = 1 (feasibility only), and, for C_p,
// the exact d-closedness ladder on coupled (w, tower) variables.  The LP is
// exact rational below the constraint-count threshold; the floating path is
// followed by rationalization and exact re-verification.  Certificates are
// re-verified on the full sample and on a fresh 10x-denser one.
//
// InfeasibleAtResolution is upgraded to a proof of emptiness only when the
// exact standard-frame LP over the (tower-solvable) subspace already rules
// every strictly weakly positive form out; the report says so.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aeppli/cohomology.hpp"
#include "aeppli/errors.hpp"
#include "aeppli/form.hpp"
#include "aeppli/grassmann.hpp"
#include "aeppli/hypotheses.hpp"
#include "aeppli/linalg.hpp"
#include "aeppli/lp.hpp"
#include "aeppli/operators.hpp"

namespace aeppli {

enum class Cone { A, C, PK };

inline std::string cone_name(Cone c) {
    switch (c) {
        case Cone::A: return "A";
        case Cone::C: return "C";
        case Cone::PK: return "pK";
    }
    throw InternalCheckError("cone");
}

// Real basis of the conjugation-invariant (p,p)-forms: i^p on diagonal
// monomials, paired combinations off the diagonal.
class RealStructure {
public:
    RealStructure(int n, int p) : n_(n), p_(p) {
        GaussRat ip(1);
        for (int i = 0; i < p; ++i) ip *= GaussRat::unit_i();
        const GaussRat sgn = (p % 2) ? GaussRat(-1) : GaussRat(1);
        for (const auto& m : basis(n, p, p)) {
            const Monomial partner{m.anti, m.holo};
            if (m.holo == m.anti) {
                basis_.push_back(BidegreeForm::monomial_form(n, m, ip));
            } else if (m < partner) {
                auto u1 = BidegreeForm::monomial_form(n, m);
                u1.add_term(partner, sgn);
                basis_.push_back(std::move(u1));
                auto u2 = BidegreeForm::monomial_form(n, m, GaussRat::unit_i());
                u2.add_term(partner, GaussRat::unit_i() * GaussRat(-1) * sgn);
                basis_.push_back(std::move(u2));
            }
        }
    }

    int n() const { return n_; }
    int p() const { return p_; }
    std::size_t dim() const { return basis_.size(); }
    const BidegreeForm& basis_form(std::size_t i) const { return basis_[i]; }

    BidegreeForm to_form(const Vec<Rat>& x) const {
        internal_check(x.size() == basis_.size(), "real coordinate width");
        BidegreeForm f(n_, p_, p_);
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (x[i] == 0) continue;
            auto t = basis_[i];
            t *= GaussRat(x[i]);
            f += t;
        }
        return f;
    }

    std::optional<Vec<Rat>> to_coords(const BidegreeForm& f) const {
        if (f.p() != p_ || f.q() != p_ || f.n() != n_) return std::nullopt;
        GaussRat ip(1);
        for (int i = 0; i < p_; ++i) ip *= GaussRat::unit_i();
        Vec<Rat> x(basis_.size(), Rat(0));
        std::size_t idx = 0;
        for (const auto& m : basis(n_, p_, p_)) {
            const Monomial partner{m.anti, m.holo};
            if (m.holo == m.anti) {
                const GaussRat c = f.coeff(m) / ip;
                if (!c.is_real()) return std::nullopt;
                x[idx++] = c.re;
            } else if (m < partner) {
                const GaussRat c = f.coeff(m);
                x[idx++] = c.re;
                x[idx++] = c.im;
            }
        }
        if (!(to_form(x) == f)) return std::nullopt;  // not conjugation-invariant
        return x;
    }

private:
    int n_, p_;
    std::vector<BidegreeForm> basis_;
};

// ---------------------------------------------------------------------------
// the p-HS tower
// ---------------------------------------------------------------------------

struct TowerResult {
    enum class Status { Solved, PreconditionFailed, Infeasible };
    Status status = Status::Infeasible;
    // alpha[i] has bidegree (i, 2p-i), i = 0..p-1; the assembled real form is
    // sum alpha + w + sum conj(alpha)
    std::vector<BidegreeForm> alpha;

    bool solved() const { return status == Status::Solved; }
};

inline TotalForm assemble_hs_form(const BidegreeForm& w, const TowerResult& tower) {
    TotalForm s(w.n(), 2 * w.p());
    s.set_block_add(w);
    for (const auto& a : tower.alpha) {
        s.set_block_add(a);
        s.set_block_add(conjugate(a));
    }
    return s;
}

// One coupled solve for the ladder gamma_k in L^{p+k,p-k}, k = 1..p:
// dbar gamma_1 = -del w, dbar gamma_k = -del gamma_{k-1}, del gamma_p = 0.
// A greedy step-by-step choice could block later steps; the coupled system
// decides existence exactly.
inline TowerResult solve_hs_tower(const OperatorSet& ops, const BidegreeForm& w) {
    const int n = ops.n();
    const int p = w.p();
    if (w.q() != p) throw DomainError("expected a (p,p)-form");
    if (!is_real(w)) throw NonRealFormError("expected a real form");
    TowerResult out;
    if (space_dim(n, p + 1, p + 1) > 0 && !ops.apply_del_dbar(w).is_zero()) {
        out.status = TowerResult::Status::PreconditionFailed;
        return out;
    }

    std::vector<std::pair<int, int>> blocks;
    for (int k = 1; k <= p; ++k) blocks.push_back({p + k, p - k});
    std::vector<std::size_t> offs;
    std::size_t total = 0;
    for (auto [a, b] : blocks) {
        offs.push_back(total);
        total += space_dim(n, a, b);
    }
    // equations: k-th ladder row lands in (p+k, p-k+1); the cap in (2p+1, 0)
    std::vector<std::pair<int, int>> eq_blocks;
    for (int k = 1; k <= p; ++k) eq_blocks.push_back({p + k, p - k + 1});
    eq_blocks.push_back({2 * p + 1, 0});
    std::vector<std::size_t> eoffs;
    std::size_t rows = 0;
    for (auto [a, b] : eq_blocks) {
        eoffs.push_back(rows);
        rows += space_dim(n, a, b);
    }

    Matrix<GaussRat> m(rows, total);
    auto paste = [&](const Matrix<GaussRat>& op, std::size_t r0, std::size_t c0) {
        for (std::size_t i = 0; i < op.rows(); ++i)
            for (std::size_t j = 0; j < op.cols(); ++j)
                if (!op(i, j).is_zero()) m(r0 + i, c0 + j) += op(i, j);
    };
    for (int k = 1; k <= p; ++k) {
        auto [vp, vq] = blocks[k - 1];
        if (space_dim(n, vp, vq) == 0) continue;
        // dbar gamma_k in equation k
        if (space_dim(n, p + k, p - k + 1) > 0) paste(ops.dbar(vp, vq), eoffs[k - 1], offs[k - 1]);
        // del gamma_k in equation k+1 (the cap when k = p)
        if (k < p) {
            if (space_dim(n, p + k + 1, p - k) > 0) paste(ops.del(vp, vq), eoffs[k], offs[k - 1]);
        } else {
            if (space_dim(n, 2 * p + 1, 0) > 0) paste(ops.del(vp, vq), eoffs[p], offs[k - 1]);
        }
    }
    Vec<GaussRat> rhs(rows, GaussRat(0));
    if (space_dim(n, p + 1, p) > 0) {
        const auto dw = ops.apply_del(w).to_vector();
        for (std::size_t i = 0; i < dw.size(); ++i) rhs[eoffs[0] + i] = -dw[i];
    }
    const auto sol = solve(m, rhs);
    if (!sol) {
        out.status = TowerResult::Status::Infeasible;  // certified: rank-deficient system
        return out;
    }
    // gamma_k = conj(alpha^{p-k, p+k}); store alpha[i] at (i, 2p-i)
    out.alpha.assign(p, BidegreeForm(n, 0, 0));
    for (int k = 1; k <= p; ++k) {
        auto [vp, vq] = blocks[k - 1];
        BidegreeForm gamma(n, std::min(vp, n), std::max(vq, 0));
        if (space_dim(n, vp, vq) > 0) {
            Vec<GaussRat> g(space_dim(n, vp, vq));
            for (std::size_t j = 0; j < g.size(); ++j) g[j] = (*sol)[offs[k - 1] + j];
            gamma = BidegreeForm::from_vector(n, vp, vq, g);
        }
        out.alpha[p - k] = conjugate(gamma);
    }
    out.status = TowerResult::Status::Solved;
    internal_check(ops.apply_d(assemble_hs_form(w, out)).is_zero(),
                   "assembled HS form is not d-closed");
    return out;
}

// ---------------------------------------------------------------------------
// cone LPs
// ---------------------------------------------------------------------------

struct ConeOptions {
    std::size_t lp_frame_cap = 96;        // sampled frames entering the LP
    std::size_t rational_threshold = 500; // constraint count switching to floating LP
    std::size_t verify_factor = 10;       // density factor of the fresh sample
};

struct ConeFeasibilityReport {
    Cone cone = Cone::A;
    enum class Status { FeasibleWithCertificate, InfeasibleAtResolution, NumericalFailure };
    Status status = Status::InfeasibleAtResolution;
    std::optional<BidegreeForm> certificate;
    std::optional<TowerResult> tower;  // C_p certificates carry their tower
    Rat margin{0};          // smallest positivity value on the verification sample
    Rat lp_value{0};        // optimal min-margin of the LP
    std::size_t resolution = 0;       // sample size used for verification
    std::size_t lp_constraints = 0;
    bool rational_lp = true;
    bool exact_empty = false;         // emptiness proven by the standard-frame LP
    std::string note;
    std::uint64_t seed = 0;
};

namespace detail {

// real-linear rows of a complex-linear constraint  op(form) = rhs
struct RealRows {
    std::vector<Vec<Rat>> rows;
    Vec<Rat> rhs;
};

// margin functionals of the real basis vectors over the chosen frames
struct MarginTable {
    std::vector<std::size_t> frame_ids;
    std::vector<Vec<Rat>> coeff;  // coeff[f][d]
};

inline MarginTable margin_table(const RealStructure& rs, const GrassmannSample& sample,
                                std::size_t cap) {
    MarginTable t;
    for (std::size_t f = 0; f < sample.standard_count; ++f) t.frame_ids.push_back(f);
    const std::size_t extra = sample.frames.size() - sample.standard_count;
    const std::size_t take = std::min(cap, extra);
    if (take > 0) {
        const std::size_t stride = std::max<std::size_t>(1, extra / take);
        for (std::size_t i = 0; i < extra && t.frame_ids.size() < sample.standard_count + take;
             i += stride)
            t.frame_ids.push_back(sample.standard_count + i);
    }
    for (const auto f : t.frame_ids) {
        Vec<Rat> row(rs.dim());
        for (std::size_t d = 0; d < rs.dim(); ++d) {
            const GaussRat v = top_ratio(wedge(rs.basis_form(d), sample.wedges[f]));
            internal_check(v.is_real(), "margin of a real basis form");
            row[d] = v.re / sample.normalizers[f];
        }
        t.coeff.push_back(std::move(row));
    }
    return t;
}

// tower variable layout for the C_p ladder over real scalars
struct TowerVars {
    std::vector<std::pair<int, int>> blocks;  // gamma_k bidegrees
    std::vector<std::size_t> offs;            // real offsets, 2 per complex dim
    std::size_t total = 0;
};

inline TowerVars tower_vars(int n, int p) {
    TowerVars tv;
    for (int k = 1; k <= p; ++k) {
        tv.blocks.push_back({p + k, p - k});
        tv.offs.push_back(tv.total);
        tv.total += 2 * space_dim(n, p + k, p - k);
    }
    return tv;
}

// append real rows for  sum_k ops_k(gamma_{k(vars)}) + del(Omega(x)) = 0
// constraints of the C_p ladder; x-columns first, tower columns after.
inline void append_ladder_rows(const OperatorSet& ops, const RealStructure& rs,
                               const TowerVars& tv, std::size_t x_dim,
                               std::vector<Vec<Rat>>& eq_rows, Vec<Rat>& eq_rhs) {
    const int n = rs.n();
    const int p = rs.p();
    const std::size_t width = x_dim + tv.total;
    auto add_complex_rows = [&](std::size_t count, auto&& fill) {
        // fill(row_re, row_im, component index)
        for (std::size_t r = 0; r < count; ++r) {
            Vec<Rat> re(width, Rat(0)), im(width, Rat(0));
            fill(re, im, r);
            eq_rows.push_back(std::move(re));
            eq_rhs.push_back(Rat(0));
            eq_rows.push_back(std::move(im));
            eq_rhs.push_back(Rat(0));
        }
    };
    auto paste_op = [&](const Matrix<GaussRat>& op, std::size_t var_off, Vec<Rat>& re, Vec<Rat>& im,
                        std::size_t r) {
        const std::size_t cdim = op.cols();
        for (std::size_t j = 0; j < cdim; ++j) {
            const GaussRat& c = op(r, j);
            if (c.is_zero()) continue;
            // (a+bi)(u+iv): re += a u - b v, im += b u + a v
            re[var_off + j] += c.re;
            re[var_off + cdim + j] += -c.im;
            im[var_off + j] += c.im;
            im[var_off + cdim + j] += c.re;
        }
    };
    for (int k = 1; k <= p + 1; ++k) {
        const int tp = p + k, tq = p - k + 1;
        const bool cap_row = (k == p + 1);
        const int a = cap_row ? 2 * p + 1 : tp;
        const int b = cap_row ? 0 : tq;
        const std::size_t count = space_dim(n, a, b);
        if (count == 0) continue;
        add_complex_rows(count, [&](Vec<Rat>& re, Vec<Rat>& im, std::size_t r) {
            if (!cap_row) {
                // dbar gamma_k
                if (space_dim(n, p + k, p - k) > 0)
                    paste_op(ops.dbar(p + k, p - k), x_dim + tv.offs[k - 1], re, im, r);
                // del gamma_{k-1} or del Omega(x) for k = 1
                if (k == 1) {
                    for (std::size_t d = 0; d < rs.dim(); ++d) {
                        const auto w = ops.apply_del(rs.basis_form(d)).to_vector();
                        re[d] += w[r].re;
                        im[d] += w[r].im;
                    }
                } else if (space_dim(n, p + k - 1, p - k + 1) > 0) {
                    paste_op(ops.del(p + k - 1, p - k + 1), x_dim + tv.offs[k - 2], re, im, r);
                }
            } else if (space_dim(n, 2 * p, 0) > 0) {
                paste_op(ops.del(2 * p, 0), x_dim + tv.offs[p - 1], re, im, r);
            }
        });
    }
}

inline BidegreeForm rationalize_and_rebuild(const RealStructure& rs, const Vec<double>& x,
                                            std::size_t x_dim) {
    Vec<Rat> xr(x_dim);
    for (std::size_t i = 0; i < x_dim; ++i) {
        const double v = x[i];
        const long long num = std::llround(v * 1048576.0);
        xr[i] = Rat(num, 1048576);
    }
    return rs.to_form(xr);
}

}  // namespace detail

// Exact emptiness probe: maximize the minimum standard-frame margin over a
// real-coordinate subspace; a nonpositive exact optimum proves there is no
// strictly weakly positive form there at all.
inline bool standard_frame_certifies_empty(const RealStructure& rs, const GrassmannSample& sample,
                                           const Subspace<Rat>& coords_subspace) {
    LpProblem<Rat> lp;
    const std::size_t d = coords_subspace.dim();
    lp.nvars = d + 1;  // y, t
    lp.objective.assign(d + 1, Rat(0));
    lp.objective[d] = 1;
    for (std::size_t f = 0; f < sample.standard_count; ++f) {
        Vec<Rat> row(d + 1, Rat(0));
        for (std::size_t j = 0; j < d; ++j) {
            const auto base = coords_subspace.basis_row(j);
            const GaussRat v = top_ratio(wedge(rs.to_form(base), sample.wedges[f]));
            row[j] = v.re / sample.normalizers[f];
        }
        row[d] = -1;
        lp.add_ge(std::move(row), Rat(0));
    }
    {
        Vec<Rat> row(d + 1, Rat(0));
        row[d] = -1;
        lp.add_ge(std::move(row), Rat(-1));  // t <= 1
    }
    const auto sol = lp_solve(lp);
    internal_check(sol.status == LpStatus::Optimal, "standard-frame probe LP must be solvable");
    return !(sol.objective > 0);
}

inline ConeFeasibilityReport feasibility(const OperatorSet& ops, Cone cone, int p,
                                         const GrassmannSample& sample, const Rat& delta,
                                         const ConeOptions& opts = {}) {
    const int n = ops.n();
    if (p < 1 || p > n - 1) throw DomainError("cone dimension p must be in 1..n-1");
    internal_check(sample.n == n && sample.p == p, "sample shape");

    ConeFeasibilityReport rep;
    rep.cone = cone;
    rep.seed = sample.seed;
    rep.resolution = sample.frames.size();

    const RealStructure rs(n, p);

    // the linear side of the cone: one real row set per complex condition
    std::vector<Vec<Rat>> lin_rows;
    auto add_operator_rows = [&](auto&& apply) {
        std::vector<Vec<GaussRat>> images;
        for (std::size_t d = 0; d < rs.dim(); ++d) images.push_back(apply(rs.basis_form(d)));
        if (images.empty() || images[0].empty()) return;
        const std::size_t count = images[0].size();
        for (std::size_t r = 0; r < count; ++r) {
            Vec<Rat> re(rs.dim(), Rat(0)), im(rs.dim(), Rat(0));
            for (std::size_t d = 0; d < rs.dim(); ++d) {
                re[d] = images[d][r].re;
                im[d] = images[d][r].im;
            }
            lin_rows.push_back(std::move(re));
            lin_rows.push_back(std::move(im));
        }
    };
    if (p + 1 <= n)
        add_operator_rows([&](const BidegreeForm& f) {
            return space_dim(n, p + 1, p + 1) > 0 ? ops.apply_del_dbar(f).to_vector()
                                                  : Vec<GaussRat>{};
        });
    if (cone == Cone::PK) {
        add_operator_rows(
            [&](const BidegreeForm& f) { return ops.apply_del(f).to_vector(); });
        add_operator_rows(
            [&](const BidegreeForm& f) { return ops.apply_dbar(f).to_vector(); });
    }

    const detail::TowerVars tv =
        (cone == Cone::C) ? detail::tower_vars(n, p) : detail::TowerVars{};
    const std::size_t x_dim = rs.dim();
    const std::size_t nvars = x_dim + tv.total + 1;  // + t
    const std::size_t t_col = nvars - 1;

    LpProblem<Rat> lp;
    lp.nvars = nvars;
    lp.objective.assign(nvars, Rat(0));
    lp.objective[t_col] = 1;

    auto widen = [&](const Vec<Rat>& row) {
        Vec<Rat> w(nvars, Rat(0));
        std::copy(row.begin(), row.end(), w.begin());
        return w;
    };
    for (const auto& r : lin_rows) lp.add_eq(widen(r), Rat(0));
    if (cone == Cone::C) {
        std::vector<Vec<Rat>> eq_rows;
        Vec<Rat> eq_rhs;
        detail::append_ladder_rows(ops, rs, tv, x_dim, eq_rows, eq_rhs);
        for (std::size_t i = 0; i < eq_rows.size(); ++i) lp.add_eq(widen(eq_rows[i]), eq_rhs[i]);
    }

    const auto mt = detail::margin_table(rs, sample, opts.lp_frame_cap);
    for (std::size_t f = 0; f < mt.frame_ids.size(); ++f) {
        Vec<Rat> row(nvars, Rat(0));
        for (std::size_t d = 0; d < x_dim; ++d) row[d] = mt.coeff[f][d];
        row[t_col] = -1;
        lp.add_ge(std::move(row), Rat(0));
    }
    {
        // normalization: standard-frame trace = 1
        Vec<Rat> row(nvars, Rat(0));
        for (std::size_t f = 0; f < sample.standard_count; ++f)
            for (std::size_t d = 0; d < x_dim; ++d) row[d] += mt.coeff[f][d];
        lp.add_eq(std::move(row), Rat(1));
    }
    {
        Vec<Rat> row(nvars, Rat(0));
        row[t_col] = -1;
        lp.add_ge(std::move(row), Rat(-1));  // t <= 1
    }
    rep.lp_constraints = lp.eq_rows.size() + lp.ge_rows.size();
    rep.rational_lp = rep.lp_constraints <= opts.rational_threshold;

    std::optional<Vec<Rat>> xstar;
    if (rep.rational_lp) {
        const auto sol = lp_solve(lp);
        if (sol.status == LpStatus::IterationLimit)
            throw LpNumericalError("rational simplex hit its iteration limit");
        if (sol.status == LpStatus::Optimal && sol.objective >= delta) {
            rep.lp_value = sol.objective;
            xstar = Vec<Rat>(sol.x.begin(), sol.x.begin() + x_dim);
        } else if (sol.status == LpStatus::Optimal) {
            rep.lp_value = sol.objective;
        }
    } else {
        LpProblem<double> lpd;
        lpd.nvars = lp.nvars;
        lpd.objective.assign(lp.objective.size(), 0.0);
        for (std::size_t i = 0; i < lp.objective.size(); ++i)
            lpd.objective[i] = to_double(lp.objective[i]);
        auto conv = [](const Vec<Rat>& r) {
            Vec<double> d(r.size());
            for (std::size_t i = 0; i < r.size(); ++i) d[i] = to_double(r[i]);
            return d;
        };
        for (std::size_t i = 0; i < lp.eq_rows.size(); ++i)
            lpd.add_eq(conv(lp.eq_rows[i]), to_double(lp.eq_rhs[i]));
        for (std::size_t i = 0; i < lp.ge_rows.size(); ++i)
            lpd.add_ge(conv(lp.ge_rows[i]), to_double(lp.ge_rhs[i]));
        const auto sol = lp_solve(lpd);
        if (sol.status == LpStatus::IterationLimit) {
            rep.status = ConeFeasibilityReport::Status::NumericalFailure;
            rep.note = "floating simplex hit its iteration limit";
            return rep;
        }
        if (sol.status == LpStatus::Optimal && sol.objective >= to_double(delta)) {
            // rationalize the Omega block and re-derive everything exactly
            const auto f = detail::rationalize_and_rebuild(rs, sol.x, x_dim);
            auto coords = rs.to_coords(f);
            internal_check(coords.has_value(), "rationalized certificate is not real");
            xstar = *coords;
            rep.lp_value = Rat(0);
        }
    }

    if (xstar) {
        BidegreeForm cert = rs.to_form(*xstar);
        // exact linear side
        bool linear_ok = (p + 1 > n) || ops.apply_del_dbar(cert).is_zero();
        if (cone == Cone::PK)
            linear_ok = linear_ok && ops.apply_del(cert).is_zero() &&
                        ((p == n) || ops.apply_dbar(cert).is_zero());
        TowerResult tower;
        if (cone == Cone::C) {
            tower = solve_hs_tower(ops, cert);
            linear_ok = linear_ok && tower.solved();
        }
        if (!linear_ok) {
            rep.status = ConeFeasibilityReport::Status::NumericalFailure;
            rep.note = "LP certificate failed exact re-verification of the linear constraints";
            return rep;
        }
        // positivity on the full sample and on a fresh denser one
        const auto swp_full = is_swp(cert, sample);
        const std::size_t extra = sample.frames.size() - sample.standard_count;
        const auto fresh =
            make_sample(n, p, extra * opts.verify_factor, sample.seed + 1000003);
        const auto swp_fresh = is_swp(cert, fresh);
        if (swp_full.pass() && swp_fresh.pass()) {
            rep.status = ConeFeasibilityReport::Status::FeasibleWithCertificate;
            rep.certificate = cert;
            if (cone == Cone::C) rep.tower = tower;
            rep.margin = std::min(swp_full.min_margin, swp_fresh.min_margin);
            rep.resolution = fresh.frames.size();
            return rep;
        }
        rep.note = "LP was feasible at resolution but the certificate failed positivity re-verification";
    }

    rep.status = ConeFeasibilityReport::Status::InfeasibleAtResolution;
    // exact upgrade where the rank argument applies uniformly
    Subspace<Rat> coords_subspace = Subspace<Rat>::full(x_dim);
    {
        std::vector<Vec<Rat>> all_rows = lin_rows;
        if (cone == Cone::C) {
            std::vector<Vec<Rat>> eq_rows;
            Vec<Rat> eq_rhs;
            detail::append_ladder_rows(ops, rs, tv, x_dim, eq_rows, eq_rhs);
            // project the coupled solvable set to the Omega block
            Matrix<Rat> m(eq_rows.size(), x_dim + tv.total);
            for (std::size_t i = 0; i < eq_rows.size(); ++i) m.set_row(i, eq_rows[i]);
            const auto sols = kernel(m);
            std::vector<Vec<Rat>> omega_block;
            for (std::size_t i = 0; i < sols.dim(); ++i) {
                const auto row = sols.basis_row(i);
                omega_block.push_back(Vec<Rat>(row.begin(), row.begin() + x_dim));
            }
            Subspace<Rat> solvable = Subspace<Rat>::span(x_dim, omega_block);
            if (!all_rows.empty()) {
                Matrix<Rat> lm(all_rows.size(), x_dim);
                for (std::size_t i = 0; i < all_rows.size(); ++i) lm.set_row(i, all_rows[i]);
                solvable = solvable.intersect(kernel(lm));
            }
            coords_subspace = solvable;
        } else if (!all_rows.empty()) {
            Matrix<Rat> lm(all_rows.size(), x_dim);
            for (std::size_t i = 0; i < all_rows.size(); ++i) lm.set_row(i, all_rows[i]);
            coords_subspace = kernel(lm);
        }
    }
    if (standard_frame_certifies_empty(rs, sample, coords_subspace)) {
        rep.exact_empty = true;
        rep.note = "exact: no strictly weakly positive form satisfies the cone's linear "
                   "constraints (standard-frame LP over the admissible subspace is nonpositive)";
    }
    return rep;
}

// ---------------------------------------------------------------------------
// membership of a fixed Aeppli class
// ---------------------------------------------------------------------------

struct MembershipReport {
    Cone cone = Cone::A;
    enum class Status { Member, NotMemberAtResolution, NotRealClass, NumericalFailure };
    Status status = Status::NotMemberAtResolution;
    std::optional<BidegreeForm> representative;
    std::optional<TowerResult> tower;
    Rat margin{0};
    Rat lp_value{0};
    std::size_t resolution = 0;
    std::uint64_t seed = 0;
};

inline MembershipReport cone_membership(const OperatorSet& ops, Cone cone, int p,
                                        const Vec<Rat>& class_coords, const GrassmannSample& sample,
                                        const Rat& delta, const ConeOptions& opts = {}) {
    const int n = ops.n();
    if (p < 1 || p > n - 1) throw DomainError("cone dimension p must be in 1..n-1");
    if (cone == Cone::PK) throw DomainError("membership is provided for the A and C cones");
    const auto ha = aeppli_cohomology(ops, p, p);
    if (class_coords.size() != ha.dim()) throw DomainError("class coordinate width");

    MembershipReport rep;
    rep.cone = cone;
    rep.seed = sample.seed;
    rep.resolution = sample.frames.size();

    Vec<GaussRat> gc(class_coords.size());
    for (std::size_t i = 0; i < class_coords.size(); ++i) gc[i] = GaussRat(class_coords[i]);
    const BidegreeForm omega0 = ha.lift(gc).block(p, p);

    // variables: re/im of u in (p-1,p), re/im of v in (p,p-1), tower, t
    const std::size_t du = space_dim(n, p - 1, p);
    const std::size_t dv = space_dim(n, p, p - 1);
    const detail::TowerVars tv =
        (cone == Cone::C) ? detail::tower_vars(n, p) : detail::TowerVars{};
    const std::size_t base = 2 * du + 2 * dv;
    const std::size_t nvars = base + tv.total + 1;
    const std::size_t t_col = nvars - 1;

    // Omega(u,v) = omega0 + del u + dbar v, complex-linear in the variables;
    // columns are the images of the real/imag unit coordinates.
    std::vector<Vec<GaussRat>> var_images(base);
    {
        std::size_t col = 0;
        for (std::size_t j = 0; j < du; ++j) {
            Vec<GaussRat> e(du, GaussRat(0));
            e[j] = GaussRat(1);
            const auto f = BidegreeForm::from_vector(n, p - 1, p, e);
            var_images[col++] = ops.apply_del(f).to_vector();
        }
        for (std::size_t j = 0; j < du; ++j) {
            Vec<GaussRat> e(du, GaussRat(0));
            e[j] = GaussRat::unit_i();
            const auto f = BidegreeForm::from_vector(n, p - 1, p, e);
            var_images[col++] = ops.apply_del(f).to_vector();
        }
        for (std::size_t j = 0; j < dv; ++j) {
            Vec<GaussRat> e(dv, GaussRat(0));
            e[j] = GaussRat(1);
            const auto f = BidegreeForm::from_vector(n, p, p - 1, e);
            var_images[col++] = ops.apply_dbar(f).to_vector();
        }
        for (std::size_t j = 0; j < dv; ++j) {
            Vec<GaussRat> e(dv, GaussRat(0));
            e[j] = GaussRat::unit_i();
            const auto f = BidegreeForm::from_vector(n, p, p - 1, e);
            var_images[col++] = ops.apply_dbar(f).to_vector();
        }
    }
    const std::size_t dpp = space_dim(n, p, p);
    const auto omega0_vec = omega0.to_vector();

    LpProblem<Rat> lp;
    lp.nvars = nvars;
    lp.objective.assign(nvars, Rat(0));
    lp.objective[t_col] = 1;

    // reality: conj(Omega) - Omega = 0, componentwise over the monomial basis
    {
        const auto bs = basis(n, p, p);
        for (std::size_t r = 0; r < dpp; ++r) {
            // conj(Omega)_r = sign * conj(Omega_{r'}) with r' the partner index
            const Monomial m = bs[r];
            const Monomial partner{m.anti, m.holo};
            const std::size_t rp = basis_index(partner, n);
            const int sgn = ((m.holo_degree() * m.anti_degree()) % 2) ? -1 : 1;
            // rows for Re and Im of (sign * conj(Omega_{rp}) - Omega_r)
            Vec<Rat> re(nvars, Rat(0)), im(nvars, Rat(0));
            for (std::size_t c = 0; c < base; ++c) {
                const GaussRat a = var_images[c][rp];
                const GaussRat b = var_images[c][r];
                re[c] = Rat(sgn) * a.re - b.re;
                im[c] = Rat(-sgn) * a.im - b.im;
            }
            const GaussRat a0 = omega0_vec[rp];
            const GaussRat b0 = omega0_vec[r];
            lp.add_eq(std::move(re), -(Rat(sgn) * a0.re - b0.re));
            lp.add_eq(std::move(im), -(Rat(-sgn) * a0.im - b0.im));
        }
    }

    // C_p ladder on (Omega(u,v), tower)
    if (cone == Cone::C) {
        for (int k = 1; k <= p + 1; ++k) {
            const bool cap_row = (k == p + 1);
            const int a = cap_row ? 2 * p + 1 : p + k;
            const int b = cap_row ? 0 : p - k + 1;
            const std::size_t count = space_dim(n, a, b);
            if (count == 0) continue;
            for (std::size_t r = 0; r < count; ++r) {
                Vec<Rat> re(nvars, Rat(0)), im(nvars, Rat(0));
                Rat rhs_re(0), rhs_im(0);
                auto paste_op = [&](const Matrix<GaussRat>& op, std::size_t var_off) {
                    const std::size_t cdim = op.cols();
                    for (std::size_t j = 0; j < cdim; ++j) {
                        const GaussRat& c = op(r, j);
                        if (c.is_zero()) continue;
                        re[var_off + j] += c.re;
                        re[var_off + cdim + j] += -c.im;
                        im[var_off + j] += c.im;
                        im[var_off + cdim + j] += c.re;
                    }
                };
                if (!cap_row) {
                    if (space_dim(n, p + k, p - k) > 0)
                        paste_op(ops.dbar(p + k, p - k), base + tv.offs[k - 1]);
                    if (k == 1) {
                        // del Omega(u,v): variable part plus the constant omega0
                        const auto& dmat = ops.del(p, p);
                        for (std::size_t c = 0; c < base; ++c) {
                            GaussRat acc(0);
                            for (std::size_t j = 0; j < dpp; ++j)
                                if (!dmat(r, j).is_zero()) acc += dmat(r, j) * var_images[c][j];
                            re[c] += acc.re;
                            im[c] += acc.im;
                        }
                        GaussRat c0(0);
                        for (std::size_t j = 0; j < dpp; ++j)
                            if (!dmat(r, j).is_zero()) c0 += dmat(r, j) * omega0_vec[j];
                        rhs_re -= c0.re;
                        rhs_im -= c0.im;
                    } else if (space_dim(n, p + k - 1, p - k + 1) > 0) {
                        paste_op(ops.del(p + k - 1, p - k + 1), base + tv.offs[k - 2]);
                    }
                } else if (space_dim(n, 2 * p, 0) > 0) {
                    paste_op(ops.del(2 * p, 0), base + tv.offs[p - 1]);
                }
                lp.add_eq(std::move(re), rhs_re);
                lp.add_eq(std::move(im), rhs_im);
            }
        }
    }

    // margins over the LP frame subset
    {
        std::vector<std::size_t> frame_ids;
        for (std::size_t f = 0; f < sample.standard_count; ++f) frame_ids.push_back(f);
        const std::size_t extra = sample.frames.size() - sample.standard_count;
        const std::size_t take = std::min(opts.lp_frame_cap, extra);
        if (take > 0) {
            const std::size_t stride = std::max<std::size_t>(1, extra / take);
            for (std::size_t i = 0; i < extra && frame_ids.size() < sample.standard_count + take;
                 i += stride)
                frame_ids.push_back(sample.standard_count + i);
        }
        for (const auto f : frame_ids) {
            // margin(Omega(u,v)) = const + linear in the variables
            Vec<Rat> row(nvars, Rat(0));
            const auto& wf = sample.wedges[f];
            const Rat& nf = sample.normalizers[f];
            for (std::size_t c = 0; c < base; ++c) {
                const auto img = BidegreeForm::from_vector(n, p, p, var_images[c]);
                const GaussRat v = top_ratio(wedge(img, wf));
                row[c] = v.re / nf;  // imaginary parts cancel on the reality subspace
            }
            const GaussRat v0 = top_ratio(wedge(omega0, wf));
            row[t_col] = -1;
            lp.add_ge(std::move(row), -(v0.re / nf));
        }
        Vec<Rat> row(nvars, Rat(0));
        row[t_col] = -1;
        lp.add_ge(std::move(row), Rat(-1));
    }

    const auto sol = lp_solve(lp);
    if (sol.status == LpStatus::IterationLimit)
        throw LpNumericalError("rational simplex hit its iteration limit");
    if (sol.status == LpStatus::Infeasible) {
        // distinguish "class is not real" from "no positive representative":
        // drop the margin rows and retry
        LpProblem<Rat> reality_only;
        reality_only.nvars = lp.nvars;
        reality_only.objective.assign(lp.nvars, Rat(0));
        reality_only.eq_rows = lp.eq_rows;
        reality_only.eq_rhs = lp.eq_rhs;
        const auto rsol = lp_solve(reality_only);
        rep.status = (rsol.status == LpStatus::Optimal)
                         ? MembershipReport::Status::NotMemberAtResolution
                         : MembershipReport::Status::NotRealClass;
        return rep;
    }
    rep.lp_value = sol.objective;
    if (!(sol.objective >= delta)) {
        rep.status = MembershipReport::Status::NotMemberAtResolution;
        return rep;
    }

    // exact reconstruction and re-verification
    Vec<GaussRat> uvec(du), vvec(dv);
    for (std::size_t j = 0; j < du; ++j) uvec[j] = GaussRat(sol.x[j], sol.x[du + j]);
    for (std::size_t j = 0; j < dv; ++j)
        vvec[j] = GaussRat(sol.x[2 * du + j], sol.x[2 * du + dv + j]);
    BidegreeForm omega = omega0;
    if (du > 0) omega += ops.apply_del(BidegreeForm::from_vector(n, p - 1, p, uvec));
    if (dv > 0) omega += ops.apply_dbar(BidegreeForm::from_vector(n, p, p - 1, vvec));
    internal_check(is_real(omega), "membership representative is not real");
    internal_check(ha.class_of(omega) == gc, "membership search changed the Aeppli class");

    TowerResult tower;
    if (cone == Cone::C) {
        tower = solve_hs_tower(ops, omega);
        internal_check(tower.solved(), "LP ladder was satisfied but the exact tower failed");
    }
    const auto swp_full = is_swp(omega, sample);
    const std::size_t extra = sample.frames.size() - sample.standard_count;
    const auto fresh = make_sample(n, p, extra * opts.verify_factor, sample.seed + 1000003);
    const auto swp_fresh = is_swp(omega, fresh);
    if (swp_full.pass() && swp_fresh.pass()) {
        rep.status = MembershipReport::Status::Member;
        rep.representative = omega;
        if (cone == Cone::C) rep.tower = tower;
        rep.margin = std::min(swp_full.min_margin, swp_fresh.min_margin);
        rep.resolution = fresh.frames.size();
    } else {
        rep.status = MembershipReport::Status::NotMemberAtResolution;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// cone equality and the sGG check
// ---------------------------------------------------------------------------

enum class ConeEquality { EqualBySufficientCondition, NotEqual, Undetermined };

inline std::string cone_equality_name(ConeEquality e) {
    switch (e) {
        case ConeEquality::EqualBySufficientCondition: return "EqualBySufficientCondition";
        case ConeEquality::NotEqual: return "NotEqual";
        case ConeEquality::Undetermined: return "Undetermined";
    }
    throw InternalCheckError("cone equality");
}

struct ConeEqualityReport {
    ConeEquality verdict = ConeEquality::Undetermined;
    bool hk_all = false;    // (H_1)..(H_{p+1}), vacuous cases true
    bool h1 = false;
    std::optional<ConeFeasibilityReport> a_feasibility;
    std::optional<TowerResult::Status> separator_tower;
    std::string note;
};

inline ConeEqualityReport cone_equality(const OperatorSet& ops, int p,
                                        const GrassmannSample& sample, const Rat& delta,
                                        const ConeOptions& opts = {}) {
    const int n = ops.n();
    if (p < 1 || p > n - 1) throw DomainError("cone dimension p must be in 1..n-1");
    ConeEqualityReport rep;
    rep.hk_all = true;
    for (int k = 1; k <= p + 1; ++k) {
        if (p + k > n) continue;  // vacuous bidegree
        const bool h = check_Hk(ops, p, k).holds;
        if (k == 1) rep.h1 = h;
        rep.hk_all = rep.hk_all && h;
    }
    if (rep.hk_all) {
        rep.verdict = ConeEquality::EqualBySufficientCondition;
        rep.note = "(H_1)..(H_{p+1}) hold, so every p-SKT class is p-HS";
        return rep;
    }
    rep.a_feasibility = feasibility(ops, Cone::A, p, sample, delta, opts);
    if (rep.a_feasibility->status == ConeFeasibilityReport::Status::FeasibleWithCertificate &&
        !rep.h1) {
        const auto tower = solve_hs_tower(ops, *rep.a_feasibility->certificate);
        rep.separator_tower = tower.status;
        if (!tower.solved()) {
            rep.verdict = ConeEquality::NotEqual;
            rep.note = "the A_p certificate's class admits no HS tower (tower solvability is "
                       "class-invariant for the coupled system), so it separates A_p from C_p";
            return rep;
        }
    }
    rep.verdict = ConeEquality::Undetermined;
    rep.note = rep.a_feasibility &&
                       rep.a_feasibility->status != ConeFeasibilityReport::Status::FeasibleWithCertificate
                   ? "A_p is empty at this resolution; the cones carry no information"
                   : "no constructive separation found";
    return rep;
}

struct SggReport {
    std::optional<bool> sgg;  // empty when vacuous
    bool vacuous = false;
    bool h1 = false;
    std::optional<ConeFeasibilityReport> a2;
};

// n = 3 only: A_2 is the Gauduchon cone, C_2 the strongly Gauduchon cone, and
// their equality characterizes sGG; (H_1) at p = 2 decides it when A_2 is
// nonempty at resolution.
inline SggReport sgg_check(const OperatorSet& ops, const GrassmannSample& sample, const Rat& delta,
                           const ConeOptions& opts = {}) {
    if (ops.n() != 3) throw WrongDimensionError("the sGG check needs n = 3");
    SggReport rep;
    rep.h1 = check_Hk(ops, 2, 1).holds;
    if (rep.h1) {
        rep.sgg = true;
        return rep;
    }
    rep.a2 = feasibility(ops, Cone::A, 2, sample, delta, opts);
    if (rep.a2->status == ConeFeasibilityReport::Status::FeasibleWithCertificate) {
        rep.sgg = false;
    } else {
        rep.vacuous = true;  // empty Gauduchon cone at resolution: no verdict
    }
    return rep;
}

}  // namespace aeppli
