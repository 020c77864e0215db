// del / dbar extended from the coframe by the Leibniz rule, assembled as
// exact matrices per bidegree, with all operator identities verified before
// the set is handed out:  del^2 = 0, dbar^2 = 0, del dbar + dbar del = 0,
// and conjugate(del a) = dbar(conjugate a).

#pragma once

#include <utility>
#include <vector>

#include "aeppli/coframe.hpp"
#include "aeppli/errors.hpp"
#include "aeppli/form.hpp"
#include "aeppli/linalg.hpp"
#include "aeppli/monomial.hpp"

namespace aeppli {

class OperatorSet {
public:
    static OperatorSet build(const ComplexCoframe& c) {
        c.validate();
        if (c.has_02_terms())
            throw NonIntegrableError("coframe has (0,2) structure terms: almost-complex structure is not integrable");
        return OperatorSet(c);
    }

    int n() const { return n_; }
    const ComplexCoframe& coframe() const { return coframe_; }

    // del: (p,q) -> (p+1,q); zero-size matrix when either side is empty.
    const Matrix<GaussRat>& del(int p, int q) const { return del_.at(key(p, q)); }
    // dbar: (p,q) -> (p,q+1).
    const Matrix<GaussRat>& dbar(int p, int q) const { return dbar_.at(key(p, q)); }

    BidegreeForm apply_del(const BidegreeForm& f) const {
        return apply(del(f.p(), f.q()), f, f.p() + 1, f.q());
    }
    BidegreeForm apply_dbar(const BidegreeForm& f) const {
        return apply(dbar(f.p(), f.q()), f, f.p(), f.q() + 1);
    }
    BidegreeForm apply_del_dbar(const BidegreeForm& f) const { return apply_del(apply_dbar(f)); }

    TotalForm apply_d(const TotalForm& f) const {
        TotalForm out(n_, f.degree + 1);
        for (const auto& [pq, block] : f.blocks) {
            if (pq.first + 1 <= n_) out.set_block_add(apply_del(block));
            if (pq.second + 1 <= n_) out.set_block_add(apply_dbar(block));
        }
        return out;
    }

private:
    explicit OperatorSet(ComplexCoframe c) : n_(c.n), coframe_(std::move(c)) {
        // degree-1 action tables
        std::vector<BidegreeForm> del_h, dbar_h, del_a, dbar_a;
        for (int k = 1; k <= n_; ++k) {
            TotalForm d = coframe_.d_generator(k);
            del_h.push_back(d.block(2, 0));
            dbar_h.push_back(d.block(1, 1));
            // d phib^k = conjugate(d phi^k)
            del_a.push_back(conjugate(d.block(1, 1)));
            dbar_a.push_back(conjugate(d.block(2, 0)));
        }

        for (int p = 0; p <= n_; ++p) {
            for (int q = 0; q <= n_; ++q) {
                const auto bs = basis(n_, p, q);
                Matrix<GaussRat> md(space_dim(n_, p + 1, q), bs.size());
                Matrix<GaussRat> mb(space_dim(n_, p, q + 1), bs.size());
                for (std::size_t col = 0; col < bs.size(); ++col) {
                    const auto [fd, fb] = differentiate(bs[col], del_h, dbar_h, del_a, dbar_a);
                    if (p + 1 <= n_)
                        for (const auto& [m, cc] : fd.terms()) md(basis_index(m, n_), col) = cc;
                    if (q + 1 <= n_)
                        for (const auto& [m, cc] : fb.terms()) mb(basis_index(m, n_), col) = cc;
                }
                del_.emplace(key(p, q), std::move(md));
                dbar_.emplace(key(p, q), std::move(mb));
            }
        }
        verify();
    }

    // Leibniz over the ordered factor list of one monomial.
    std::pair<BidegreeForm, BidegreeForm> differentiate(const Monomial& m,
                                                        const std::vector<BidegreeForm>& del_h,
                                                        const std::vector<BidegreeForm>& dbar_h,
                                                        const std::vector<BidegreeForm>& del_a,
                                                        const std::vector<BidegreeForm>& dbar_a) const {
        const int p = m.holo_degree();
        const int q = m.anti_degree();
        BidegreeForm out_d(n_, std::min(p + 1, n_), q);
        BidegreeForm out_b(n_, p, std::min(q + 1, n_));
        struct Factor {
            bool anti;
            int idx;
        };
        std::vector<Factor> fs;
        for (int i : m.holo_indices()) fs.push_back({false, i});
        for (int i : m.anti_indices()) fs.push_back({true, i});
        for (std::size_t k = 0; k < fs.size(); ++k) {
            // prefix ^ (d factor_k) ^ suffix, Koszul sign (-1)^k
            std::vector<int> pre_h, pre_a, suf_h, suf_a;
            for (std::size_t t = 0; t < fs.size(); ++t) {
                if (t == k) continue;
                auto& dst_h = t < k ? pre_h : suf_h;
                auto& dst_a = t < k ? pre_a : suf_a;
                (fs[t].anti ? dst_a : dst_h).push_back(fs[t].idx);
            }
            const BidegreeForm pre =
                BidegreeForm::monomial_form(n_, Monomial::from_indices(pre_h, pre_a),
                                            GaussRat(k % 2 ? -1 : 1));
            const BidegreeForm suf =
                BidegreeForm::monomial_form(n_, Monomial::from_indices(suf_h, suf_a));
            const BidegreeForm& dpart = fs[k].anti ? del_a[fs[k].idx - 1] : del_h[fs[k].idx - 1];
            const BidegreeForm& bpart = fs[k].anti ? dbar_a[fs[k].idx - 1] : dbar_h[fs[k].idx - 1];
            if (!dpart.is_zero() && p + 1 <= n_) out_d += wedge(wedge(pre, dpart), suf);
            if (!bpart.is_zero() && q + 1 <= n_) out_b += wedge(wedge(pre, bpart), suf);
        }
        return {out_d, out_b};
    }

    void verify() const {
        for (int p = 0; p <= n_; ++p) {
            for (int q = 0; q <= n_; ++q) {
                if (p + 2 <= n_ && !(del(p + 1, q) * del(p, q)).is_zero())
                    throw JacobiViolationError("del^2 != 0: structure constants violate the Jacobi identity");
                if (q + 2 <= n_ && !(dbar(p, q + 1) * dbar(p, q)).is_zero())
                    throw JacobiViolationError("dbar^2 != 0: structure constants violate the Jacobi identity");
                if (p + 1 <= n_ && q + 1 <= n_) {
                    const auto anti = del(p, q + 1) * dbar(p, q) + dbar(p + 1, q) * del(p, q);
                    if (!anti.is_zero())
                        throw JacobiViolationError("del dbar + dbar del != 0: structure constants violate the Jacobi identity");
                }
                for (const auto& m : basis(n_, p, q)) {
                    const auto f = BidegreeForm::monomial_form(n_, m);
                    internal_check(conjugate(apply_del(f)) == apply_dbar(conjugate(f)),
                                   "conjugation does not intertwine del and dbar");
                }
            }
        }
    }

    BidegreeForm apply(const Matrix<GaussRat>& m, const BidegreeForm& f, int p, int q) const {
        if (p > n_ || q > n_) return BidegreeForm(n_, std::min(p, n_), std::min(q, n_));
        return BidegreeForm::from_vector(n_, p, q, m * f.to_vector());
    }

    static int key(int p, int q) { return p * (kMaxDim + 1) + q; }

    int n_;
    ComplexCoframe coframe_;
    std::map<int, Matrix<GaussRat>> del_, dbar_;
};

}  // namespace aeppli
