// The five cohomologies as explicit quotient spaces with canonical
// representatives and exact class projection:
//
//   de Rham        ker d / Im d          (complexified total complex)
//   Dolbeault dbar ker dbar / Im dbar
//   Dolbeault del  ker del / Im del
//   Bott-Chern     (ker del ^ ker dbar) / Im del dbar
//   Aeppli         ker del dbar / (Im del + Im dbar)

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "aeppli/errors.hpp"
#include "aeppli/form.hpp"
#include "aeppli/linalg.hpp"
#include "aeppli/operators.hpp"

namespace aeppli {

enum class CohLabel { DeRham, DolbeaultDbar, DolbeaultDel, BottChern, Aeppli };

inline std::string label_name(CohLabel l) {
    switch (l) {
        case CohLabel::DeRham: return "derham";
        case CohLabel::DolbeaultDbar: return "dolbeault-dbar";
        case CohLabel::DolbeaultDel: return "dolbeault-del";
        case CohLabel::BottChern: return "bott-chern";
        case CohLabel::Aeppli: return "aeppli";
    }
    throw InternalCheckError("label");
}

// Coordinates over a concatenation of bidegree blocks (a single block for
// pure-type spaces, all blocks of one total degree for de Rham).
struct BlockLayout {
    int n = 0;
    std::vector<std::pair<int, int>> blocks;
    std::vector<std::size_t> offsets;
    std::size_t total = 0;

    BlockLayout() = default;
    BlockLayout(int n_, std::vector<std::pair<int, int>> blocks_) : n(n_), blocks(std::move(blocks_)) {
        for (auto [p, q] : blocks) {
            offsets.push_back(total);
            total += space_dim(n, p, q);
        }
    }

    static BlockLayout pure(int n, int p, int q) { return BlockLayout(n, {{p, q}}); }

    static BlockLayout degree(int n, int k) {
        std::vector<std::pair<int, int>> bs;
        for (int p = 0; p <= n; ++p)
            if (k - p >= 0 && k - p <= n) bs.push_back({p, k - p});
        return BlockLayout(n, bs);
    }

    Vec<GaussRat> pack(const TotalForm& f) const {
        Vec<GaussRat> v(total, GaussRat(0));
        for (const auto& [pq, block] : f.blocks) {
            std::size_t b = 0;
            while (b < blocks.size() && blocks[b] != pq) ++b;
            if (b == blocks.size()) throw DomainError("form has a block outside the layout");
            const auto coords = block.to_vector();
            for (std::size_t i = 0; i < coords.size(); ++i) v[offsets[b] + i] = coords[i];
        }
        return v;
    }

    TotalForm unpack(const Vec<GaussRat>& v) const {
        internal_check(v.size() == total, "layout width");
        int deg = blocks.empty() ? 0 : blocks[0].first + blocks[0].second;
        TotalForm f(n, deg);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            auto [p, q] = blocks[b];
            Vec<GaussRat> w(space_dim(n, p, q));
            for (std::size_t i = 0; i < w.size(); ++i) w[i] = v[offsets[b] + i];
            f.set_block(BidegreeForm::from_vector(n, p, q, w));
        }
        return f;
    }
};

// d on one total degree, assembled from del/dbar blocks.
inline Matrix<GaussRat> total_d_matrix(const OperatorSet& ops, int k) {
    const int n = ops.n();
    const BlockLayout src = BlockLayout::degree(n, k);
    const BlockLayout dst = BlockLayout::degree(n, k + 1);
    Matrix<GaussRat> m(dst.total, src.total);
    auto paste = [&](const Matrix<GaussRat>& block, std::size_t roff, std::size_t coff) {
        for (std::size_t i = 0; i < block.rows(); ++i)
            for (std::size_t j = 0; j < block.cols(); ++j)
                if (!block(i, j).is_zero()) m(roff + i, coff + j) = block(i, j);
    };
    for (std::size_t s = 0; s < src.blocks.size(); ++s) {
        auto [p, q] = src.blocks[s];
        for (std::size_t d = 0; d < dst.blocks.size(); ++d) {
            auto [a, b] = dst.blocks[d];
            if (a == p + 1 && b == q) paste(ops.del(p, q), dst.offsets[d], src.offsets[s]);
            if (a == p && b == q + 1) paste(ops.dbar(p, q), dst.offsets[d], src.offsets[s]);
        }
    }
    return m;
}

class CohomologySpace {
public:
    CohLabel label;
    int p = -1, q = -1;  // pure-type spaces
    int k = -1;          // de Rham

    CohomologySpace(CohLabel l, BlockLayout layout, QuotientSpace<GaussRat> space)
        : label(l), layout_(std::move(layout)), space_(std::move(space)) {}

    std::size_t dim() const { return space_.dim(); }
    const BlockLayout& layout() const { return layout_; }
    const QuotientSpace<GaussRat>& quotient() const { return space_; }

    TotalForm representative(std::size_t i) const {
        return layout_.unpack(space_.representatives().at(i));
    }

    // For pure-type spaces the representative is a single (p,q)-form.
    BidegreeForm representative_form(std::size_t i) const {
        internal_check(layout_.blocks.size() == 1, "pure-type representative");
        auto [pp, qq] = layout_.blocks[0];
        return representative(i).block(pp, qq);
    }

    Vec<GaussRat> class_of(const TotalForm& f) const { return space_.coords(layout_.pack(f)); }

    Vec<GaussRat> class_of(const BidegreeForm& f) const {
        TotalForm t(f.n(), f.degree());
        t.set_block(f);
        return class_of(t);
    }

    bool admissible(const BidegreeForm& f) const {
        TotalForm t(f.n(), f.degree());
        t.set_block(f);
        return space_.admissible(layout_.pack(t));
    }

    TotalForm lift(const Vec<GaussRat>& coords) const { return layout_.unpack(space_.lift(coords)); }

private:
    BlockLayout layout_;
    QuotientSpace<GaussRat> space_;
};

inline CohomologySpace derham(const OperatorSet& ops, int k) {
    const int n = ops.n();
    if (k < 0 || k > 2 * n) throw DomainError("de Rham degree out of range");
    BlockLayout layout = BlockLayout::degree(n, k);
    Subspace<GaussRat> ker_d =
        (k == 2 * n) ? Subspace<GaussRat>::full(layout.total) : kernel(total_d_matrix(ops, k));
    Subspace<GaussRat> im_d = (k == 0) ? Subspace<GaussRat>(layout.total)
                                       : image(total_d_matrix(ops, k - 1));
    CohomologySpace c(CohLabel::DeRham, layout, QuotientSpace<GaussRat>(ker_d, im_d));
    c.k = k;
    return c;
}

inline CohomologySpace dolbeault(const OperatorSet& ops, int p, int q, bool dbar_variant = true) {
    const int n = ops.n();
    if (p < 0 || q < 0 || p > n || q > n) throw DomainError("bidegree out of range");
    BlockLayout layout = BlockLayout::pure(n, p, q);
    Subspace<GaussRat> ker_op(layout.total), im_op(layout.total);
    if (dbar_variant) {
        ker_op = (q == n) ? Subspace<GaussRat>::full(layout.total) : kernel(ops.dbar(p, q));
        im_op = (q == 0) ? Subspace<GaussRat>(layout.total) : image(ops.dbar(p, q - 1));
    } else {
        ker_op = (p == n) ? Subspace<GaussRat>::full(layout.total) : kernel(ops.del(p, q));
        im_op = (p == 0) ? Subspace<GaussRat>(layout.total) : image(ops.del(p - 1, q));
    }
    CohomologySpace c(dbar_variant ? CohLabel::DolbeaultDbar : CohLabel::DolbeaultDel, layout,
                      QuotientSpace<GaussRat>(ker_op, im_op));
    c.p = p;
    c.q = q;
    return c;
}

inline CohomologySpace bott_chern(const OperatorSet& ops, int p, int q) {
    const int n = ops.n();
    if (p < 0 || q < 0 || p > n || q > n) throw DomainError("bidegree out of range");
    BlockLayout layout = BlockLayout::pure(n, p, q);
    Subspace<GaussRat> ker_del = (p == n) ? Subspace<GaussRat>::full(layout.total) : kernel(ops.del(p, q));
    Subspace<GaussRat> ker_dbar = (q == n) ? Subspace<GaussRat>::full(layout.total) : kernel(ops.dbar(p, q));
    Subspace<GaussRat> im(layout.total);
    if (p >= 1 && q >= 1) im = image(ops.del(p - 1, q) * ops.dbar(p - 1, q - 1));
    CohomologySpace c(CohLabel::BottChern, layout,
                      QuotientSpace<GaussRat>(ker_del.intersect(ker_dbar), im));
    c.p = p;
    c.q = q;
    return c;
}

inline CohomologySpace aeppli_cohomology(const OperatorSet& ops, int p, int q) {
    const int n = ops.n();
    if (p < 0 || q < 0 || p > n || q > n) throw DomainError("bidegree out of range");
    BlockLayout layout = BlockLayout::pure(n, p, q);
    Subspace<GaussRat> ker_dd = (p == n || q == n)
                                    ? Subspace<GaussRat>::full(layout.total)
                                    : kernel(ops.del(p, q + 1) * ops.dbar(p, q));
    Subspace<GaussRat> im(layout.total);
    {
        std::vector<Vec<GaussRat>> gens;
        if (p >= 1) {
            const auto& m = ops.del(p - 1, q);
            for (std::size_t j = 0; j < m.cols(); ++j) gens.push_back(m.col(j));
        }
        if (q >= 1) {
            const auto& m = ops.dbar(p, q - 1);
            for (std::size_t j = 0; j < m.cols(); ++j) gens.push_back(m.col(j));
        }
        im = Subspace<GaussRat>::span(layout.total, gens);
    }
    // Im del + Im dbar must land inside ker del dbar (the quotient would be
    // ill-posed otherwise); QuotientSpace re-checks the inclusion.
    internal_check(ker_dd.contains(im), "Aeppli modding subspace escapes ker del dbar");
    CohomologySpace c(CohLabel::Aeppli, layout, QuotientSpace<GaussRat>(ker_dd, im));
    c.p = p;
    c.q = q;
    return c;
}

inline CohomologySpace cohomology(const OperatorSet& ops, CohLabel label, int p, int q, int k = -1) {
    switch (label) {
        case CohLabel::DeRham: return derham(ops, k);
        case CohLabel::DolbeaultDbar: return dolbeault(ops, p, q, true);
        case CohLabel::DolbeaultDel: return dolbeault(ops, p, q, false);
        case CohLabel::BottChern: return bott_chern(ops, p, q);
        case CohLabel::Aeppli: return aeppli_cohomology(ops, p, q);
    }
    throw InternalCheckError("label");
}

inline long long betti(const OperatorSet& ops, int k) {
    return static_cast<long long>(derham(ops, k).dim());
}

}  // namespace aeppli
