// Independent brute-force oracle: plain dense Gaussian elimination with no
// pivot selection beyond "first nonzero", no sparsity, no reuse of the
// library's rref/subspace machinery.  Dimensions of all five cohomologies
// and the Im-inclusion tests are recomputed here from raw operator blocks.

#pragma once

#include <vector>

#include "aeppli/operators.hpp"
#include "aeppli/scalar.hpp"

namespace oracle {

using aeppli::GaussRat;
using Table = std::vector<std::vector<GaussRat>>;

inline Table to_table(const aeppli::Matrix<GaussRat>& m) {
    Table t(m.rows(), std::vector<GaussRat>(m.cols(), GaussRat(0)));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t[i][j] = m(i, j);
    return t;
}

inline std::size_t dense_rank(Table a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            GaussRat f = a[i][c] / a[r][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

inline Table hstack(const Table& a, const Table& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    Table t = a;
    for (std::size_t i = 0; i < t.size(); ++i)
        t[i].insert(t[i].end(), b[i].begin(), b[i].end());
    return t;
}

inline Table vstack(const Table& a, const Table& b) {
    Table t = a;
    t.insert(t.end(), b.begin(), b.end());
    return t;
}

inline Table product(const Table& a, const Table& b) {
    const std::size_t r = a.size();
    const std::size_t k = b.size();
    const std::size_t c = k ? b[0].size() : 0;
    Table t(r, std::vector<GaussRat>(c, GaussRat(0)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t m = 0; m < k; ++m)
            for (std::size_t j = 0; j < c; ++j) t[i][j] += a[i][m] * b[m][j];
    return t;
}

// Basis of ker(a) as columns of a table (free-column convention).
inline Table dense_kernel(Table a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        GaussRat inv = GaussRat(1) / a[r][c];
        for (std::size_t j = 0; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            GaussRat f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_piv(cols, false);
    for (auto c : pivots) is_piv[c] = true;
    Table basis(cols);
    std::size_t nk = 0;
    for (std::size_t f = 0; f < cols; ++f)
        if (!is_piv[f]) ++nk;
    for (std::size_t i = 0; i < cols; ++i) basis[i].assign(nk, GaussRat(0));
    std::size_t k = 0;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        basis[f][k] = GaussRat(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) basis[pivots[i]][k] = -a[i][f];
        ++k;
    }
    return basis;
}

struct Dims {
    long long derham, dolbeault_dbar, dolbeault_del, bott_chern, aeppli;
};

// dim ker(dbar at (p,q)) - rank(dbar into (p,q)), dense.
inline long long h_dbar(const aeppli::OperatorSet& ops, int p, int q) {
    const auto out = to_table(ops.dbar(p, q));
    const long long dim_pq = static_cast<long long>(aeppli::space_dim(ops.n(), p, q));
    const long long k = dim_pq - static_cast<long long>(dense_rank(out));
    const long long im = (q >= 1) ? static_cast<long long>(dense_rank(to_table(ops.dbar(p, q - 1)))) : 0;
    return k - im;
}

inline long long h_del(const aeppli::OperatorSet& ops, int p, int q) {
    const auto out = to_table(ops.del(p, q));
    const long long dim_pq = static_cast<long long>(aeppli::space_dim(ops.n(), p, q));
    const long long k = dim_pq - static_cast<long long>(dense_rank(out));
    const long long im = (p >= 1) ? static_cast<long long>(dense_rank(to_table(ops.del(p - 1, q)))) : 0;
    return k - im;
}

// dim(ker del ^ ker dbar) - rank(del dbar from (p-1,q-1)).
inline long long h_bc(const aeppli::OperatorSet& ops, int p, int q) {
    const long long dim_pq = static_cast<long long>(aeppli::space_dim(ops.n(), p, q));
    const auto both = vstack(to_table(ops.del(p, q)), to_table(ops.dbar(p, q)));
    const long long k = dim_pq - static_cast<long long>(dense_rank(both));
    long long im = 0;
    if (p >= 1 && q >= 1)
        im = static_cast<long long>(
            dense_rank(product(to_table(ops.del(p - 1, q)), to_table(ops.dbar(p - 1, q - 1)))));
    return k - im;
}

// dim ker(del dbar at (p,q)) - dim(Im del|(p-1,q) + Im dbar|(p,q-1)).
inline long long h_aeppli(const aeppli::OperatorSet& ops, int p, int q) {
    const int n = ops.n();
    const long long dim_pq = static_cast<long long>(aeppli::space_dim(n, p, q));
    long long k = dim_pq;
    if (p + 1 <= n && q + 1 <= n)
        k = dim_pq - static_cast<long long>(
                         dense_rank(product(to_table(ops.del(p, q + 1)), to_table(ops.dbar(p, q)))));
    Table images;
    if (p >= 1) images = to_table(ops.del(p - 1, q));
    if (q >= 1) images = hstack(images, to_table(ops.dbar(p, q - 1)));
    const long long im = images.empty() ? 0 : static_cast<long long>(dense_rank(images));
    return k - im;
}

// Total complexified de Rham: assemble d_k from blocks, dense ranks.
inline Table d_total(const aeppli::OperatorSet& ops, int k) {
    const int n = ops.n();
    std::vector<std::pair<int, int>> src, dst;
    for (int p = 0; p <= n; ++p) {
        if (k - p >= 0 && k - p <= n) src.push_back({p, k - p});
        if (k + 1 - p >= 0 && k + 1 - p <= n) dst.push_back({p, k + 1 - p});
    }
    std::size_t rows = 0, cols = 0;
    std::vector<std::size_t> roff, coff;
    for (auto [p, q] : dst) {
        roff.push_back(rows);
        rows += aeppli::space_dim(n, p, q);
    }
    for (auto [p, q] : src) {
        coff.push_back(cols);
        cols += aeppli::space_dim(n, p, q);
    }
    Table t(rows, std::vector<GaussRat>(cols, GaussRat(0)));
    for (std::size_t s = 0; s < src.size(); ++s) {
        auto [p, q] = src[s];
        for (std::size_t d = 0; d < dst.size(); ++d) {
            auto [a, b] = dst[d];
            const aeppli::Matrix<GaussRat>* block = nullptr;
            if (a == p + 1 && b == q) block = &ops.del(p, q);
            if (a == p && b == q + 1) block = &ops.dbar(p, q);
            if (!block) continue;
            for (std::size_t i = 0; i < block->rows(); ++i)
                for (std::size_t j = 0; j < block->cols(); ++j)
                    t[roff[d] + i][coff[s] + j] = (*block)(i, j);
        }
    }
    return t;
}

inline long long b_k(const aeppli::OperatorSet& ops, int k) {
    const int n = ops.n();
    long long dim_k = 0;
    for (int p = 0; p <= n; ++p)
        if (k - p >= 0 && k - p <= n) dim_k += aeppli::space_dim(n, p, k - p);
    const long long rk_out = (k < 2 * n) ? static_cast<long long>(dense_rank(d_total(ops, k))) : 0;
    const long long rk_in = (k >= 1) ? static_cast<long long>(dense_rank(d_total(ops, k - 1))) : 0;
    return dim_k - rk_out - rk_in;
}

// Does every d-closed (p,q)-form in Im del lie in Im dbar (resp. Im del dbar)?
// Computed as: (Im del ^ ker dbar) distinct-subspace test against the target
// image, via ranks of stacked generator columns.
inline bool im_del_closed_inside(const aeppli::OperatorSet& ops, int p, int q, bool target_ddbar) {
    const int n = ops.n();
    if (p < 1 || p > n || q < 0 || q > n) return true;
    // columns spanning Im del into (p,q)
    Table gen = to_table(ops.del(p - 1, q));
    const std::size_t m = gen.empty() ? 0 : gen[0].size();
    // intersect with ker dbar: solve for combinations with dbar * (gen x) = 0
    Table comb;
    if (q + 1 > n) {  // dbar lands in the zero space: everything is closed
        comb.assign(m, std::vector<GaussRat>(m, GaussRat(0)));
        for (std::size_t i = 0; i < m; ++i) comb[i][i] = GaussRat(1);
    } else {
        Table dbar_gen = product(to_table(ops.dbar(p, q)), gen);
        if (dbar_gen.empty()) dbar_gen.assign(1, std::vector<GaussRat>(m, GaussRat(0)));
        comb = dense_kernel(dbar_gen);
    }
    Table closed = product(gen, comb);  // spanning set of Im del ^ ker dbar
    Table target;
    if (target_ddbar) {
        if (p >= 1 && q >= 1)
            target = product(to_table(ops.del(p - 1, q)), to_table(ops.dbar(p - 1, q - 1)));
    } else {
        if (q >= 1) target = to_table(ops.dbar(p, q - 1));
    }
    const std::size_t rk_t = target.empty() ? 0 : dense_rank(target);
    const std::size_t rk_union = dense_rank(hstack(target, closed));
    return rk_union == rk_t;
}

}  // namespace oracle
