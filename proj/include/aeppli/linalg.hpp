// Dense exact linear algebra: RREF, rank, kernels, solves, canonical
// subspaces and quotient spaces.
//
// Everything is deterministic: elimination scans columns left to right and
// picks the first usable pivot row, subspaces are stored in reduced row
// echelon form, so equal subspaces have identical representations.

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "aeppli/errors.hpp"
#include "aeppli/scalar.hpp"

namespace aeppli {

template <typename T>
using Vec = std::vector<T>;

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (const T& x : a_)
            if (!ScalarOps<T>::is_zero(x)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Matrix operator*(const Matrix& o) const {
        internal_check(cols_ == o.rows_, "matrix product shape");
        Matrix m(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& x = (*this)(i, k);
                if (ScalarOps<T>::is_zero(x)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) m(i, j) += x * o(k, j);
            }
        return m;
    }

    Vec<T> operator*(const Vec<T>& v) const {
        internal_check(cols_ == v.size(), "matrix-vector shape");
        Vec<T> r(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!ScalarOps<T>::is_zero((*this)(i, j))) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        internal_check(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape");
        Matrix m = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
        return m;
    }

    Matrix operator-() const {
        Matrix m = *this;
        for (T& x : m.a_) x = -x;
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    void set_row(std::size_t i, const Vec<T>& v) {
        internal_check(v.size() == cols_, "row width");
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }
    Vec<T> row(std::size_t i) const {
        Vec<T> v(cols_);
        for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
        return v;
    }
    Vec<T> col(std::size_t j) const {
        Vec<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> a_;
};

// In-place reduced row echelon form; returns the pivot columns.
template <typename T>
std::vector<std::size_t> rref_in_place(Matrix<T>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && ScalarOps<T>::is_zero(m(pr, c))) ++pr;
        if (pr == m.rows()) continue;
        if (pr != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(r, j));
        const T inv = T(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || ScalarOps<T>::is_zero(m(i, c))) continue;
            const T f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <typename T>
std::size_t rank(Matrix<T> m) {
    return rref_in_place(m).size();
}

// Kernel basis vectors, one per free column, in ascending free-column order.
template <typename T>
std::vector<Vec<T>> nullspace(Matrix<T> m) {
    const std::size_t n = m.cols();
    const auto pivots = rref_in_place(m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec<T>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec<T> v(n, T(0));
        v[f] = T(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// One particular solution of A x = b, if any.
template <typename T>
std::optional<Vec<T>> solve(const Matrix<T>& a, const Vec<T>& b) {
    internal_check(a.rows() == b.size(), "solve shape");
    Matrix<T> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    Vec<T> x(a.cols(), T(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
    return x;
}

template <typename T>
Matrix<T> from_rows(const std::vector<Vec<T>>& rows, std::size_t width) {
    Matrix<T> m(rows.size(), width);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

template <typename T>
Matrix<T> from_cols(const std::vector<Vec<T>>& cols, std::size_t height) {
    Matrix<T> m(height, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        internal_check(cols[j].size() == height, "column height");
        for (std::size_t i = 0; i < height; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

// A linear subspace of T^ambient in canonical (RREF rows) representation.
// Two Subspace values are equal iff they are the same subspace.
template <typename T>
class Subspace {
public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<Vec<T>>& gens) {
        Subspace s(ambient);
        if (gens.empty()) return s;
        Matrix<T> m = from_rows(gens, ambient);
        const auto pivots = rref_in_place(m);
        s.basis_ = Matrix<T>(pivots.size(), ambient);
        for (std::size_t i = 0; i < pivots.size(); ++i) s.basis_.set_row(i, m.row(i));
        return s;
    }

    static Subspace full(std::size_t ambient) {
        Subspace s(ambient);
        s.basis_ = Matrix<T>::identity(ambient);
        return s;
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    Vec<T> basis_row(std::size_t i) const { return basis_.row(i); }
    const Matrix<T>& basis() const { return basis_; }

    bool contains(const Vec<T>& v) const {
        internal_check(v.size() == ambient_, "subspace membership shape");
        // Reduce v against the RREF rows; leftover must vanish.
        Vec<T> w = v;
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            std::size_t pc = pivot_col(i);
            if (!ScalarOps<T>::is_zero(w[pc])) {
                const T f = w[pc];
                for (std::size_t j = 0; j < ambient_; ++j) w[j] = w[j] - f * basis_(i, j);
            }
        }
        for (const T& x : w)
            if (!ScalarOps<T>::is_zero(x)) return false;
        return true;
    }

    bool contains(const Subspace& o) const {
        for (std::size_t i = 0; i < o.dim(); ++i)
            if (!contains(o.basis_row(i))) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

    Subspace sum(const Subspace& o) const {
        internal_check(ambient_ == o.ambient_, "subspace sum ambient");
        std::vector<Vec<T>> gens;
        for (std::size_t i = 0; i < dim(); ++i) gens.push_back(basis_row(i));
        for (std::size_t i = 0; i < o.dim(); ++i) gens.push_back(o.basis_row(i));
        return span(ambient_, gens);
    }

    Subspace intersect(const Subspace& o) const {
        internal_check(ambient_ == o.ambient_, "subspace intersection ambient");
        // x = alpha^T A = beta^T B: kernel of [A^T | -B^T].
        Matrix<T> k(ambient_, dim() + o.dim());
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < ambient_; ++j) k(j, i) = basis_(i, j);
        for (std::size_t i = 0; i < o.dim(); ++i)
            for (std::size_t j = 0; j < ambient_; ++j) k(j, dim() + i) = -o.basis_(i, j);
        std::vector<Vec<T>> gens;
        for (const auto& v : nullspace(k)) {
            Vec<T> x(ambient_, T(0));
            for (std::size_t i = 0; i < dim(); ++i)
                for (std::size_t j = 0; j < ambient_; ++j) x[j] += v[i] * basis_(i, j);
            gens.push_back(std::move(x));
        }
        return span(ambient_, gens);
    }

private:
    std::size_t pivot_col(std::size_t i) const {
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!ScalarOps<T>::is_zero(basis_(i, j))) return j;
        throw InternalCheckError("zero row in subspace basis");
    }

    std::size_t ambient_;
    Matrix<T> basis_;
};

template <typename T>
Subspace<T> image(const Matrix<T>& m) {
    std::vector<Vec<T>> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
    return Subspace<T>::span(m.rows(), cols);
}

template <typename T>
Subspace<T> kernel(const Matrix<T>& m) {
    return Subspace<T>::span(m.cols(), nullspace(m));
}

// A quotient kernel/modding with explicit representatives and a projector.
//
// Representatives extend the modding subspace to a basis of the kernel
// subspace by greedy pivoting over the kernel's canonical basis rows, lowest
// index first, so classes are reproducible.
template <typename T>
class QuotientSpace {
public:
    QuotientSpace(Subspace<T> kernel_space, Subspace<T> modding)
        : kernel_(std::move(kernel_space)), modding_(std::move(modding)) {
        internal_check(kernel_.ambient() == modding_.ambient(), "quotient ambient");
        internal_check(kernel_.contains(modding_), "modding subspace not inside kernel subspace");
        Subspace<T> acc = modding_;
        for (std::size_t i = 0; i < kernel_.dim(); ++i) {
            Vec<T> cand = kernel_.basis_row(i);
            if (acc.contains(cand)) continue;
            reps_.push_back(cand);
            std::vector<Vec<T>> gens;
            for (std::size_t r = 0; r < acc.dim(); ++r) gens.push_back(acc.basis_row(r));
            gens.push_back(std::move(cand));
            acc = Subspace<T>::span(kernel_.ambient(), gens);
        }
        internal_check(reps_.size() == kernel_.dim() - modding_.dim(), "quotient dimension");
        // Projector: solve [modding^T | reps^T] c = v once per query.
        proj_ = Matrix<T>(kernel_.ambient(), modding_.dim() + reps_.size());
        for (std::size_t i = 0; i < modding_.dim(); ++i) {
            const auto r = modding_.basis_row(i);
            for (std::size_t j = 0; j < kernel_.ambient(); ++j) proj_(j, i) = r[j];
        }
        for (std::size_t i = 0; i < reps_.size(); ++i)
            for (std::size_t j = 0; j < kernel_.ambient(); ++j)
                proj_(j, modding_.dim() + i) = reps_[i][j];
    }

    std::size_t dim() const { return reps_.size(); }
    std::size_t ambient() const { return kernel_.ambient(); }
    const Subspace<T>& kernel_space() const { return kernel_; }
    const Subspace<T>& modding_space() const { return modding_; }
    const std::vector<Vec<T>>& representatives() const { return reps_; }

    bool admissible(const Vec<T>& v) const { return kernel_.contains(v); }

    // Class coordinates in the representative basis; v must be admissible.
    Vec<T> coords(const Vec<T>& v) const {
        if (!admissible(v)) throw FormNotInKernelError("form not in the defining kernel subspace");
        auto sol = solve(proj_, v);
        internal_check(sol.has_value(), "projector solve");
        Vec<T> c(reps_.size());
        for (std::size_t i = 0; i < reps_.size(); ++i) c[i] = (*sol)[modding_.dim() + i];
        return c;
    }

    Vec<T> lift(const Vec<T>& coords_vec) const {
        internal_check(coords_vec.size() == reps_.size(), "class coordinate width");
        Vec<T> v(kernel_.ambient(), T(0));
        for (std::size_t i = 0; i < reps_.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) v[j] += coords_vec[i] * reps_[i][j];
        return v;
    }

private:
    Subspace<T> kernel_;
    Subspace<T> modding_;
    std::vector<Vec<T>> reps_;
    Matrix<T> proj_;
};

}  // namespace aeppli
