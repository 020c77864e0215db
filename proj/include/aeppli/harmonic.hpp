// Floating-point cross-check of the exact quotient dimensions: assemble the
// Laplace-type operators in the inner product that makes the canonical
// monomial basis orthonormal (adjoint = conjugate transpose) and count the
// numerical kernel.
//
//   Delta_A  = del del* + dbar dbar* + dbar* del* del dbar + del dbar dbar* del*
//              + del dbar* dbar del* + dbar del* del dbar*
//   Delta_BC = del dbar dbar* del* + dbar* del* del dbar + dbar* del del* dbar
//              + del* dbar dbar* del + dbar* dbar + del* del
//   Delta'   = del del* + del* del          (and the dbar / full-d analogues)
//
// Exact dimensions are authoritative; this is a consistency probe only.

#pragma once

#include <Eigen/Dense>

#include "aeppli/cohomology.hpp"
#include "aeppli/errors.hpp"
#include "aeppli/operators.hpp"

namespace aeppli {

namespace detail {

inline Eigen::MatrixXcd to_eigen(const Matrix<GaussRat>& m) {
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                std::complex<double>(to_double(m(i, j).re), to_double(m(i, j).im));
    return e;
}

// del: (p,q) -> (p+1,q) as a dense complex matrix; zero-sized out of range.
inline Eigen::MatrixXcd mat_del(const OperatorSet& ops, int p, int q) {
    const int n = ops.n();
    const auto rows = static_cast<Eigen::Index>(space_dim(n, p + 1, q));
    const auto cols = static_cast<Eigen::Index>(space_dim(n, p, q));
    if (p < 0 || q < 0 || p > n || q > n) return Eigen::MatrixXcd::Zero(rows, cols);
    return to_eigen(ops.del(p, q));
}

inline Eigen::MatrixXcd mat_dbar(const OperatorSet& ops, int p, int q) {
    const int n = ops.n();
    const auto rows = static_cast<Eigen::Index>(space_dim(n, p, q + 1));
    const auto cols = static_cast<Eigen::Index>(space_dim(n, p, q));
    if (p < 0 || q < 0 || p > n || q > n) return Eigen::MatrixXcd::Zero(rows, cols);
    return to_eigen(ops.dbar(p, q));
}

}  // namespace detail

inline Eigen::MatrixXcd laplacian(const OperatorSet& ops, CohLabel label, int p, int q, int k = -1) {
    using detail::mat_dbar;
    using detail::mat_del;
    switch (label) {
        case CohLabel::DolbeaultDel: {
            const auto d = mat_del(ops, p, q);
            const auto dm = mat_del(ops, p - 1, q);
            return dm * dm.adjoint() + d.adjoint() * d;
        }
        case CohLabel::DolbeaultDbar: {
            const auto d = mat_dbar(ops, p, q);
            const auto dm = mat_dbar(ops, p, q - 1);
            return dm * dm.adjoint() + d.adjoint() * d;
        }
        case CohLabel::DeRham: {
            const auto d = detail::to_eigen(total_d_matrix(ops, k));
            const Eigen::MatrixXcd dm = (k >= 1) ? detail::to_eigen(total_d_matrix(ops, k - 1))
                                                 : Eigen::MatrixXcd::Zero(d.cols(), 0);
            return dm * dm.adjoint() + d.adjoint() * d;
        }
        case CohLabel::Aeppli: {
            const auto t1 = mat_del(ops, p - 1, q);
            const auto t2 = mat_dbar(ops, p, q - 1);
            const Eigen::MatrixXcd pp = mat_del(ops, p, q + 1) * mat_dbar(ops, p, q);
            const Eigen::MatrixXcd qq = mat_del(ops, p - 1, q) * mat_dbar(ops, p - 1, q - 1);
            const Eigen::MatrixXcd r = mat_dbar(ops, p - 1, q) * mat_del(ops, p - 1, q).adjoint();
            const Eigen::MatrixXcd s = mat_del(ops, p, q - 1) * mat_dbar(ops, p, q - 1).adjoint();
            return t1 * t1.adjoint() + t2 * t2.adjoint() + pp.adjoint() * pp + qq * qq.adjoint() +
                   r.adjoint() * r + s.adjoint() * s;
        }
        case CohLabel::BottChern: {
            const auto d = mat_del(ops, p, q);
            const auto b = mat_dbar(ops, p, q);
            const Eigen::MatrixXcd pp = mat_del(ops, p, q + 1) * mat_dbar(ops, p, q);
            const Eigen::MatrixXcd qq = mat_del(ops, p - 1, q) * mat_dbar(ops, p - 1, q - 1);
            const Eigen::MatrixXcd u = mat_del(ops, p - 1, q + 1).adjoint() * mat_dbar(ops, p, q);
            const Eigen::MatrixXcd v = mat_dbar(ops, p + 1, q - 1).adjoint() * mat_del(ops, p, q);
            return qq * qq.adjoint() + pp.adjoint() * pp + u.adjoint() * u + v.adjoint() * v +
                   b.adjoint() * b + d.adjoint() * d;
        }
    }
    throw InternalCheckError("label");
}

// Numerical kernel dimension with a relative singular-value threshold and a
// mandatory spectral-gap factor around it (report rather than guess).
inline long long harmonic_dims(const OperatorSet& ops, CohLabel label, int p, int q,
                               double tol = 1e-8, int k = -1, double gap_factor = 10.0) {
    const Eigen::MatrixXcd lap = laplacian(ops, label, p, q, k);
    if (lap.rows() == 0) return 0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(lap);
    internal_check(es.info() == Eigen::Success, "eigen decomposition failed");
    const Eigen::VectorXd ev = es.eigenvalues().cwiseAbs();
    const double smax = ev.maxCoeff();
    if (smax == 0.0) return lap.rows();  // zero operator: kernel is everything
    const double cut = tol * smax;
    double below = 0.0;           // largest |eigenvalue| under the threshold
    double above = -1.0;          // smallest at or over it
    long long dim = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev(i) < cut) {
            ++dim;
            below = std::max(below, ev(i));
        } else {
            above = above < 0 ? ev(i) : std::min(above, ev(i));
        }
    }
    if (above >= 0 && below > 0 && above < gap_factor * below)
        throw IllConditionedError("spectral gap around the kernel threshold is below the required factor");
    return dim;
}

}  // namespace aeppli
