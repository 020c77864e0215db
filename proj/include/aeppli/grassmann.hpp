// Grassmannian frame sampling and strict weak positivity.
//
// A (p,p)-form is tested against frames of q = n-p independent (1,0)
// covectors: the margin is the top coefficient of
// Omega ^ i t_1 ^ tb_1 ^ ... ^ i t_q ^ tb_q, normalized by what the
// reference Kahler form omega_0^p/p! yields on the same frame (positive
// exactly when the frame is independent, which doubles as the degeneracy
// test).  For p in {1, n-1, n} positivity is decided exactly via Sylvester
// minors of the Hermitian coefficient matrix; sampled margins are reported
// in all modes.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "aeppli/errors.hpp"
#include "aeppli/form.hpp"
#include "aeppli/monomial.hpp"
#include "aeppli/scalar.hpp"

namespace aeppli {

struct Frame {
    // q covectors, each with n Gaussian-rational coordinates in the phi basis
    std::vector<std::vector<GaussRat>> covectors;
};

// The positive generator of Lambda^{n,n}: prod_j (i phi^j ^ phib^j) equals
// i^n (-1)^{n(n-1)/2} times the canonical top monomial.
inline GaussRat top_unit(int n) {
    GaussRat c(1);
    for (int j = 0; j < n; ++j) c *= GaussRat::unit_i();
    if ((n * (n - 1) / 2) % 2) c = -c;
    return c;
}

// lambda with form = lambda * vol_n; exact, the form must be (n,n).
inline GaussRat top_ratio(const BidegreeForm& f) {
    const int n = f.n();
    if (f.p() != n || f.q() != n) throw DomainError("top_ratio needs an (n,n)-form");
    std::uint32_t full = 0;
    for (int i = 0; i < n; ++i) full |= 1u << i;
    return f.coeff(Monomial{full, full}) / top_unit(n);
}

inline BidegreeForm standard_kahler(int n) {
    BidegreeForm w(n, 1, 1);
    for (int j = 1; j <= n; ++j) w.add_term(Monomial::from_indices({j}, {j}), GaussRat::unit_i());
    return w;
}

// omega_0^p / p!
inline BidegreeForm reference_power(int n, int p) {
    BidegreeForm acc(n, 0, 0);
    acc.add_term(Monomial{0, 0}, GaussRat(1));
    const auto w = standard_kahler(n);
    GaussRat fact(1);
    for (int i = 1; i <= p; ++i) {
        acc = wedge(acc, w);
        fact *= GaussRat(i);
    }
    acc *= GaussRat(1) / fact;
    return acc;
}

// i t ^ tb for one covector.
inline BidegreeForm covector_pair(int n, const std::vector<GaussRat>& t) {
    BidegreeForm f(n, 1, 1);
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            const GaussRat c = GaussRat::unit_i() * t[j - 1] * t[k - 1].conj();
            if (!c.is_zero()) f.add_term(Monomial::from_indices({j}, {k}), c);
        }
    return f;
}

// i t_1 ^ tb_1 ^ ... ^ i t_q ^ tb_q as a (q,q)-form.
inline BidegreeForm frame_wedge(int n, const Frame& fr) {
    BidegreeForm acc(n, 0, 0);
    acc.add_term(Monomial{0, 0}, GaussRat(1));
    for (const auto& t : fr.covectors) acc = wedge(acc, covector_pair(n, t));
    return acc;
}

struct GrassmannSample {
    int n = 0;
    int p = 0;  // plane dimension; frames have n-p covectors
    std::uint64_t seed = 0;
    std::vector<Frame> frames;       // all standard coordinate frames first
    std::size_t standard_count = 0;
    int skipped_degenerate = 0;

    // cached per-frame data
    std::vector<BidegreeForm> wedges;
    std::vector<Rat> normalizers;
};

namespace detail {

// low-discrepancy Weyl sequence on (0,1), rationalized at denominator 64
inline Rat weyl_coordinate(std::uint64_t index, std::size_t channel) {
    static const double alphas[] = {std::sqrt(2.0),  std::sqrt(3.0),  std::sqrt(5.0),
                                    std::sqrt(7.0),  std::sqrt(11.0), std::sqrt(13.0),
                                    std::sqrt(17.0), std::sqrt(19.0), std::sqrt(23.0),
                                    std::sqrt(29.0)};
    const double a = alphas[channel % 10];
    const double v = std::fmod(static_cast<double>(index % 100000) * a, 1.0);
    const long num = std::lround(v * 128.0) - 64;  // -64..64
    return Rat(num, 64);
}

}  // namespace detail

// Deterministic sample: every standard coordinate frame, then `count`
// low-discrepancy frames (degenerate draws are skipped and counted).
inline GrassmannSample make_sample(int n, int p, std::size_t count, std::uint64_t seed) {
    if (p < 1 || p > n) throw DomainError("plane dimension out of range");
    GrassmannSample s;
    s.n = n;
    s.p = p;
    s.seed = seed;
    const int q = n - p;

    auto push_frame = [&](Frame&& fr) -> bool {
        BidegreeForm w = frame_wedge(n, fr);
        const Rat norm = top_ratio(wedge(reference_power(n, p), w)).re;
        if (norm <= 0) return false;  // dependent covectors
        s.frames.push_back(std::move(fr));
        s.wedges.push_back(std::move(w));
        s.normalizers.push_back(norm);
        return true;
    };

    if (q == 0) {
        // top-degree positivity needs no frames; keep the empty frame so the
        // sampled margin is still defined
        Frame fr;
        internal_check(push_frame(std::move(fr)), "empty frame normalizer");
        s.standard_count = 1;
        return s;
    }

    // standard coordinate frames, lex order on the q-subsets
    std::vector<int> idx(q);
    for (int i = 0; i < q; ++i) idx[i] = i + 1;
    while (true) {
        Frame fr;
        for (int i : idx) {
            std::vector<GaussRat> t(n, GaussRat(0));
            t[i - 1] = GaussRat(1);
            fr.covectors.push_back(std::move(t));
        }
        internal_check(push_frame(std::move(fr)), "standard frame normalizer");
        int i = q - 1;
        while (i >= 0 && idx[i] == n - q + i + 1) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < q; ++j) idx[j] = idx[j - 1] + 1;
    }
    s.standard_count = s.frames.size();

    std::uint64_t index = 1 + seed * 7919;
    std::size_t accepted = 0;
    while (accepted < count) {
        Frame fr;
        std::size_t channel = 0;
        for (int c = 0; c < q; ++c) {
            std::vector<GaussRat> t(n);
            for (int j = 0; j < n; ++j)
                t[j] = GaussRat(detail::weyl_coordinate(index + c, channel++),
                                detail::weyl_coordinate(index + c, channel++));
            fr.covectors.push_back(std::move(t));
        }
        index += q;
        if (push_frame(std::move(fr)))
            ++accepted;
        else
            ++s.skipped_degenerate;
    }
    return s;
}

// Exact positivity of the Hermitian form behind a real (1,1)-form (h_{jk}
// with omega = i sum h_{jk} phi^j ^ phib^k); Sylvester's criterion.
inline Matrix<GaussRat> hermitian_matrix_of_11(const BidegreeForm& w) {
    const int n = w.n();
    Matrix<GaussRat> h(n, n);
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
            h(j - 1, k - 1) = w.coeff(Monomial::from_indices({j}, {k})) / GaussRat::unit_i();
    return h;
}

inline GaussRat exact_determinant(Matrix<GaussRat> m) {
    internal_check(m.rows() == m.cols(), "determinant of a square matrix");
    GaussRat det(1);
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c).is_zero()) ++piv;
        if (piv == n) return GaussRat(0);
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            const GaussRat f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

inline bool sylvester_positive_definite(const Matrix<GaussRat>& h) {
    for (std::size_t k = 1; k <= h.rows(); ++k) {
        Matrix<GaussRat> minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor(i, j) = h(i, j);
        const GaussRat d = exact_determinant(minor);
        internal_check(d.is_real(), "principal minor of a Hermitian matrix must be real");
        if (!(d.re > 0)) return false;
    }
    return true;
}

inline double min_eigenvalue(const Matrix<GaussRat>& h) {
    Eigen::MatrixXcd m(h.rows(), h.cols());
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                std::complex<double>(to_double(h(i, j).re), to_double(h(i, j).im));
    if (m.rows() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    return es.eigenvalues().minCoeff();
}

// For p = n-1 the frame test is a single covector, so tau -> top coefficient
// of Omega ^ i tau ^ taub is a Hermitian form; its matrix decides positivity.
inline Matrix<GaussRat> hermitian_matrix_of_top_pairing(const BidegreeForm& w) {
    const int n = w.n();
    Matrix<GaussRat> h(n, n);
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            const auto pair =
                BidegreeForm::monomial_form(n, Monomial::from_indices({j}, {k}), GaussRat::unit_i());
            h(j - 1, k - 1) = top_ratio(wedge(w, pair));
        }
    return h;
}

struct SwpReport {
    bool exact_mode = false;
    bool exact_positive = false;
    bool sampled_pass = false;
    Rat min_margin{0};
    double min_eigenvalue = 0.0;  // exact modes only
    int skipped = 0;

    bool pass() const { return exact_mode ? exact_positive : sampled_pass; }
};

inline Rat sampled_margin(const BidegreeForm& w, const GrassmannSample& sample,
                          std::size_t* argmin = nullptr) {
    internal_check(sample.n == w.n() && sample.p == w.p(), "sample shape");
    std::optional<Rat> best;
    for (std::size_t i = 0; i < sample.frames.size(); ++i) {
        const GaussRat v = top_ratio(wedge(w, sample.wedges[i]));
        internal_check(v.is_real(), "margin of a real form must be real");
        const Rat m = v.re / sample.normalizers[i];
        if (!best || m < *best) {
            best = m;
            if (argmin) *argmin = i;
        }
    }
    internal_check(best.has_value(), "sample has no frames");
    return *best;
}

// Strict weak positivity of a real (p,p)-form at the sample's resolution;
// exact for p in {1, n-1, n}.
inline SwpReport is_swp(const BidegreeForm& w, const GrassmannSample& sample) {
    const int n = w.n();
    if (w.p() != w.q() || w.p() != sample.p) throw DomainError("expected a (p,p)-form matching the sample");
    if (!is_real(w)) throw NonRealFormError("strict weak positivity needs a real form");
    SwpReport rep;
    rep.skipped = sample.skipped_degenerate;
    rep.min_margin = sampled_margin(w, sample);
    rep.sampled_pass = rep.min_margin > 0;
    const int p = w.p();
    if (p == n) {
        rep.exact_mode = true;
        const GaussRat r = top_ratio(w);
        internal_check(r.is_real(), "top ratio of a real form must be real");
        rep.exact_positive = r.re > 0;
        rep.min_eigenvalue = to_double(r.re);
    } else if (p == 1) {
        rep.exact_mode = true;
        const auto h = hermitian_matrix_of_11(w);
        rep.exact_positive = sylvester_positive_definite(h);
        rep.min_eigenvalue = min_eigenvalue(h);
    } else if (p == n - 1) {
        rep.exact_mode = true;
        const auto h = hermitian_matrix_of_top_pairing(w);
        rep.exact_positive = sylvester_positive_definite(h);
        rep.min_eigenvalue = min_eigenvalue(h);
    }
    return rep;
}

}  // namespace aeppli
