// (p,q)-forms with sparse Gaussian-rational coefficients over the canonical
// monomial basis, plus wedge, conjugation and coordinate conversion.
//
// Sign conventions fixed here once:
//  * monomial factors are ordered holomorphic-ascending then anti-ascending;
//  * wedge signs are Koszul signs of interleaving the factor lists;
//  * conjugate(phi^I ^ phib^J) = (-1)^{|I||J|} phi^J ^ phib^I.

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "aeppli/errors.hpp"
#include "aeppli/linalg.hpp"
#include "aeppli/monomial.hpp"
#include "aeppli/scalar.hpp"

namespace aeppli {

namespace detail {

// #{(a, b) in A x B : a > b}, over bitmask index sets.
inline int inversions(std::uint32_t a, std::uint32_t b) {
    int inv = 0;
    for (int i = 1; i <= kMaxDim; ++i) {
        if (!(b & (1u << (i - 1)))) continue;
        inv += __builtin_popcount(a >> i);  // members of a strictly above i
    }
    return inv;
}

}  // namespace detail

class BidegreeForm {
public:
    BidegreeForm(int n, int p, int q) : n_(n), p_(p), q_(q) {
        if (p < 0 || q < 0 || p > n || q > n) throw DomainError("bidegree out of range");
    }

    static BidegreeForm monomial_form(int n, const Monomial& m, GaussRat c = GaussRat(1)) {
        BidegreeForm f(n, m.holo_degree(), m.anti_degree());
        f.add_term(m, std::move(c));
        return f;
    }

    int n() const { return n_; }
    int p() const { return p_; }
    int q() const { return q_; }
    int degree() const { return p_ + q_; }

    bool is_zero() const { return coef_.empty(); }
    const std::map<Monomial, GaussRat>& terms() const { return coef_; }

    GaussRat coeff(const Monomial& m) const {
        auto it = coef_.find(m);
        return it == coef_.end() ? GaussRat(0) : it->second;
    }

    void add_term(const Monomial& m, GaussRat c) {
        if (m.holo_degree() != p_ || m.anti_degree() != q_)
            throw DomainError("monomial bidegree does not match the form");
        if (c.is_zero()) return;
        auto it = coef_.find(m);
        if (it == coef_.end()) {
            coef_.emplace(m, std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) coef_.erase(it);
        }
    }

    BidegreeForm& operator+=(const BidegreeForm& o) {
        check_same_shape(o);
        for (const auto& [m, c] : o.coef_) add_term(m, c);
        return *this;
    }
    BidegreeForm& operator-=(const BidegreeForm& o) {
        check_same_shape(o);
        for (const auto& [m, c] : o.coef_) add_term(m, -c);
        return *this;
    }
    BidegreeForm& operator*=(const GaussRat& s) {
        if (s.is_zero()) {
            coef_.clear();
            return *this;
        }
        for (auto& [m, c] : coef_) c *= s;
        return *this;
    }

    friend BidegreeForm operator+(BidegreeForm a, const BidegreeForm& b) { return a += b; }
    friend BidegreeForm operator-(BidegreeForm a, const BidegreeForm& b) { return a -= b; }
    friend BidegreeForm operator*(const GaussRat& s, BidegreeForm f) { return f *= s; }
    friend bool operator==(const BidegreeForm& a, const BidegreeForm& b) {
        return a.n_ == b.n_ && a.p_ == b.p_ && a.q_ == b.q_ && a.coef_ == b.coef_;
    }

    Vec<GaussRat> to_vector() const {
        Vec<GaussRat> v(space_dim(n_, p_, q_), GaussRat(0));
        for (const auto& [m, c] : coef_) v[basis_index(m, n_)] = c;
        return v;
    }

    static BidegreeForm from_vector(int n, int p, int q, const Vec<GaussRat>& v) {
        const auto bs = basis(n, p, q);
        internal_check(v.size() == bs.size(), "coordinate vector width");
        BidegreeForm f(n, p, q);
        for (std::size_t i = 0; i < bs.size(); ++i)
            if (!v[i].is_zero()) f.add_term(bs[i], v[i]);
        return f;
    }

    std::string str() const {
        if (coef_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : coef_) {
            if (!first) s += " + ";
            s += "(" + to_string(c) + ")*" + m.str();
            first = false;
        }
        return s;
    }

private:
    void check_same_shape(const BidegreeForm& o) const {
        if (n_ != o.n_ || p_ != o.p_ || q_ != o.q_)
            throw DomainError("form shapes differ");
    }

    int n_, p_, q_;
    std::map<Monomial, GaussRat> coef_;
};

inline BidegreeForm wedge(const BidegreeForm& a, const BidegreeForm& b) {
    const int n = a.n();
    if (b.n() != n) throw DomainError("wedge of forms over different coframes");
    const int p = a.p() + b.p();
    const int q = a.q() + b.q();
    if (p > n || q > n) throw DomainError("wedge overflows bidegree");
    BidegreeForm out(n, p, q);
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            if ((ma.holo & mb.holo) || (ma.anti & mb.anti)) continue;
            // anti factors of a jump over holo factors of b, then both index
            // lists are merge-sorted.
            int swaps = ma.anti_degree() * mb.holo_degree();
            swaps += detail::inversions(ma.holo, mb.holo);
            swaps += detail::inversions(ma.anti, mb.anti);
            GaussRat c = ca * cb;
            if (swaps % 2) c = -c;
            out.add_term(Monomial{ma.holo | mb.holo, ma.anti | mb.anti}, std::move(c));
        }
    }
    return out;
}

inline BidegreeForm conjugate(const BidegreeForm& a) {
    BidegreeForm out(a.n(), a.q(), a.p());
    for (const auto& [m, c] : a.terms()) {
        GaussRat cc = c.conj();
        if ((m.holo_degree() * m.anti_degree()) % 2) cc = -cc;
        out.add_term(Monomial{m.anti, m.holo}, std::move(cc));
    }
    return out;
}

inline bool is_real(const BidegreeForm& a) { return conjugate(a) == a; }

// A form of pure total degree with mixed bidegree components.
struct TotalForm {
    int n = 0;
    int degree = 0;
    std::map<std::pair<int, int>, BidegreeForm> blocks;

    TotalForm(int n_, int degree_) : n(n_), degree(degree_) {}

    void set_block(BidegreeForm f) {
        if (f.degree() != degree) throw DomainError("block degree mismatch");
        if (f.is_zero()) return;
        blocks.insert_or_assign({f.p(), f.q()}, std::move(f));
    }

    void set_block_add(const BidegreeForm& f) {
        if (f.is_zero()) return;
        if (f.degree() != degree) throw DomainError("block degree mismatch");
        auto it = blocks.find({f.p(), f.q()});
        if (it == blocks.end()) {
            blocks.emplace(std::make_pair(f.p(), f.q()), f);
        } else {
            it->second += f;
            if (it->second.is_zero()) blocks.erase(it);
        }
    }

    BidegreeForm block(int p, int q) const {
        auto it = blocks.find({p, q});
        if (it != blocks.end()) return it->second;
        return BidegreeForm(n, p, q);
    }

    bool is_zero() const {
        for (const auto& [pq, f] : blocks)
            if (!f.is_zero()) return false;
        return true;
    }

    TotalForm& operator+=(const TotalForm& o) {
        internal_check(n == o.n && degree == o.degree, "total form shape");
        for (const auto& [pq, f] : o.blocks) {
            auto it = blocks.find(pq);
            if (it == blocks.end())
                blocks.emplace(pq, f);
            else {
                it->second += f;
                if (it->second.is_zero()) blocks.erase(it);
            }
        }
        return *this;
    }
};

inline TotalForm conjugate(const TotalForm& a) {
    TotalForm out(a.n, a.degree);
    for (const auto& [pq, f] : a.blocks) out.set_block(conjugate(f));
    return out;
}

inline bool is_real(const TotalForm& a) {
    TotalForm c = conjugate(a);
    TotalForm d = a;
    for (auto& [pq, f] : c.blocks) f *= GaussRat(-1);
    d += c;
    return d.is_zero();
}

}  // namespace aeppli
