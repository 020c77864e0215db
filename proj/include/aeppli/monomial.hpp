// Multi-index monomials phi^{i1}^...^phi^{ip}^phib^{j1}^...^phib^{jq} with
// strictly increasing index lists, stored as bitmasks over indices 1..n.
//
// The canonical basis order of a bidegree is lexicographic on the pair of
// index sequences, which is exactly the order the combination enumeration
// below produces; ranking is combinadic.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "aeppli/errors.hpp"

namespace aeppli {

constexpr int kMaxDim = 5;

inline long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

struct Monomial {
    std::uint32_t holo = 0;
    std::uint32_t anti = 0;

    int holo_degree() const { return __builtin_popcount(holo); }
    int anti_degree() const { return __builtin_popcount(anti); }
    int degree() const { return holo_degree() + anti_degree(); }

    std::vector<int> holo_indices() const { return unpack(holo); }
    std::vector<int> anti_indices() const { return unpack(anti); }

    static Monomial from_indices(const std::vector<int>& hs, const std::vector<int>& as) {
        Monomial m;
        m.holo = pack(hs);
        m.anti = pack(as);
        return m;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.holo == b.holo && a.anti == b.anti;
    }

    // Lexicographic on (holo sequence, anti sequence).
    friend bool operator<(const Monomial& a, const Monomial& b) {
        const int c = seq_cmp(a.holo, b.holo);
        if (c != 0) return c < 0;
        return seq_cmp(a.anti, b.anti) < 0;
    }

    std::string str() const {
        std::string s;
        for (int i : holo_indices()) s += "φ" + std::to_string(i) + "∧";
        for (int i : anti_indices()) s += "φ̄" + std::to_string(i) + "∧";
        if (s.empty()) return "1";
        s.pop_back();  // trailing wedge (3 bytes)
        s.pop_back();
        s.pop_back();
        return s;
    }

private:
    static std::vector<int> unpack(std::uint32_t mask) {
        std::vector<int> v;
        for (int i = 1; i <= kMaxDim; ++i)
            if (mask & (1u << (i - 1))) v.push_back(i);
        return v;
    }
    static std::uint32_t pack(const std::vector<int>& idx) {
        std::uint32_t m = 0;
        int prev = 0;
        for (int i : idx) {
            if (i <= prev || i > kMaxDim) throw DomainError("monomial indices must be strictly increasing in 1..5");
            m |= 1u << (i - 1);
            prev = i;
        }
        return m;
    }
    static int seq_cmp(std::uint32_t a, std::uint32_t b) {
        const auto va = unpack(a);
        const auto vb = unpack(b);
        const std::size_t m = std::min(va.size(), vb.size());
        for (std::size_t i = 0; i < m; ++i) {
            if (va[i] != vb[i]) return va[i] < vb[i] ? -1 : 1;
        }
        if (va.size() != vb.size()) return va.size() < vb.size() ? -1 : 1;
        return 0;
    }
};

namespace detail {

inline void enumerate_subsets(int n, int k, std::vector<std::uint32_t>& out) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i + 1;
    while (true) {
        std::uint32_t m = 0;
        for (int i : idx) m |= 1u << (i - 1);
        out.push_back(m);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Lexicographic rank of a k-subset of 1..n.
inline long long subset_rank(std::uint32_t mask, int n, int k) {
    long long r = 0;
    int prev = 0;
    int remaining = k;
    for (int i = 1; i <= n && remaining > 0; ++i) {
        if (mask & (1u << (i - 1))) {
            for (int v = prev + 1; v < i; ++v) r += binom(n - v, remaining - 1);
            prev = i;
            --remaining;
        }
    }
    return r;
}

}  // namespace detail

// Ordered canonical basis of Lambda^{p,q} for coframe dimension n.
inline std::vector<Monomial> basis(int n, int p, int q) {
    if (n < 1 || n > kMaxDim) throw DomainError("dimension n must be in 1..5");
    if (p < 0 || q < 0 || p > n || q > n) throw DomainError("bidegree out of range");
    std::vector<std::uint32_t> hs, as;
    if (p == 0)
        hs.push_back(0);
    else
        detail::enumerate_subsets(n, p, hs);
    if (q == 0)
        as.push_back(0);
    else
        detail::enumerate_subsets(n, q, as);
    std::vector<Monomial> out;
    out.reserve(hs.size() * as.size());
    for (auto h : hs)
        for (auto a : as) out.push_back(Monomial{h, a});
    return out;
}

inline std::size_t space_dim(int n, int p, int q) {
    if (p < 0 || q < 0 || p > n || q > n) return 0;
    return static_cast<std::size_t>(binom(n, p) * binom(n, q));
}

// Position of a monomial in basis(n, p, q).
inline std::size_t basis_index(const Monomial& m, int n) {
    const int p = m.holo_degree();
    const int q = m.anti_degree();
    return static_cast<std::size_t>(detail::subset_rank(m.holo, n, p) * binom(n, q) +
                                    detail::subset_rank(m.anti, n, q));
}

}  // namespace aeppli
