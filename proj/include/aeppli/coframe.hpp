// A model complex manifold: dimension n plus structure constants defining d
// on the degree-1 coframe,
//
//   d phi^k = sum c phi^i^phi^j + sum c phi^i^phib^j + sum c phib^i^phib^j.
//
// Integrable structures have an empty (0,2) list; that and d^2 = 0 are
// enforced when operators are built, not here.

#pragma once

#include <string>
#include <vector>

#include "aeppli/errors.hpp"
#include "aeppli/form.hpp"
#include "aeppli/monomial.hpp"
#include "aeppli/scalar.hpp"

namespace aeppli {

enum class TermType { T20, T11, T02 };

inline std::string term_type_tag(TermType t) {
    switch (t) {
        case TermType::T20: return "20";
        case TermType::T11: return "11";
        case TermType::T02: return "02";
    }
    throw InternalCheckError("term type");
}

struct StructureTerm {
    int target = 0;   // k in d phi^k
    TermType type = TermType::T20;
    int i = 0;
    int j = 0;
    GaussRat coeff;
};

struct ComplexCoframe {
    int n = 0;
    std::vector<StructureTerm> structure;

    void validate() const {
        if (n < 1 || n > kMaxDim) throw DomainError("dimension n must be in 1..5");
        std::vector<std::string> seen;
        for (const auto& t : structure) {
            if (t.target < 1 || t.target > n || t.i < 1 || t.i > n || t.j < 1 || t.j > n)
                throw DomainError("structure term index out of range");
            if (t.type != TermType::T11 && t.i >= t.j)
                throw DomainError("(2,0)/(0,2) structure terms need i < j");
            const std::string key = std::to_string(t.target) + ":" + term_type_tag(t.type) + ":" +
                                    std::to_string(t.i) + "," + std::to_string(t.j);
            for (const auto& s : seen)
                if (s == key) throw DomainError("duplicate structure monomial for target " + std::to_string(t.target));
            seen.push_back(key);
            if (t.coeff.is_zero()) throw DomainError("zero structure coefficient");
        }
    }

    bool has_02_terms() const {
        for (const auto& t : structure)
            if (t.type == TermType::T02) return true;
        return false;
    }

    // d phi^k as a degree-2 total form, straight from the structure list.
    TotalForm d_generator(int k) const {
        TotalForm out(n, 2);
        BidegreeForm f20(n, 2, 0), f11(n, 1, 1), f02(n, 0, 2);
        for (const auto& t : structure) {
            if (t.target != k) continue;
            switch (t.type) {
                case TermType::T20:
                    f20.add_term(Monomial::from_indices({t.i, t.j}, {}), t.coeff);
                    break;
                case TermType::T11:
                    f11.add_term(Monomial::from_indices({t.i}, {t.j}), t.coeff);
                    break;
                case TermType::T02:
                    f02.add_term(Monomial::from_indices({}, {t.i, t.j}), t.coeff);
                    break;
            }
        }
        out.set_block(std::move(f20));
        out.set_block(std::move(f11));
        out.set_block(std::move(f02));
        return out;
    }
};

// Ready-made coframes used across tests; the CLI catalog wraps these.
inline ComplexCoframe torus_coframe(int n) {
    ComplexCoframe c;
    c.n = n;
    c.validate();
    return c;
}

inline ComplexCoframe iwasawa_coframe() {
    ComplexCoframe c;
    c.n = 3;
    c.structure.push_back({3, TermType::T20, 1, 2, GaussRat(-1)});
    c.validate();
    return c;
}

inline ComplexCoframe kodaira_thurston_coframe() {
    ComplexCoframe c;
    c.n = 2;
    c.structure.push_back({2, TermType::T11, 1, 1, GaussRat(1)});
    c.validate();
    return c;
}

}  // namespace aeppli
