// Deterministic random scalars and forms for property tests (xorshift, so
// sequences are identical on every platform).

#pragma once

#include <cstdint>

#include "aeppli/form.hpp"
#include "aeppli/monomial.hpp"
#include "aeppli/scalar.hpp"

struct RandomGen {
    std::uint64_t state;

    explicit RandomGen(std::uint64_t seed) : state(seed * 2654435769u + 1) {}

    std::uint64_t next_u64() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }

    int small_int() { return static_cast<int>(next_u64() % 9) - 4; }  // -4..4

    aeppli::Rat rat() {
        return aeppli::Rat(small_int(), 1 + static_cast<int>(next_u64() % 4));
    }

    aeppli::GaussRat gauss_rat() { return aeppli::GaussRat(rat(), rat()); }

    aeppli::BidegreeForm form(int n, int p, int q, int sparsity = 2) {
        aeppli::BidegreeForm f(n, p, q);
        for (const auto& m : aeppli::basis(n, p, q)) {
            if (next_u64() % sparsity == 0) f.add_term(m, gauss_rat());
        }
        return f;
    }

    // conjugation-invariant (p,p)-form
    aeppli::BidegreeForm real_form(int n, int p) {
        auto f = form(n, p, p);
        auto g = conjugate(f);
        f += g;
        return f;
    }
};
