// Exact scalars: arbitrary-precision rationals and Gaussian rationals Q(i).
//
// Every rank, kernel and quotient downstream is computed over these types;
// no floating point enters a dimension computation.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <string>

#include "aeppli/errors.hpp"

namespace aeppli {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_to_string(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "a/b" and bare integers "a".
inline Rat rat_from_string(const std::string& s) {
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw ParseError("rational with zero denominator: " + s);
        return Rat(num, den);
    } catch (const std::exception& e) {
        throw ParseError("bad rational '" + s + "': " + e.what());
    }
}

// a + b*i with exact rational a, b.
struct GaussRat {
    Rat re{0};
    Rat im{0};

    GaussRat() = default;
    GaussRat(int v) : re(v) {}  // NOLINT(google-explicit-constructor)
    GaussRat(Rat r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat unit_i() { return GaussRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat conj() const { return GaussRat(re, -im); }
    Rat norm2() const { return re * re + im * im; }

    GaussRat operator-() const { return GaussRat(-re, -im); }

    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        const Rat r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o) {
        const Rat n2 = o.norm2();
        if (n2 == 0) throw DomainError("division by zero Gaussian rational");
        const Rat r = (re * o.re + im * o.im) / n2;
        im = (im * o.re - re * o.im) / n2;
        re = r;
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

inline std::string to_string(const GaussRat& z) {
    if (z.im == 0) return rat_to_string(z.re);
    if (z.re == 0) return rat_to_string(z.im) + "*i";
    return rat_to_string(z.re) + (z.im > 0 ? "+" : "") + rat_to_string(z.im) + "*i";
}

inline std::ostream& operator<<(std::ostream& os, const GaussRat& z) {
    return os << to_string(z);
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

// Scalar hooks used by the generic linear algebra.
template <typename T>
struct ScalarOps;

template <>
struct ScalarOps<Rat> {
    static bool is_zero(const Rat& x) { return x == 0; }
    static Rat conj(const Rat& x) { return x; }
};

template <>
struct ScalarOps<GaussRat> {
    static bool is_zero(const GaussRat& x) { return x.is_zero(); }
    static GaussRat conj(const GaussRat& x) { return x.conj(); }
};

template <>
struct ScalarOps<double> {
    static bool is_zero(double x) { return x == 0.0; }
    static double conj(double x) { return x; }
};

}  // namespace aeppli
