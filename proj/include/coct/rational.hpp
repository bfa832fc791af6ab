#ifndef COCT_RATIONAL_HPP
#define COCT_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace coct {

// Exact scalar ring: arbitrary-precision rationals, always canonical
// (lowest terms, positive denominator). GMP keeps the invariant for us.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Rational rational_from_string(const std::string& s) {
    try {
        Rational r(s);
        return r;
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

// Canonical "p/q" form, "p" when q == 1.
inline std::string to_fraction_string(const Rational& r) { return r.str(); }

// Gaussian rational, the scalar field after complexification.
struct CRational {
    Rational re;
    Rational im;

    CRational() = default;
    CRational(Rational r) : re(std::move(r)) {}
    CRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    CRational(long r) : re(r) {}
    CRational(long r, long i) : re(r), im(i) {}

    static CRational i_unit() { return CRational(0, 1); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    CRational conj() const { return {re, -im}; }

    friend CRational operator+(const CRational& a, const CRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend CRational operator-(const CRational& a, const CRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend CRational operator-(const CRational& a) { return {-a.re, -a.im}; }
    friend CRational operator*(const CRational& a, const CRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CRational operator/(const CRational& a, const CRational& b) {
        Rational d = b.re * b.re + b.im * b.im;
        if (d == 0) throw std::domain_error("division by zero CRational");
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    CRational& operator+=(const CRational& b) { re += b.re; im += b.im; return *this; }
    CRational& operator-=(const CRational& b) { re -= b.re; im -= b.im; return *this; }
    CRational& operator*=(const CRational& b) { *this = *this * b; return *this; }

    friend bool operator==(const CRational& a, const CRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const CRational& a, const CRational& b) { return !(a == b); }

    std::string str() const {
        return to_fraction_string(re) + (im >= 0 ? "+" : "") + to_fraction_string(im) + "i";
    }
};

}  // namespace coct

#endif
