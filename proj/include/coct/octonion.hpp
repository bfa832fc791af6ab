#ifndef COCT_OCTONION_HPP
#define COCT_OCTONION_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>

#include "coct/rational.hpp"

namespace coct {

// Quaternion over the exact rationals, basis {1, e1, e2, e3} with
// e1 e2 = e3, e2 e3 = e1, e3 e1 = e2.
struct Quaternion {
    std::array<Rational, 4> c{};

    Quaternion() = default;
    explicit Quaternion(std::array<Rational, 4> v) : c(std::move(v)) {}
    Quaternion(Rational c0, Rational c1, Rational c2, Rational c3)
        : c{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static Quaternion zero() { return {}; }
    static Quaternion one() { return {Rational(1), Rational(0), Rational(0), Rational(0)}; }

    bool is_zero() const;
    Quaternion conj() const { return {c[0], -c[1], -c[2], -c[3]}; }
    Rational sc() const { return c[0]; }

    friend Quaternion operator+(const Quaternion& a, const Quaternion& b);
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b);
    friend Quaternion operator-(const Quaternion& a);
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
    friend bool operator==(const Quaternion& a, const Quaternion& b) { return a.c == b.c; }
    friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }
};

// Octonion over the exact rationals, components of 1, e1, ..., e7.
// Products follow the fixed multiplication table; arithmetic runs through
// the quaternionic form x = a + b e4 (a = x0+x1e1+x2e2+x3e3,
// b = x4+x5e1+x6e2+x7e3) and the Cayley-Dickson product
//   xy = (ac - conj(d) b) + (b conj(c) + d a) e4.
struct Octonion {
    std::array<Rational, 8> c{};

    Octonion() = default;
    explicit Octonion(std::array<Rational, 8> v) : c(std::move(v)) {}

    static Octonion zero() { return {}; }
    static Octonion one() { return unit(0); }
    static Octonion unit(int j);
    static Octonion from_int(long v);

    bool is_zero() const;

    // x = a + b e4 round trip.
    std::pair<Quaternion, Quaternion> to_quaternion_pair() const;
    static Octonion from_quaternion_pair(const Quaternion& a, const Quaternion& b);

    Octonion conj() const;
    Rational sc() const { return c[0]; }
    Octonion vec() const;
    Rational norm_sq() const;
    Octonion inverse() const;

    friend Octonion operator+(const Octonion& a, const Octonion& b);
    friend Octonion operator-(const Octonion& a, const Octonion& b);
    friend Octonion operator-(const Octonion& a);
    friend Octonion operator*(const Octonion& a, const Octonion& b);
    friend Octonion operator*(const Rational& s, const Octonion& a);
    friend bool operator==(const Octonion& a, const Octonion& b) { return a.c == b.c; }
    friend bool operator!=(const Octonion& a, const Octonion& b) { return !(a == b); }

    std::string str() const;
};

// e_i e_j = sign * e_k from the stored table. The table is transcribed
// once and cross-checked at startup against the Cayley-Dickson product;
// a mismatch throws std::logic_error.
std::pair<int, int> basis_product(int i, int j);

// Componentwise table-driven product: bilinear expansion over all 64
// basis pairs. Independent route from operator* (Cayley-Dickson); the
// two are asserted equal at startup.
Octonion oct_mul_table(const Octonion& x, const Octonion& y);

Rational inner(const Octonion& x, const Octonion& y);

// e_i * x as a signed component permutation, no scalar multiplies.
Octonion unit_mul_left(int i, const Octonion& x);

// Element of O_C = O (x) C, stored as z = x + i y.
struct ComplexOctonion {
    Octonion x;  // RE(z)
    Octonion y;  // IM(z)

    ComplexOctonion() = default;
    ComplexOctonion(Octonion re, Octonion im) : x(std::move(re)), y(std::move(im)) {}
    explicit ComplexOctonion(Octonion re) : x(std::move(re)) {}
    explicit ComplexOctonion(const CRational& s);

    static ComplexOctonion zero() { return {}; }
    static ComplexOctonion one() { return ComplexOctonion(Octonion::one()); }
    static ComplexOctonion unit(int j) { return ComplexOctonion(Octonion::unit(j)); }

    bool is_zero() const { return x.is_zero() && y.is_zero(); }

    CRational sc() const { return {x.c[0], y.c[0]}; }
    ComplexOctonion vec() const;
    CRational component(int j) const { return {x.c[j], y.c[j]}; }

    // The three involutions: bar flips the vector part, star conjugates
    // the complex unit, dagger composes both.
    ComplexOctonion bar() const { return {x.conj(), y.conj()}; }
    ComplexOctonion star() const { return {x, -y}; }
    ComplexOctonion dagger() const { return {x.conj(), -y.conj()}; }

    friend ComplexOctonion operator+(const ComplexOctonion& a, const ComplexOctonion& b);
    friend ComplexOctonion operator-(const ComplexOctonion& a, const ComplexOctonion& b);
    friend ComplexOctonion operator-(const ComplexOctonion& a);
    // (x+iy)(u+iv) = (xu - yv) + i(xv + yu)
    friend ComplexOctonion operator*(const ComplexOctonion& a, const ComplexOctonion& b);
    friend ComplexOctonion operator*(const CRational& s, const ComplexOctonion& a);
    friend bool operator==(const ComplexOctonion& a, const ComplexOctonion& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const ComplexOctonion& a, const ComplexOctonion& b) {
        return !(a == b);
    }

    std::string str() const;
};

// <z,w>_C = Sc(z w^+) = <x,u> + <y,v> + i(<y,u> - <x,v>).
CRational complex_inner(const ComplexOctonion& z, const ComplexOctonion& w);

// z zbar = zbar z = |x|^2 - |y|^2 + 2i<x,y>. Asserts the product is
// scalar and that the left and right products agree.
CRational z_zbar_product(const ComplexOctonion& z);

// i * e_j * z acting by the complexification rule, cheap permutation form.
ComplexOctonion unit_mul_left(int j, const ComplexOctonion& z);

}  // namespace coct

#endif
