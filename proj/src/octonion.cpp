#include "coct/octonion.hpp"

#include <sstream>
#include <stdexcept>

namespace coct {

namespace {

// Signed-index multiplication table, entry = sign * (k+1) for e_i e_j = sign e_k.
// Transcribed from the fixed table; verified against the Cayley-Dickson
// product at startup below.
constexpr int kTable[8][8] = {
    {+1, +2, +3, +4, +5, +6, +7, +8},
    {+2, -1, +4, -3, +6, -5, -8, +7},
    {+3, -4, -1, +2, +7, +8, -5, -6},
    {+4, +3, -2, -1, +8, -7, +6, -5},
    {+5, -6, -7, -8, -1, +2, +3, +4},
    {+6, +5, -8, +7, -2, -1, -4, +3},
    {+7, +8, +5, -6, -3, +4, -1, -2},
    {+8, -7, +6, +5, -4, -3, +2, -1},
};

bool run_table_self_check() {
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            Octonion cd = Octonion::unit(i) * Octonion::unit(j);
            auto [sign, k] = basis_product(i, j);
            Octonion expect = sign > 0 ? Octonion::unit(k) : -Octonion::unit(k);
            if (cd != expect)
                throw std::logic_error("octonion multiplication table disagrees with "
                                       "Cayley-Dickson product at (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    return true;
}

const bool kTableChecked = run_table_self_check();

}  // namespace

// ---------------------------------------------------------------- Quaternion

bool Quaternion::is_zero() const {
    return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0;
}

Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]};
}

Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]};
}

Quaternion operator-(const Quaternion& a) { return {-a.c[0], -a.c[1], -a.c[2], -a.c[3]}; }

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    const auto& p = a.c;
    const auto& q = b.c;
    return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
            p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
            p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
            p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

// ------------------------------------------------------------------ Octonion

Octonion Octonion::unit(int j) {
    if (j < 0 || j > 7) throw std::out_of_range("octonion unit index");
    Octonion o;
    o.c[j] = 1;
    return o;
}

Octonion Octonion::from_int(long v) {
    Octonion o;
    o.c[0] = v;
    return o;
}

bool Octonion::is_zero() const {
    for (const auto& v : c)
        if (v != 0) return false;
    return true;
}

std::pair<Quaternion, Quaternion> Octonion::to_quaternion_pair() const {
    return {Quaternion{c[0], c[1], c[2], c[3]}, Quaternion{c[4], c[5], c[6], c[7]}};
}

Octonion Octonion::from_quaternion_pair(const Quaternion& a, const Quaternion& b) {
    Octonion o;
    for (int j = 0; j < 4; ++j) {
        o.c[j] = a.c[j];
        o.c[4 + j] = b.c[j];
    }
    return o;
}

Octonion Octonion::conj() const {
    Octonion o;
    o.c[0] = c[0];
    for (int j = 1; j < 8; ++j) o.c[j] = -c[j];
    return o;
}

Octonion Octonion::vec() const {
    Octonion o = *this;
    o.c[0] = 0;
    return o;
}

Rational Octonion::norm_sq() const {
    Rational s = 0;
    for (const auto& v : c) s += v * v;
    return s;
}

Octonion Octonion::inverse() const {
    Rational n = norm_sq();
    if (n == 0) throw std::domain_error("octonion inverse of zero");
    Octonion o = conj();
    for (auto& v : o.c) v /= n;
    return o;
}

Octonion operator+(const Octonion& a, const Octonion& b) {
    Octonion o;
    for (int j = 0; j < 8; ++j) o.c[j] = a.c[j] + b.c[j];
    return o;
}

Octonion operator-(const Octonion& a, const Octonion& b) {
    Octonion o;
    for (int j = 0; j < 8; ++j) o.c[j] = a.c[j] - b.c[j];
    return o;
}

Octonion operator-(const Octonion& a) {
    Octonion o;
    for (int j = 0; j < 8; ++j) o.c[j] = -a.c[j];
    return o;
}

Octonion operator*(const Octonion& x, const Octonion& y) {
    auto [a, b] = x.to_quaternion_pair();
    auto [c, d] = y.to_quaternion_pair();
    // xy = (ac - conj(d) b) + (b conj(c) + d a) e4
    return Octonion::from_quaternion_pair(a * c - d.conj() * b, b * c.conj() + d * a);
}

Octonion operator*(const Rational& s, const Octonion& a) {
    Octonion o;
    for (int j = 0; j < 8; ++j) o.c[j] = s * a.c[j];
    return o;
}

std::pair<int, int> basis_product(int i, int j) {
    if (i < 0 || i > 7 || j < 0 || j > 7) throw std::out_of_range("basis index");
    int v = kTable[i][j];
    return {v > 0 ? 1 : -1, (v > 0 ? v : -v) - 1};
}

Octonion oct_mul_table(const Octonion& x, const Octonion& y) {
    Octonion out;
    for (int i = 0; i < 8; ++i) {
        if (x.c[i] == 0) continue;
        for (int j = 0; j < 8; ++j) {
            if (y.c[j] == 0) continue;
            auto [sign, k] = basis_product(i, j);
            Rational term = x.c[i] * y.c[j];
            if (sign > 0)
                out.c[k] += term;
            else
                out.c[k] -= term;
        }
    }
    return out;
}

Rational inner(const Octonion& x, const Octonion& y) {
    Rational s = 0;
    for (int j = 0; j < 8; ++j) s += x.c[j] * y.c[j];
    return s;
}

Octonion unit_mul_left(int i, const Octonion& x) {
    Octonion out;
    for (int j = 0; j < 8; ++j) {
        auto [sign, k] = basis_product(i, j);
        out.c[k] = sign > 0 ? x.c[j] : -x.c[j];
    }
    return out;
}

std::string Octonion::str() const {
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j < 8; ++j) {
        if (c[j] == 0) continue;
        if (!first) os << " + ";
        os << to_fraction_string(c[j]);
        if (j > 0) os << "*e" << j;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

// --------------------------------------------------------- ComplexOctonion

ComplexOctonion::ComplexOctonion(const CRational& s) {
    x.c[0] = s.re;
    y.c[0] = s.im;
}

ComplexOctonion ComplexOctonion::vec() const { return {x.vec(), y.vec()}; }

ComplexOctonion operator+(const ComplexOctonion& a, const ComplexOctonion& b) {
    return {a.x + b.x, a.y + b.y};
}

ComplexOctonion operator-(const ComplexOctonion& a, const ComplexOctonion& b) {
    return {a.x - b.x, a.y - b.y};
}

ComplexOctonion operator-(const ComplexOctonion& a) { return {-a.x, -a.y}; }

ComplexOctonion operator*(const ComplexOctonion& a, const ComplexOctonion& b) {
    return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x};
}

ComplexOctonion operator*(const CRational& s, const ComplexOctonion& a) {
    return {s.re * a.x - s.im * a.y, s.re * a.y + s.im * a.x};
}

CRational complex_inner(const ComplexOctonion& z, const ComplexOctonion& w) {
    ComplexOctonion p = z * w.dagger();
    return p.sc();
}

CRational z_zbar_product(const ComplexOctonion& z) {
    ComplexOctonion zb = z.bar();
    ComplexOctonion left = z * zb;
    ComplexOctonion right = zb * z;
    if (left != right)
        throw std::logic_error("z zbar != zbar z; multiplication is inconsistent");
    if (!left.vec().is_zero())
        throw std::logic_error("z zbar has a nonvanishing vector part");
    return left.sc();
}

ComplexOctonion unit_mul_left(int j, const ComplexOctonion& z) {
    return {unit_mul_left(j, z.x), unit_mul_left(j, z.y)};
}

std::string ComplexOctonion::str() const {
    return "(" + x.str() + ") + i(" + y.str() + ")";
}

}  // namespace coct
