#pragma once

/**
 * @file quaternion.hpp
 * @brief Rational quaternions h = a + bi + cj + dk and the sigma maps.
 *
 * The complex split h = u + vj with u = a + bi, v = c + di is used
 * throughout; note jz = conj(z)j for complex z, so the split interacts
 * with multiplication noncommutatively.
 */

#include "consim/gaussian.hpp"

namespace consim {

// The two automorphisms every involutive automorphism of H reduces to:
// conjugation by 1 (identity) and conjugation by i.
enum class Sigma { One, I };

// sigma^2 as a sign: +1 for One, -1 for I.
inline int sigma_square_sign(Sigma s) { return s == Sigma::One ? 1 : -1; }

struct QRat {
    Rat a, b, c, d;  // coefficients of 1, i, j, k

    QRat() = default;
    QRat(int r) : a(r) {}
    QRat(long r) : a(r) {}
    QRat(Rat r) : a(std::move(r)) {}
    QRat(Rat a_, Rat b_, Rat c_, Rat d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
    QRat(const CRat& z) : a(z.re), b(z.im) {}

    static QRat i() { return QRat(Rat(0), Rat(1), Rat(0), Rat(0)); }
    static QRat j() { return QRat(Rat(0), Rat(0), Rat(1), Rat(0)); }
    static QRat k() { return QRat(Rat(0), Rat(0), Rat(0), Rat(1)); }

    // h = u + vj
    static QRat from_split(const CRat& u, const CRat& v) {
        return QRat(u.re, u.im, v.re, v.im);
    }
    CRat u() const { return CRat(a, b); }
    CRat v() const { return CRat(c, d); }

    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
    bool is_real() const { return b.is_zero() && c.is_zero() && d.is_zero(); }
    bool is_complex() const { return c.is_zero() && d.is_zero(); }
    bool is_pure() const { return a.is_zero(); }

    QRat conj() const { return QRat(a, -b, -c, -d); }
    Rat norm2() const { return a * a + b * b + c * c + d * d; }

    QRat operator-() const { return QRat(-a, -b, -c, -d); }
    QRat operator+(const QRat& o) const { return QRat(a + o.a, b + o.b, c + o.c, d + o.d); }
    QRat operator-(const QRat& o) const { return QRat(a - o.a, b - o.b, c - o.c, d - o.d); }

    // Hamilton product; noncommutative.
    QRat operator*(const QRat& o) const {
        return QRat(a * o.a - b * o.b - c * o.c - d * o.d,
                    a * o.b + b * o.a + c * o.d - d * o.c,
                    a * o.c - b * o.d + c * o.a + d * o.b,
                    a * o.d + b * o.c - c * o.b + d * o.a);
    }

    QRat inverse() const {
        if (is_zero()) throw DivisionByZero();
        Rat n = norm2();
        return QRat(a / n, -b / n, -c / n, -d / n);
    }

    QRat& operator+=(const QRat& o) { a += o.a; b += o.b; c += o.c; d += o.d; return *this; }
    QRat& operator-=(const QRat& o) { return *this = *this - o; }
    QRat& operator*=(const QRat& o) { return *this = *this * o; }

    bool operator==(const QRat& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    bool operator!=(const QRat& o) const { return !(*this == o); }
};

inline QRat operator*(const Rat& s, const QRat& q) {
    return QRat(s * q.a, s * q.b, s * q.c, s * q.d);
}

// h^sigma: identity for One; for I, u + vj -> u - vj, i.e. -ihi.
inline QRat apply_hat(const QRat& x, Sigma sigma) {
    if (sigma == Sigma::One) return x;
    return QRat(x.a, x.b, -x.c, -x.d);
}

// As a quaternion: component of x along the complex number z embedded in H.
inline QRat to_quaternion(const CRat& z) { return QRat(z); }

// Quaternion literal, e.g. `3/2+1i-2/5j`; `0` for zero.  Re-parses exactly.
inline std::string to_string(const QRat& q) {
    std::string s;
    const Rat* comps[4] = {&q.a, &q.b, &q.c, &q.d};
    const char* units[4] = {"", "i", "j", "k"};
    for (int t = 0; t < 4; ++t) {
        if (comps[t]->is_zero()) continue;
        if (!s.empty() && comps[t]->sign() > 0) s += "+";
        s += to_string(*comps[t]);
        s += units[t];
    }
    return s.empty() ? "0" : s;
}

inline std::string to_string(const CRat& z) { return to_string(QRat(z)); }

// Narrowing: only valid for complex-classified quaternions.
inline CRat as_complex(const QRat& q) {
    if (!q.is_complex()) throw Error("quaternion is not complex");
    return q.u();
}

}  // namespace consim
