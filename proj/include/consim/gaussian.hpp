#pragma once

/**
 * @file gaussian.hpp
 * @brief Gaussian rationals: complex numbers with components in Q.
 */

#include "consim/rational.hpp"

namespace consim {

struct CRat {
    Rat re, im;

    CRat() = default;
    CRat(int r) : re(r) {}
    CRat(long r) : re(r) {}
    CRat(Rat r) : re(std::move(r)) {}
    CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static CRat i() { return CRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_one() const { return re.is_one() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    CRat conj() const { return CRat(re, -im); }
    Rat norm2() const { return re * re + im * im; }

    CRat operator-() const { return CRat(-re, -im); }
    CRat operator+(const CRat& o) const { return CRat(re + o.re, im + o.im); }
    CRat operator-(const CRat& o) const { return CRat(re - o.re, im - o.im); }
    CRat operator*(const CRat& o) const {
        return CRat(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    CRat inverse() const {
        if (is_zero()) throw DivisionByZero();
        Rat n = norm2();
        return CRat(re / n, -im / n);
    }
    CRat operator/(const CRat& o) const { return *this * o.inverse(); }

    CRat& operator+=(const CRat& o) { re += o.re; im += o.im; return *this; }
    CRat& operator-=(const CRat& o) { re -= o.re; im -= o.im; return *this; }
    CRat& operator*=(const CRat& o) { return *this = *this * o; }

    bool operator==(const CRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const CRat& o) const { return !(*this == o); }
};

// Lexicographic (re, im) order; used for deterministic sets and sorting,
// not as an algebraic order.
struct CRatLess {
    bool operator()(const CRat& a, const CRat& b) const {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }
};

}  // namespace consim
