#pragma once

/**
 * @file charpoly.hpp
 * @brief Polynomials over Q(i) and exact characteristic polynomials.
 */

#include <string>
#include <vector>

#include "consim/matrix.hpp"

namespace consim {

// Coefficients in ascending degree; p[k] multiplies x^k.
using Poly = std::vector<CRat>;

inline std::size_t poly_degree(const Poly& p) {
    std::size_t d = p.size();
    while (d > 1 && p[d - 1].is_zero()) --d;
    return d - 1;
}

inline CRat poly_eval(const Poly& p, const CRat& x) {
    CRat acc;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Exact synthetic division by (x - root); the remainder must vanish.
inline Poly poly_deflate(const Poly& p, const CRat& root) {
    const std::size_t d = poly_degree(p);
    Poly q(d);
    CRat carry;
    for (std::size_t k = d; k-- > 0;) {
        carry = p[k + 1] + carry * root;
        q[k] = carry;
    }
    CRat rem = p[0] + carry * root;
    if (!rem.is_zero()) throw Error("poly_deflate: not a root");
    return q;
}

// Faddeev-LeVerrier; exact over Q(i), monic result.
inline Poly char_poly(const Mat<CRat>& m) {
    if (m.rows() != m.cols()) throw NotSquare();
    const std::size_t n = m.rows();
    Poly p(n + 1);
    p[n] = CRat(1);
    Mat<CRat> acc = Mat<CRat>::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        acc = m * acc;
        CRat tr;
        for (std::size_t i = 0; i < n; ++i) tr += acc(i, i);
        CRat ck = -(tr * CRat(Rat(1, static_cast<long>(k))));
        p[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += ck;
    }
    return p;
}

inline std::string poly_to_string(const Poly& p) {
    std::string s;
    for (std::size_t k = poly_degree(p) + 1; k-- > 0;) {
        if (p[k].is_zero() && poly_degree(p) > 0) continue;
        if (!s.empty()) s += " + ";
        s += "(" + to_string(p[k]) + ")";
        if (k > 0) s += "*x^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

}  // namespace consim
