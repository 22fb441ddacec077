#pragma once

/**
 * @file adjoint.hpp
 * @brief Complex split A = U + Vj and the complex-adjoint embedding.
 */

#include "consim/matrix.hpp"

namespace consim {

struct ComplexSplit {
    Mat<CRat> first;   // U
    Mat<CRat> second;  // V
};

inline ComplexSplit split_complex(const Mat<QRat>& m) {
    Mat<CRat> u(m.rows(), m.cols()), v(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            u(i, j) = m(i, j).u();
            v(i, j) = m(i, j).v();
        }
    return {std::move(u), std::move(v)};
}

inline Mat<QRat> join_complex(const Mat<CRat>& u, const Mat<CRat>& v) {
    if (u.rows() != v.rows() || u.cols() != v.cols()) throw ShapeMismatch("join_complex");
    Mat<QRat> m(u.rows(), u.cols());
    for (std::size_t i = 0; i < u.rows(); ++i)
        for (std::size_t j = 0; j < u.cols(); ++j)
            m(i, j) = QRat::from_split(u(i, j), v(i, j));
    return m;
}

namespace detail {
inline Mat<CRat> block2x2(const Mat<CRat>& a, const Mat<CRat>& b, const Mat<CRat>& c,
                          const Mat<CRat>& d) {
    const std::size_t m = a.rows(), n = a.cols();
    Mat<CRat> r(2 * m, 2 * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            r(i, j) = a(i, j);
            r(i, n + j) = b(i, j);
            r(m + i, j) = c(i, j);
            r(m + i, n + j) = d(i, j);
        }
    return r;
}
}  // namespace detail

// chi(A) = [[U, V], [-conj V, conj U]]; additive and multiplicative.
inline Mat<CRat> complex_adjoint(const Mat<QRat>& m) {
    auto [u, v] = split_complex(m);
    return detail::block2x2(u, v, -conj(v), conj(u));
}

// Matrix of x -> m x on C^{2n}, where x in H^n is coordinatized entrywise as
// x_c = w_c + j w_{n+c}.  Right multiplication by complex scalars is then
// plain scalar multiplication, which is what Jordan chain computations need.
// Similar to chi(m) via diag(I, -I).
inline Mat<CRat> left_action_matrix(const Mat<QRat>& m) {
    auto [u, v] = split_complex(m);
    return detail::block2x2(u, -v, conj(v), conj(u));
}

// Fold a coordinate vector of the left-action model back to H^n.
inline std::vector<QRat> fold_left_action_vector(const std::vector<CRat>& w) {
    const std::size_t n = w.size() / 2;
    std::vector<QRat> x(n);
    for (std::size_t c = 0; c < n; ++c)
        // w_c + j w_{n+c} = w_c + conj(w_{n+c}) j
        x[c] = QRat::from_split(w[c], w[n + c].conj());
    return x;
}

}  // namespace consim
