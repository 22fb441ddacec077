#pragma once

/**
 * @file realify.hpp
 * @brief Realification oracle for R-linear quaternion-matrix equations.
 *
 * Any R-linear action L on m x n quaternion matrices expands to a
 * 4mn x 4mn rational system.  Basis order is (1, i, j, k) per entry,
 * entries in row-major order, so results are bit-reproducible.
 */

#include <functional>
#include <vector>

#include "consim/elimination.hpp"

namespace consim {

struct RealifiedSolution {
    bool consistent = false;
    Mat<QRat> particular;
    std::vector<Mat<QRat>> basis;  // real basis of the homogeneous space
};

namespace detail {

inline std::vector<Rat> flatten4(const Mat<QRat>& m) {
    std::vector<Rat> v;
    v.reserve(4 * m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const QRat& q = m(i, j);
            v.push_back(q.a);
            v.push_back(q.b);
            v.push_back(q.c);
            v.push_back(q.d);
        }
    return v;
}

inline Mat<QRat> unflatten4(const std::vector<Rat>& v, std::size_t rows, std::size_t cols) {
    Mat<QRat> m(rows, cols);
    std::size_t t = 0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = QRat(v[t], v[t + 1], v[t + 2], v[t + 3]);
            t += 4;
        }
    return m;
}

}  // namespace detail

// Solve L(X) = rhs for an R-linear L; the unknown has the shape of rhs.
inline RealifiedSolution realify_solve(
    const std::function<Mat<QRat>(const Mat<QRat>&)>& action, const Mat<QRat>& rhs) {
    const std::size_t rows = rhs.rows(), cols = rhs.cols();
    const std::size_t dim = 4 * rows * cols;
    Mat<Rat> sys(dim, dim);
    std::size_t colidx = 0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (int comp = 0; comp < 4; ++comp) {
                Mat<QRat> e(rows, cols);
                Rat one(1);
                e(i, j) = QRat(comp == 0 ? one : Rat(0), comp == 1 ? one : Rat(0),
                               comp == 2 ? one : Rat(0), comp == 3 ? one : Rat(0));
                auto img = detail::flatten4(action(e));
                for (std::size_t r = 0; r < dim; ++r) sys(r, colidx) = img[r];
                ++colidx;
            }
    auto sol = solve_linear(sys, detail::flatten4(rhs));
    RealifiedSolution out;
    out.consistent = sol.consistent;
    if (!sol.consistent) return out;
    out.particular = detail::unflatten4(sol.particular, rows, cols);
    for (const auto& v : sol.nullspace)
        out.basis.push_back(detail::unflatten4(v, rows, cols));
    return out;
}

}  // namespace consim
