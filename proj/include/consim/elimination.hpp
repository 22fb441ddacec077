#pragma once

/**
 * @file elimination.hpp
 * @brief Gaussian elimination over a division ring.
 *
 * Row operations act on the left; solution spaces of m x = b are right
 * vector spaces (right scalar coefficients).  Pivoting is positional —
 * first nonzero entry in column order — so results are deterministic.
 */

#include <vector>

#include "consim/matrix.hpp"

namespace consim {

template <class T>
struct RowReduction {
    std::size_t rank = 0;
    Mat<T> rref;
    Mat<T> transform;                     // transform * input == rref
    std::vector<std::size_t> pivot_cols;  // increasing
    std::vector<std::vector<T>> nullspace;  // right-coefficient basis of {x : m x = 0}
};

template <class T>
RowReduction<T> row_reduce(const Mat<T>& m) {
    RowReduction<T> out;
    out.rref = m;
    out.transform = Mat<T>::identity(m.rows());
    Mat<T>& a = out.rref;
    Mat<T>& t = out.transform;
    const std::size_t rows = m.rows(), cols = m.cols();

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(p, j));
            for (std::size_t j = 0; j < rows; ++j) std::swap(t(r, j), t(p, j));
        }
        T inv = a(r, c).inverse();
        for (std::size_t j = 0; j < cols; ++j) a(r, j) = inv * a(r, j);
        for (std::size_t j = 0; j < rows; ++j) t(r, j) = inv * t(r, j);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            T f = a(i, c);
            for (std::size_t j = 0; j < cols; ++j) a(i, j) = a(i, j) - f * a(r, j);
            for (std::size_t j = 0; j < rows; ++j) t(i, j) = t(i, j) - f * t(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;

    // One basis vector per free column: unit there, pivot entries read off rref.
    std::vector<bool> is_pivot(cols, false);
    for (auto c : out.pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> x(cols);
        x[f] = T(1);
        for (std::size_t pi = 0; pi < out.pivot_cols.size(); ++pi)
            x[out.pivot_cols[pi]] = -a(pi, f);
        out.nullspace.push_back(std::move(x));
    }
    return out;
}

template <class T>
std::size_t rank(const Mat<T>& m) {
    return row_reduce(m).rank;
}

template <class T>
struct LinearSolution {
    bool consistent = false;
    std::vector<T> particular;               // free variables set to zero
    std::vector<std::vector<T>> nullspace;   // right-coefficient basis
};

// Solve m x = rhs exactly.
template <class T>
LinearSolution<T> solve_linear(const Mat<T>& m, const std::vector<T>& rhs) {
    if (rhs.size() != m.rows()) throw ShapeMismatch("solve_linear rhs");
    auto red = row_reduce(hcat_col(m, rhs));
    LinearSolution<T> out;
    out.consistent = true;
    for (auto c : red.pivot_cols)
        if (c == m.cols()) out.consistent = false;
    if (!out.consistent) return out;
    out.particular.assign(m.cols(), T(0));
    for (std::size_t pi = 0; pi < red.pivot_cols.size(); ++pi)
        out.particular[red.pivot_cols[pi]] = red.rref(pi, m.cols());
    // Nullspace of m itself: drop basis vectors tied to the augmented column.
    for (auto& v : red.nullspace) {
        if (!v.back().is_zero()) continue;
        v.pop_back();
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

template <class T>
Mat<T> inverse(const Mat<T>& m) {
    if (m.rows() != m.cols()) throw NotSquare();
    auto red = row_reduce(m);
    if (red.rank != m.rows()) throw SingularMatrix();
    return red.transform;
}

}  // namespace consim
