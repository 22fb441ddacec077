#pragma once

/**
 * @file matrix.hpp
 * @brief Dense exact matrices over Rat, CRat, or QRat.
 *
 * Matrices are immutable values in practice: operations return fresh
 * matrices.  Over QRat no commutativity is assumed anywhere; scalar
 * multiplication is provided for both sides.
 */

#include <initializer_list>
#include <vector>

#include "consim/quaternion.hpp"

namespace consim {

template <class T>
class Mat {
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> e_;

public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    Mat(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_)
            throw ShapeMismatch("entry count does not match dimensions");
    }
    Mat(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        e_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw ShapeMismatch("ragged initializer");
            for (const auto& x : r) e_.push_back(x);
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    const std::vector<T>& entries() const { return e_; }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool same_shape(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    Mat operator-() const {
        Mat r = *this;
        for (auto& x : r.e_) x = -x;
        return r;
    }
    Mat operator+(const Mat& o) const {
        if (!same_shape(o)) throw ShapeMismatch("addition");
        Mat r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        if (!same_shape(o)) throw ShapeMismatch("subtraction");
        Mat r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] - o.e_[i];
        return r;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw ShapeMismatch("product");
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& aik = (*this)(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const T& bkj = o(k, j);
                    if (bkj.is_zero()) continue;
                    r(i, j) += aik * bkj;
                }
            }
        return r;
    }

    Mat scale_left(const T& s) const {
        Mat r = *this;
        for (auto& x : r.e_) x = s * x;
        return r;
    }
    Mat scale_right(const T& s) const {
        Mat r = *this;
        for (auto& x : r.e_) x = x * s;
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<T> col(std::size_t c) const {
        std::vector<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
        return v;
    }
    void set_col(std::size_t c, const std::vector<T>& v) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = v[i];
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }
};

template <class T>
Mat<T> operator*(const T& s, const Mat<T>& m) {
    return m.scale_left(s);
}
template <class T>
Mat<T> operator*(const Mat<T>& m, const T& s) {
    return m.scale_right(s);
}

template <class T>
Mat<T> hcat(const Mat<T>& a, const Mat<T>& b) {
    if (a.rows() != b.rows()) throw ShapeMismatch("hcat");
    Mat<T> r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

template <class T>
Mat<T> hcat_col(const Mat<T>& a, const std::vector<T>& v) {
    if (a.rows() != v.size()) throw ShapeMismatch("hcat_col");
    Mat<T> r(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        r(i, a.cols()) = v[i];
    }
    return r;
}

template <class T>
std::vector<T> mat_vec(const Mat<T>& m, const std::vector<T>& x) {
    if (m.cols() != x.size()) throw ShapeMismatch("mat_vec");
    std::vector<T> y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero() && !x[j].is_zero()) y[i] += m(i, j) * x[j];
    return y;
}

// Kronecker product, commutative scalars only.
template <class T>
Mat<T> kron(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

inline Mat<CRat> conj(const Mat<CRat>& m) {
    Mat<CRat> r = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).conj();
    return r;
}

inline Mat<QRat> apply_hat(const Mat<QRat>& m, Sigma sigma) {
    if (sigma == Sigma::One) return m;
    Mat<QRat> r = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = apply_hat(m(i, j), sigma);
    return r;
}

inline Mat<QRat> to_quaternion(const Mat<CRat>& m) {
    Mat<QRat> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = QRat(m(i, j));
    return r;
}

inline Mat<CRat> as_complex(const Mat<QRat>& m) {
    Mat<CRat> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = as_complex(m(i, j));
    return r;
}

enum class ScalarClass { Real, Complex, Quaternion };

inline ScalarClass classify_entries(const Mat<QRat>& m) {
    bool complex_seen = false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_complex()) return ScalarClass::Quaternion;
            if (!m(i, j).is_real()) complex_seen = true;
        }
    return complex_seen ? ScalarClass::Complex : ScalarClass::Real;
}

}  // namespace consim
