#pragma once

/**
 * @file equations.hpp
 * @brief Solvers for AX - X^sigma B = C and X - A X^sigma B = C over H.
 *
 * With complex A and B, writing X = X1 + X2 j and C = C1 + C2 j decouples
 * each equation into two complex equations: the C1 equation against B and
 * the C2 equation against sigma^2 conj(B).  The complex equations are
 * solved exactly by vectorization.  A realified 4mn x 4mn rational path
 * serves as the general solver and independent oracle, and the canonical
 * form transports arbitrary quaternion coefficients to the complex case.
 */

#include <functional>

#include "consim/canonical.hpp"
#include "consim/realify.hpp"

namespace consim {

enum class EquationKind { Sylvester, Stein };  // AX - X^s B = C | X - A X^s B = C

enum class SolveTag { Unique, Inconsistent, Affine };

template <class T>
struct AffineSolutions {
    SolveTag tag = SolveTag::Inconsistent;
    Mat<T> particular;
    std::vector<Mat<T>> basis;  // of the homogeneous space; empty for Unique

    std::size_t dimension() const { return basis.size(); }
};

using SolutionSet = AffineSolutions<QRat>;          // basis is an R-basis
using ComplexSolutionSet = AffineSolutions<CRat>;   // basis is a C-basis

namespace detail {

// Column-stacking vec; solver helper shared by the two complex equations.
inline ComplexSolutionSet solve_vectorized(const Mat<CRat>& sys, const Mat<CRat>& c) {
    const std::size_t m = c.rows(), n = c.cols();
    std::vector<CRat> rhs(m * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) rhs[j * m + i] = c(i, j);
    auto sol = solve_linear(sys, rhs);
    ComplexSolutionSet out;
    if (!sol.consistent) return out;
    auto unvec = [&](const std::vector<CRat>& v) {
        Mat<CRat> x(m, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < m; ++i) x(i, j) = v[j * m + i];
        return x;
    };
    out.tag = sol.nullspace.empty() ? SolveTag::Unique : SolveTag::Affine;
    out.particular = unvec(sol.particular);
    for (const auto& v : sol.nullspace) out.basis.push_back(unvec(v));
    return out;
}

inline void check_equation_shapes(std::size_t am, std::size_t an, std::size_t bm,
                                  std::size_t bn, std::size_t cm, std::size_t cn) {
    if (am != an) throw ShapeMismatch("A must be square");
    if (bm != bn) throw ShapeMismatch("B must be square");
    if (cm != am || cn != bm) throw ShapeMismatch("C must be rows(A) x rows(B)");
}

}  // namespace detail

// AX - XB = C over Q(i): (I (x) A - B^T (x) I) vec X = vec C.
inline ComplexSolutionSet solve_complex_sylvester(const Mat<CRat>& a, const Mat<CRat>& b,
                                                  const Mat<CRat>& c) {
    detail::check_equation_shapes(a.rows(), a.cols(), b.rows(), b.cols(), c.rows(), c.cols());
    auto sys = kron(Mat<CRat>::identity(b.rows()), a) -
               kron(b.transpose(), Mat<CRat>::identity(a.rows()));
    return detail::solve_vectorized(sys, c);
}

// X - AXB = C over Q(i): (I - B^T (x) A) vec X = vec C.
inline ComplexSolutionSet solve_complex_stein(const Mat<CRat>& a, const Mat<CRat>& b,
                                              const Mat<CRat>& c) {
    detail::check_equation_shapes(a.rows(), a.cols(), b.rows(), b.cols(), c.rows(), c.cols());
    auto sys = Mat<CRat>::identity(a.rows() * b.rows()) - kron(b.transpose(), a);
    return detail::solve_vectorized(sys, c);
}

// Complex A, B; quaternion C.  Decouple per the split, reassemble
// X = X1 + X2 j; each complex basis element contributes itself and itself
// times i to the real basis (the X2 ones multiplied by j).
inline SolutionSet solve_structured(const Mat<CRat>& a, const Mat<CRat>& b,
                                    const Mat<QRat>& c, Sigma sigma, EquationKind kind) {
    detail::check_equation_shapes(a.rows(), a.cols(), b.rows(), b.cols(), c.rows(), c.cols());
    auto [c1, c2] = split_complex(c);
    Mat<CRat> b2 = conj(b);
    if (sigma_square_sign(sigma) < 0) b2 = -b2;
    ComplexSolutionSet s1, s2;
    if (kind == EquationKind::Sylvester) {
        s1 = solve_complex_sylvester(a, b, c1);
        s2 = solve_complex_sylvester(a, b2, c2);
    } else {
        s1 = solve_complex_stein(a, b, c1);
        s2 = solve_complex_stein(a, b2, c2);
    }
    SolutionSet out;
    if (s1.tag == SolveTag::Inconsistent || s2.tag == SolveTag::Inconsistent) return out;
    out.particular = join_complex(s1.particular, s2.particular);
    const Mat<CRat> zero(c.rows(), c.cols());
    const CRat im = CRat::i();
    for (const auto& y : s1.basis) {
        out.basis.push_back(join_complex(y, zero));
        out.basis.push_back(join_complex(y.scale_left(im), zero));
    }
    for (const auto& y : s2.basis) {
        out.basis.push_back(join_complex(zero, y));
        out.basis.push_back(join_complex(zero, y.scale_left(im)));
    }
    out.tag = out.basis.empty() ? SolveTag::Unique : SolveTag::Affine;
    return out;
}

// Eigenvalue-collision set M_sigma.  For the Stein equation the lambdas are
// inverted with 0^{-1} = infinity; infinity never meets a finite mu, so the
// marker stays false after intersection.
struct MSigma {
    std::vector<CRat> values;  // sorted
    bool infinity = false;

    bool empty() const { return values.empty() && !infinity; }
};

inline MSigma classify_m_sigma(const JordanSpec& spec_a, const JordanSpec& spec_b,
                               Sigma sigma, EquationKind kind) {
    std::set<CRat, CRatLess> left, right;
    for (const auto& blk : spec_a.blocks) {
        if (kind == EquationKind::Sylvester) {
            left.insert(blk.eigenvalue);
        } else if (!blk.eigenvalue.is_zero()) {
            left.insert(blk.eigenvalue.inverse());
        }
        // lambda = 0 in the Stein case contributes infinity, which cannot
        // collide with any eigenvalue of the finite matrix B.
    }
    const int s2 = sigma_square_sign(sigma);
    for (const auto& blk : spec_b.blocks) {
        right.insert(blk.eigenvalue);
        CRat twisted = blk.eigenvalue.conj();
        if (s2 < 0) twisted = -twisted;
        right.insert(twisted);
    }
    MSigma out;
    for (const auto& v : left)
        if (right.count(v)) out.values.push_back(v);
    return out;
}

// One parametrized Toeplitz block of the homogeneous solution set of
// AY - Y^sigma B = 0 for Jordan A, B.
struct ToeplitzParam {
    std::size_t alpha = 0, beta = 0;  // block indices into the specs
    enum class Role { U, V } role = Role::U;
    std::size_t params = 0;      // free complex parameters: min(k_alpha, l_beta)
    bool rows_le_cols = true;    // zero leading columns; otherwise zero trailing rows
};

// Complete R-basis of {Y : AY - Y^sigma B = 0} for A = J(spec_a),
// B = J(spec_b).  U blocks couple at lambda = mu and are plain Toeplitz; V
// blocks couple at lambda = sigma^2 conj(mu) and satisfy N V = sigma^2 V N,
// so for sigma = i the diagonals alternate sign.
inline std::vector<std::pair<ToeplitzParam, std::vector<Mat<QRat>>>> homogeneous_basis_jordan(
    const JordanSpec& spec_a, const JordanSpec& spec_b, Sigma sigma) {
    const std::size_t m = spec_a.total_size(), n = spec_b.total_size();
    const int s2 = sigma_square_sign(sigma);
    std::vector<std::pair<ToeplitzParam, std::vector<Mat<QRat>>>> out;

    std::size_t row_off = 0;
    for (std::size_t alpha = 0; alpha < spec_a.blocks.size(); ++alpha) {
        const auto& ba = spec_a.blocks[alpha];
        std::size_t col_off = 0;
        for (std::size_t beta = 0; beta < spec_b.blocks.size(); ++beta) {
            const auto& bb = spec_b.blocks[beta];
            for (auto role : {ToeplitzParam::Role::U, ToeplitzParam::Role::V}) {
                CRat coupled = bb.eigenvalue;
                if (role == ToeplitzParam::Role::V) {
                    coupled = coupled.conj();
                    if (s2 < 0) coupled = -coupled;
                }
                if (ba.eigenvalue != coupled) continue;
                const std::size_t k = ba.size, l = bb.size;
                const std::size_t count = std::min(k, l);
                ToeplitzParam tp{alpha, beta, role, count, k <= l};
                std::vector<Mat<QRat>> realized;
                for (std::size_t t = 0; t < count; ++t) {
                    const std::size_t c0 = (k <= l ? l - k + t : t);
                    const std::size_t len = count - t;
                    for (const CRat& param : {CRat(1), CRat::i()}) {
                        Mat<QRat> y(m, n);
                        for (std::size_t r = 0; r < len; ++r) {
                            CRat val = param;
                            if (role == ToeplitzParam::Role::V && s2 < 0 && r % 2 == 1)
                                val = -val;
                            y(row_off + r, col_off + c0 + r) =
                                role == ToeplitzParam::Role::U ? QRat(val)
                                                               : QRat::from_split(CRat(), val);
                        }
                        realized.push_back(std::move(y));
                    }
                }
                out.emplace_back(tp, std::move(realized));
            }
            col_off += bb.size;
        }
        row_off += ba.size;
    }
    return out;
}

inline void check_quaternion_equation_shapes(const Mat<QRat>& a, const Mat<QRat>& b,
                                             const Mat<QRat>& c) {
    detail::check_equation_shapes(a.rows(), a.cols(), b.rows(), b.cols(), c.rows(), c.cols());
}

inline Mat<QRat> equation_lhs(const Mat<QRat>& a, const Mat<QRat>& b, const Mat<QRat>& x,
                              Sigma sigma, EquationKind kind) {
    Mat<QRat> xs = apply_hat(x, sigma);
    if (kind == EquationKind::Sylvester) return a * x - xs * b;
    return x - a * xs * b;
}

inline bool verify_solution(const Mat<QRat>& a, const Mat<QRat>& b, const Mat<QRat>& c,
                            const Mat<QRat>& x, Sigma sigma, EquationKind kind) {
    check_quaternion_equation_shapes(a, b, c);
    if (x.rows() != c.rows() || x.cols() != c.cols()) throw ShapeMismatch("solution shape");
    return equation_lhs(a, b, x, sigma, kind) == c;
}

// General automorphism variant: X^sigma is apply_automorphism entrywise.
inline bool verify_solution(const Mat<QRat>& a, const Mat<QRat>& b, const Mat<QRat>& c,
                            const Mat<QRat>& x, const AutomorphismSpec& spec,
                            EquationKind kind) {
    check_quaternion_equation_shapes(a, b, c);
    if (x.rows() != c.rows() || x.cols() != c.cols()) throw ShapeMismatch("solution shape");
    Mat<QRat> xs = x;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            xs(i, j) = apply_automorphism(x(i, j), spec);
    Mat<QRat> lhs =
        kind == EquationKind::Sylvester ? Mat<QRat>(a * x - xs * b) : Mat<QRat>(x - a * xs * b);
    return lhs == c;
}

// Realified path: works for arbitrary quaternion A, B and is the
// independent oracle for the structured solvers.
inline SolutionSet solve_general(const Mat<QRat>& a, const Mat<QRat>& b, const Mat<QRat>& c,
                                 Sigma sigma, EquationKind kind) {
    check_quaternion_equation_shapes(a, b, c);
    auto action = [&](const Mat<QRat>& x) { return equation_lhs(a, b, x, sigma, kind); };
    auto raw = realify_solve(action, c);
    SolutionSet out;
    if (!raw.consistent) return out;
    out.tag = raw.basis.empty() ? SolveTag::Unique : SolveTag::Affine;
    out.particular = std::move(raw.particular);
    out.basis = std::move(raw.basis);
    return out;
}

// Canonical-form transport: bring A and B to their complex canonical forms,
// solve the structured system, and carry solutions back.
inline SolutionSet solve_via_canonical(const Mat<QRat>& a, const Mat<QRat>& b,
                                       const Mat<QRat>& c, Sigma sigma, EquationKind kind) {
    check_quaternion_equation_shapes(a, b, c);
    CanonicalResult ca = canonical_consimilarity(a, sigma);
    CanonicalResult cb = canonical_consimilarity(b, sigma);
    const Mat<QRat>& s = ca.certificate;
    const Mat<QRat>& r = cb.certificate;
    Mat<QRat> s_hat = apply_hat(s, sigma);
    Mat<QRat> s_hat_inv = inverse(s_hat);
    Mat<QRat> r_inv = inverse(r);
    Mat<QRat> c_t = s_hat_inv * c * r;
    SolutionSet inner =
        solve_structured(jordan_matrix(ca.spec), jordan_matrix(cb.spec), c_t, sigma, kind);
    if (inner.tag == SolveTag::Inconsistent) return inner;
    // X = S X' R^{-1} for Sylvester; X = hat(S) X' R^{-1} for Stein.
    const Mat<QRat>& back = kind == EquationKind::Sylvester ? s : s_hat;
    SolutionSet out;
    out.tag = inner.tag;
    out.particular = back * inner.particular * r_inv;
    for (const auto& y : inner.basis) out.basis.push_back(back * y * r_inv);
    return out;
}

}  // namespace consim
