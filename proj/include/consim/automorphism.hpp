#pragma once

/**
 * @file automorphism.hpp
 * @brief Involutive automorphisms of H and their reduction to sigma in {1, i}.
 *
 * Every involutive automorphism is either the identity or conjugation by a
 * pure unit quaternion tau.  Reselecting the orthogonal imaginary units so
 * that i1 = tau/|tau| turns conjugation by tau into the hat map
 * h = u + vj -> u - vj of the new frame.
 */

#include <optional>
#include <utility>

#include "consim/quaternion.hpp"

namespace consim {

// A reselected orthonormal triple of imaginary units.  Invariants:
// all pure, i1^2 = j1^2 = k1^2 = -1, i1*j1 = k1, pairwise orthogonal.
struct Frame {
    QRat i1, j1, k1;

    static Frame standard() { return Frame{QRat::i(), QRat::j(), QRat::k()}; }

    bool operator==(const Frame& o) const {
        return i1 == o.i1 && j1 == o.j1 && k1 == o.k1;
    }
};

struct AutomorphismSpec {
    enum class Kind { Identity, ByUnit };
    Kind kind = Kind::Identity;
    QRat tau;  // pure and nonzero when kind == ByUnit

    static AutomorphismSpec identity() { return AutomorphismSpec{}; }

    // Conjugation by tau.  Any nonzero pure rational tau is accepted;
    // positive rescaling does not change the automorphism.
    static AutomorphismSpec by_unit(const QRat& tau) {
        if (!tau.is_pure()) throw NotInvolutive("tau must be a pure quaternion");
        if (tau.is_zero()) throw NotInvolutive("tau must be nonzero");
        return AutomorphismSpec{Kind::ByUnit, tau};
    }
};

// q -> tau^{-1} q tau (or q itself for the identity).
inline QRat apply_automorphism(const QRat& x, const AutomorphismSpec& spec) {
    if (spec.kind == AutomorphismSpec::Kind::Identity) return x;
    return spec.tau.inverse() * x * spec.tau;
}

// Cross product of pure quaternions: the pure part of the product.
inline QRat pure_cross(const QRat& x, const QRat& y) {
    QRat p = x * y;
    return QRat(Rat(0), p.b, p.c, p.d);
}

// Euclidean inner product of the coefficient 4-vectors.
inline Rat dot4(const QRat& x, const QRat& y) {
    return x.a * y.a + x.b * y.b + x.c * y.c + x.d * y.d;
}

namespace detail {
inline QRat normalize_exact(const QRat& x, const char* what) {
    auto n = rational_sqrt(x.norm2());
    if (!n) throw ExactFrameUnavailable(what);
    return n->inverse() * x;
}
}  // namespace detail

// Reduce an involutive automorphism to (sigma, frame).  For ByUnit(tau) the
// frame is i1 = tau/|tau|, j1 = normalized e x tau with e the first standard
// imaginary unit not parallel to tau, k1 = i1*j1.  Fails with
// ExactFrameUnavailable when a needed normalization leaves Q.
inline std::pair<Sigma, Frame> reduce_automorphism(const AutomorphismSpec& spec) {
    if (spec.kind == AutomorphismSpec::Kind::Identity)
        return {Sigma::One, Frame::standard()};
    const QRat& tau = spec.tau;
    if (!tau.is_pure() || tau.is_zero())
        throw NotInvolutive("tau must be pure and nonzero");
    QRat i1 = detail::normalize_exact(tau, "|tau| is irrational");
    QRat e = QRat::i();
    if (pure_cross(e, tau).is_zero()) e = QRat::j();
    QRat j1 = detail::normalize_exact(pure_cross(e, i1), "|e x tau| is irrational");
    QRat k1 = i1 * j1;
    return {Sigma::I, Frame{i1, j1, k1}};
}

// Coordinates of h in the frame, reassembled on the standard units.  This is
// the inverse of from_frame_coords and a ring isomorphism of H.
inline QRat to_frame_coords(const QRat& h, const Frame& f) {
    return QRat(h.a, dot4(h, f.i1), dot4(h, f.j1), dot4(h, f.k1));
}

inline QRat from_frame_coords(const QRat& h, const Frame& f) {
    QRat r(h.a);
    r += h.b * f.i1;
    r += h.c * f.j1;
    r += h.d * f.k1;
    return r;
}

}  // namespace consim
