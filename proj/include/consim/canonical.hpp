#pragma once

/**
 * @file canonical.hpp
 * @brief Sigma-consimilarity canonical forms and decision procedures.
 *
 * sigma = 1 is plain similarity: the quaternion Jordan form with Im >= 0
 * eigenvalues.  sigma = i goes through iA: S^{-1}(iA)S = J(nu) iff
 * T^{-i}AT = J(mu) with mu = -i nu and T = S W, W the blockwise
 * diag(1, i, i^2, ...) rescaling.  The eigenvalue normalization Im >= 0
 * for nu turns into Re >= 0 for mu.
 */

#include "consim/jordan.hpp"

namespace consim {

struct CanonicalResult {
    Sigma sigma = Sigma::One;
    JordanSpec spec;
    Mat<QRat> certificate;  // T with hat_sigma(T)^{-1} A T = jordan_matrix(spec)
};

// Spec-only computation (no certificate); used by the decision procedures.
inline JordanSpec consimilarity_spec(const Mat<QRat>& a, Sigma sigma) {
    if (sigma == Sigma::One) return jordan_spec_quaternion(a);
    JordanSpec nu_spec = jordan_spec_quaternion(a.scale_left(QRat::i()));
    std::vector<JordanBlock> blocks;
    for (const auto& b : nu_spec.blocks)
        blocks.push_back({CRat(b.eigenvalue.im, -b.eigenvalue.re), b.size});  // -i*nu
    return JordanSpec::of(std::move(blocks));
}

inline CanonicalResult canonical_consimilarity(const Mat<QRat>& a, Sigma sigma) {
    if (a.rows() != a.cols()) throw NotSquare();
    if (sigma == Sigma::One) {
        auto [spec, s] = jordan_certificate(a);
        return {Sigma::One, std::move(spec), std::move(s)};
    }
    auto [nu_spec, s] = jordan_certificate(a.scale_left(QRat::i()));

    struct Entry {
        JordanBlock block;      // (mu, k)
        std::size_t col_start;  // first column of the chain in s
    };
    std::vector<Entry> entries;
    std::size_t off = 0;
    for (const auto& b : nu_spec.blocks) {
        entries.push_back({{CRat(b.eigenvalue.im, -b.eigenvalue.re), b.size}, off});
        off += b.size;
    }
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
        return block_order_less(x.block, y.block);
    });

    const std::size_t n = a.rows();
    Mat<QRat> t(n, n);
    std::vector<JordanBlock> blocks;
    std::size_t colidx = 0;
    for (const auto& e : entries) {
        blocks.push_back(e.block);
        QRat w(1);
        for (std::size_t p = 0; p < e.block.size; ++p) {
            auto v = s.col(e.col_start + p);
            for (auto& x : v) x = x * w;  // right rescale: column p gets i^p
            t.set_col(colidx++, v);
            w = w * QRat::i();
        }
    }
    return {Sigma::I, JordanSpec::of(std::move(blocks)), std::move(t)};
}

inline bool are_similar(const Mat<QRat>& a, const Mat<QRat>& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols()) throw NotSquare();
    if (a.rows() != b.rows()) throw ShapeMismatch("are_similar");
    return jordan_spec_quaternion(a) == jordan_spec_quaternion(b);
}

// Decision per canonical specs; for sigma = i the answer is cross-checked
// against the three similarity restatements (iA ~ iB, iA ~ Bi, Ai ~ Bi).
inline bool are_consimilar(const Mat<QRat>& a, const Mat<QRat>& b, Sigma sigma) {
    if (a.rows() != a.cols() || b.rows() != b.cols()) throw NotSquare();
    if (a.rows() != b.rows()) throw ShapeMismatch("are_consimilar");
    bool by_spec = consimilarity_spec(a, sigma) == consimilarity_spec(b, sigma);
    if (sigma == Sigma::One) return by_spec;
    const QRat iq = QRat::i();
    JordanSpec ia = jordan_spec_quaternion(a.scale_left(iq));
    JordanSpec ib = jordan_spec_quaternion(b.scale_left(iq));
    JordanSpec ai = jordan_spec_quaternion(a.scale_right(iq));
    JordanSpec bi = jordan_spec_quaternion(b.scale_right(iq));
    bool v2 = ia == ib, v3 = ia == bi, v4 = ai == bi;
    if (v2 != by_spec || v3 != by_spec || v4 != by_spec)
        throw Error("are_consimilar: internal equivalence cross-check failed");
    return by_spec;
}

}  // namespace consim
