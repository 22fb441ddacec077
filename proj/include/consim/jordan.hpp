#pragma once

/**
 * @file jordan.hpp
 * @brief Exact Jordan forms of complex and quaternion matrices.
 *
 * Complex case: eigenvalues in Q(i) via the characteristic polynomial, block
 * sizes from the Weyr rank sequence.  Quaternion case: the complex adjoint
 * pairs eigenvalues (lambda, conj lambda) with equal block structure; the
 * representative with Im >= 0 is emitted.  Certificates are built from
 * deterministic Jordan chains: over Q(i) in the left-action model for
 * nonreal eigenvalues, over H directly for real ones, then folded back to
 * quaternion columns.
 */

#include <algorithm>
#include <utility>
#include <vector>

#include "consim/adjoint.hpp"
#include "consim/elimination.hpp"
#include "consim/roots.hpp"

namespace consim {

struct JordanBlock {
    CRat eigenvalue;
    std::size_t size = 1;

    bool operator==(const JordanBlock& o) const {
        return eigenvalue == o.eigenvalue && size == o.size;
    }
};

// Canonical block order: eigenvalue real part, imaginary part, size, all
// descending.  Resolves the "up to permutation" freedom deterministically.
inline bool block_order_less(const JordanBlock& x, const JordanBlock& y) {
    if (x.eigenvalue.re != y.eigenvalue.re) return y.eigenvalue.re < x.eigenvalue.re;
    if (x.eigenvalue.im != y.eigenvalue.im) return y.eigenvalue.im < x.eigenvalue.im;
    return y.size < x.size;
}

struct JordanSpec {
    std::vector<JordanBlock> blocks;  // always in canonical order

    static JordanSpec of(std::vector<JordanBlock> bs) {
        std::stable_sort(bs.begin(), bs.end(), block_order_less);
        return JordanSpec{std::move(bs)};
    }

    std::size_t total_size() const {
        std::size_t n = 0;
        for (const auto& b : blocks) n += b.size;
        return n;
    }

    bool operator==(const JordanSpec& o) const { return blocks == o.blocks; }
    bool operator!=(const JordanSpec& o) const { return !(*this == o); }
};

inline Mat<CRat> jordan_matrix(const JordanSpec& spec) {
    const std::size_t n = spec.total_size();
    Mat<CRat> j(n, n);
    std::size_t off = 0;
    for (const auto& b : spec.blocks) {
        for (std::size_t t = 0; t < b.size; ++t) {
            j(off + t, off + t) = b.eigenvalue;
            if (t + 1 < b.size) j(off + t, off + t + 1) = CRat(1);
        }
        off += b.size;
    }
    return j;
}

inline Mat<QRat> jordan_matrix_quaternion(const JordanSpec& spec) {
    return to_quaternion(jordan_matrix(spec));
}

inline JordanSpec jordan_spec_complex(const Mat<CRat>& m) {
    if (m.rows() != m.cols()) throw NotSquare();
    const std::size_t n = m.rows();
    std::vector<JordanBlock> blocks;
    if (n == 0) return JordanSpec{};
    auto roots = gaussian_rational_roots(char_poly(m));
    for (const auto& [lambda, mult] : roots) {
        Mat<CRat> shifted = m;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
        // ge[s] = number of blocks at lambda of size >= s.
        std::vector<std::size_t> ge;
        Mat<CRat> pw = Mat<CRat>::identity(n);
        std::size_t prev_rank = n;
        for (std::size_t s = 1; s <= static_cast<std::size_t>(mult); ++s) {
            pw = pw * shifted;
            std::size_t r = rank(pw);
            if (prev_rank == r) break;
            ge.push_back(prev_rank - r);
            prev_rank = r;
        }
        for (std::size_t s = 1; s <= ge.size(); ++s) {
            std::size_t count = ge[s - 1] - (s < ge.size() ? ge[s] : 0);
            for (std::size_t t = 0; t < count; ++t)
                blocks.push_back({lambda, s});
        }
    }
    return JordanSpec::of(std::move(blocks));
}

inline JordanSpec jordan_spec_quaternion(const Mat<QRat>& m) {
    if (m.rows() != m.cols()) throw NotSquare();
    JordanSpec adj = jordan_spec_complex(complex_adjoint(m));
    // Count (lambda, size) pairs, then take the Im >= 0 half.
    std::vector<JordanBlock> blocks;
    std::map<std::pair<CRat, std::size_t>, std::size_t,
             decltype([](const auto& x, const auto& y) {
                 if (x.first != y.first) return CRatLess{}(x.first, y.first);
                 return x.second < y.second;
             })>
        counts;
    for (const auto& b : adj.blocks) ++counts[{b.eigenvalue, b.size}];
    for (const auto& [key, count] : counts) {
        const auto& [lambda, size] = key;
        if (lambda.im.sign() < 0) continue;
        if (lambda.im.sign() == 0) {
            if (count % 2 != 0) throw Error("adjoint spec: odd real multiplicity");
            for (std::size_t t = 0; t < count / 2; ++t) blocks.push_back({lambda, size});
        } else {
            auto it = counts.find({lambda.conj(), size});
            if (it == counts.end() || it->second != count)
                throw Error("adjoint spec: conjugate pairing broken");
            for (std::size_t t = 0; t < count; ++t) blocks.push_back({lambda, size});
        }
    }
    return JordanSpec::of(std::move(blocks));
}

namespace detail {

// Deterministic Jordan chains of a (locally nilpotent) operator given by N:
// kernels of N^s in echelon order, heads chosen greedily from the top level
// down.  Each chain is returned eigenvector-first.  Works over any division
// ring scalar.
template <class T>
std::vector<std::vector<std::vector<T>>> nilpotent_chains(const Mat<T>& nmat) {
    const std::size_t n = nmat.rows();
    std::vector<std::vector<std::vector<T>>> kernels;  // kernels[s-1] = basis of ker N^s
    Mat<T> pw = nmat;
    std::size_t prev = 0;
    while (true) {
        auto ns = row_reduce(pw).nullspace;
        if (ns.size() == prev) break;
        prev = ns.size();
        kernels.push_back(std::move(ns));
        if (prev == n) break;
        pw = pw * nmat;
    }
    std::vector<std::vector<std::vector<T>>> chains;
    if (kernels.empty()) return chains;

    // Incrementally extended independence pool.
    Mat<T> pool(n, 0);
    std::size_t pool_rank = 0;
    auto try_add = [&](const std::vector<T>& v) {
        Mat<T> ext = hcat_col(pool, v);
        std::size_t r = rank(ext);
        if (r > pool_rank) {
            pool = std::move(ext);
            pool_rank = r;
            return true;
        }
        return false;
    };

    for (std::size_t s = kernels.size(); s-- > 0;) {
        // Span to avoid: ker N^s plus the level-(s+1) members of longer chains.
        pool = Mat<T>(n, 0);
        pool_rank = 0;
        if (s > 0)
            for (const auto& v : kernels[s - 1]) try_add(v);
        for (const auto& c : chains) try_add(c[s]);
        for (const auto& cand : kernels[s]) {
            if (!try_add(cand)) continue;
            std::vector<std::vector<T>> chain(s + 1);
            chain[s] = cand;
            for (std::size_t t = s; t-- > 0;) chain[t] = mat_vec(nmat, chain[t + 1]);
            chains.push_back(std::move(chain));
        }
    }
    return chains;
}

struct QuaternionChain {
    CRat eigenvalue;
    std::vector<std::vector<QRat>> vectors;  // eigenvector first
};

}  // namespace detail

// Jordan form with certificate: s^{-1} m s is exactly the Jordan matrix of
// the returned spec.
inline std::pair<JordanSpec, Mat<QRat>> jordan_certificate(const Mat<QRat>& m) {
    if (m.rows() != m.cols()) throw NotSquare();
    const std::size_t n = m.rows();
    if (n == 0) return {JordanSpec{}, Mat<QRat>()};

    Mat<CRat> model = left_action_matrix(m);
    auto roots = gaussian_rational_roots(char_poly(model));

    std::vector<detail::QuaternionChain> chains;
    for (const auto& [lambda, mult] : roots) {
        (void)mult;
        if (lambda.im.sign() < 0) continue;  // paired with the conjugate
        if (lambda.im.sign() > 0) {
            Mat<CRat> shifted = model;
            for (std::size_t i = 0; i < 2 * n; ++i) shifted(i, i) -= lambda;
            for (auto& chain : detail::nilpotent_chains(shifted)) {
                detail::QuaternionChain qc{lambda, {}};
                for (auto& w : chain) qc.vectors.push_back(fold_left_action_vector(w));
                chains.push_back(std::move(qc));
            }
        } else {
            // Real eigenvalue: generalized eigenspace is an H-subspace, so
            // chains can be taken over H directly (half the adjoint count).
            Mat<QRat> shifted = m;
            for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= QRat(lambda.re);
            for (auto& chain : detail::nilpotent_chains(shifted))
                chains.push_back({lambda, std::move(chain)});
        }
    }

    std::stable_sort(chains.begin(), chains.end(),
                     [](const detail::QuaternionChain& x, const detail::QuaternionChain& y) {
                         return block_order_less({x.eigenvalue, x.vectors.size()},
                                                 {y.eigenvalue, y.vectors.size()});
                     });

    std::vector<JordanBlock> blocks;
    Mat<QRat> s(n, n);
    std::size_t colidx = 0;
    for (const auto& c : chains) {
        blocks.push_back({c.eigenvalue, c.vectors.size()});
        for (const auto& v : c.vectors) {
            if (colidx >= n) throw Error("jordan_certificate: too many chain vectors");
            s.set_col(colidx++, v);
        }
    }
    if (colidx != n) throw Error("jordan_certificate: chain vectors do not fill the space");
    return {JordanSpec::of(std::move(blocks)), std::move(s)};
}

}  // namespace consim
