#pragma once

/**
 * @file roots.hpp
 * @brief All roots of a monic polynomial that lie in Q(i).
 *
 * Rational-root search over the Euclidean domain Z[i]: clear denominators,
 * factor the norms of the constant and leading coefficients, enumerate
 * Gaussian divisors, test candidates and deflate.  Errors if a nonconstant
 * factor without Q(i) roots remains, reporting the residual.
 */

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "consim/charpoly.hpp"

namespace consim {

namespace gaussint {

// Gaussian integer.
struct GInt {
    mpz_class re, im;

    GInt() : re(0), im(0) {}
    GInt(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}
    explicit GInt(long r) : re(r), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }
    mpz_class norm() const { return re * re + im * im; }
    GInt conj() const { return {re, -im}; }
    GInt operator*(const GInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GInt operator-() const { return {-re, -im}; }
    bool operator==(const GInt& o) const { return re == o.re && im == o.im; }
    bool operator<(const GInt& o) const {
        if (re != o.re) return re < o.re;
        return im < o.im;
    }

    // Unique associate with re > 0 and im >= 0 (zero stays zero).
    GInt canonical_associate() const {
        GInt z = *this;
        if (z.is_zero()) return z;
        for (int t = 0; t < 4; ++t) {
            if (z.re > 0 && z.im >= 0) return z;
            z = GInt(-z.im, z.re);  // multiply by i
        }
        return z;  // unreachable
    }
};

// Exact quotient z / w when w divides z.
inline bool divide_exact(const GInt& z, const GInt& w, GInt& out) {
    mpz_class n = w.norm();
    GInt t = z * w.conj();
    if (t.re % n != 0 || t.im % n != 0) return false;
    out = GInt(t.re / n, t.im / n);
    return true;
}

namespace detail {

inline mpz_class mulmod(const mpz_class& a, const mpz_class& b, const mpz_class& n) {
    return (a * b) % n;
}

inline mpz_class powmod(mpz_class base, mpz_class exp, const mpz_class& n) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Pollard rho (Brent variant); n composite, odd, > 1.
inline mpz_class pollard_rho(const mpz_class& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC0FFEEul);
    while (true) {
        mpz_class x = rng.get_z_range(n - 2) + 2;
        mpz_class y = x;
        mpz_class c = rng.get_z_range(n - 1) + 1;
        mpz_class d(1);
        while (d == 1) {
            x = (mulmod(x, x, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            mpz_class diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

inline void factor_into(const mpz_class& n, std::map<mpz_class, int>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 32) != 0) {
        ++out[n];
        return;
    }
    mpz_class d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace detail

// Prime factorization of a positive integer.
inline std::map<mpz_class, int> factor_mpz(mpz_class n) {
    std::map<mpz_class, int> out;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L}) {
        while (n % p == 0) {
            ++out[mpz_class(p)];
            n /= p;
        }
    }
    detail::factor_into(n, out);
    return out;
}

// A Gaussian prime above an odd rational prime p = 1 (mod 4): gcd(p, x + i)
// with x^2 = -1 (mod p), computed by a Euclidean descent on norms.
inline GInt gaussian_prime_above(const mpz_class& p) {
    mpz_class x;
    for (mpz_class c(2);; ++c) {
        x = detail::powmod(c, (p - 1) / 4, p);
        if (detail::mulmod(x, x, p) == p - 1) break;
    }
    // gcd via nearest-quotient Euclidean division
    GInt a(p, 0), b(x, 1);
    while (!b.is_zero()) {
        mpz_class n = b.norm();
        GInt t = a * b.conj();
        auto nearest = [&](const mpz_class& v) {
            mpz_class q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
            if (2 * r > n) ++q;
            return q;
        };
        GInt q(nearest(t.re), nearest(t.im));
        GInt r(a.re - (q.re * b.re - q.im * b.im), a.im - (q.re * b.im + q.im * b.re));
        a = b;
        b = r;
    }
    return a.canonical_associate();
}

// Gaussian prime factorization (primes as canonical associates).
inline std::vector<std::pair<GInt, int>> factor_gauss(const GInt& z0) {
    if (z0.is_zero()) throw Error("factor_gauss: zero");
    std::vector<std::pair<GInt, int>> out;
    GInt z = z0;
    auto strip = [&](const GInt& pi) {
        int e = 0;
        GInt q;
        while (divide_exact(z, pi, q)) {
            z = q;
            ++e;
        }
        if (e > 0) out.emplace_back(pi, e);
    };
    for (const auto& [p, e] : factor_mpz(z0.norm())) {
        if (p == 2) {
            strip(GInt(1, 1));
        } else if (p % 4 == 3) {
            strip(GInt(p, 0));
        } else {
            GInt pi = gaussian_prime_above(p);
            strip(pi);
            strip(pi.conj().canonical_associate());
        }
    }
    if (z.norm() != 1) throw Error("factor_gauss: incomplete factorization");
    return out;
}

// All divisors up to units, as canonical associates.
inline std::vector<GInt> divisors_gauss(const GInt& z) {
    auto f = factor_gauss(z);
    std::vector<GInt> out{GInt(1, 0)};
    for (const auto& [pi, e] : f) {
        std::vector<GInt> next;
        GInt pw(1, 0);
        for (int t = 0; t <= e; ++t) {
            for (const auto& d : out) next.push_back((d * pw).canonical_associate());
            pw = pw * pi;
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace gaussint

// All roots of a monic nonconstant polynomial that lie in Q(i), with
// multiplicities.  Throws EigenvaluesNotGaussianRational when the
// polynomial does not split over Q(i).
inline std::vector<std::pair<CRat, int>> gaussian_rational_roots(const Poly& p_in) {
    using gaussint::GInt;
    const std::size_t deg = poly_degree(p_in);
    if (deg == 0) throw Error("gaussian_rational_roots: constant polynomial");
    if (!p_in[deg].is_one()) throw Error("gaussian_rational_roots: not monic");

    std::map<CRat, int, CRatLess> roots;
    Poly work(p_in.begin(), p_in.begin() + deg + 1);

    // Zero roots come off as factors of x.
    while (poly_degree(work) > 0 && work[0].is_zero()) {
        ++roots[CRat()];
        work.erase(work.begin());
    }
    if (poly_degree(work) > 0) {
        // Clear denominators: D * work has coefficients in Z[i], leading D.
        mpz_class den(1);
        for (const auto& c : work) {
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), c.re.den().get_mpz_t());
            mpz_lcm(den.get_mpz_t(), l.get_mpz_t(), c.im.den().get_mpz_t());
        }
        Rat d_rat{den};
        auto coeff_int = [&](const CRat& c) {
            Rat r = c.re * d_rat, i = c.im * d_rat;
            return GInt(r.num(), i.num());
        };
        GInt g0 = coeff_int(work[0]);
        auto num_divs = gaussint::divisors_gauss(g0);
        auto den_divs = gaussint::divisors_gauss(GInt(den, 0));

        std::set<CRat, CRatLess> candidates;
        const GInt units[4] = {GInt(1, 0), GInt(0, 1), GInt(-1, 0), GInt(0, -1)};
        for (const auto& alpha : num_divs)
            for (const auto& beta : den_divs) {
                Rat n2(beta.norm());
                for (const auto& u : units) {
                    GInt top = alpha * u * beta.conj();
                    candidates.insert(CRat(Rat(top.re) / n2, Rat(top.im) / n2));
                }
            }
        for (const auto& r : candidates) {
            while (poly_degree(work) > 0 && poly_eval(work, r).is_zero()) {
                ++roots[r];
                work = poly_deflate(work, r);
            }
            if (poly_degree(work) == 0) break;
        }
        if (poly_degree(work) > 0)
            throw EigenvaluesNotGaussianRational(poly_to_string(work));
    }
    std::vector<std::pair<CRat, int>> out(roots.begin(), roots.end());
    return out;
}

}  // namespace consim
