#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision rationals backed by GMP.
 *
 * Values are always canonical: gcd(|numerator|, denominator) = 1, the
 * denominator is positive, and zero is 0/1.  mpq_class keeps arithmetic
 * results canonical; the constructors canonicalize raw input.
 */

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>

#include "consim/errors.hpp"

namespace consim {

class Rat {
    mpq_class v_;

public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(static_cast<signed long>(n)) {}
    Rat(const mpz_class& n) : v_(n) {}
    Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}
    Rat(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw DivisionByZero();
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    const mpz_class num() const { return v_.get_num(); }
    const mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_), already_canonical{}); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_), already_canonical{}); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_), already_canonical{}); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_), already_canonical{}); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw DivisionByZero();
        return Rat(mpq_class(v_ / o.v_), already_canonical{});
    }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    Rat inverse() const {
        if (is_zero()) throw DivisionByZero();
        return Rat(mpq_class(1 / v_), already_canonical{});
    }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return cmp(v_, o.v_) < 0; }
    bool operator<=(const Rat& o) const { return cmp(v_, o.v_) <= 0; }
    bool operator>(const Rat& o) const { return cmp(v_, o.v_) > 0; }
    bool operator>=(const Rat& o) const { return cmp(v_, o.v_) >= 0; }

private:
    struct already_canonical {};
    Rat(mpq_class&& q, already_canonical) : v_(std::move(q)) {}
};

inline std::string to_string(const Rat& r) {
    std::string s = r.num().get_str();
    if (!r.is_integer()) s += "/" + r.den().get_str();
    return s;
}

// Exact square root of a nonnegative rational, when it exists in Q.
inline std::optional<Rat> rational_sqrt(const Rat& x) {
    if (x.sign() < 0) return std::nullopt;
    mpz_class n = x.num(), d = x.den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rat(rn, rd);
}

}  // namespace consim
