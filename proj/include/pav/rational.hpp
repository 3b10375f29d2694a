// Exact rationals over BigInt, always reduced, denominator > 0.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "pav/bigint.hpp"

namespace pav {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}

    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        reduce();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }
    bool is_integer() const { return den_ == BigInt(1); }

    // precondition: is_integer()
    BigInt to_bigint() const {
        if (!is_integer()) throw std::domain_error("Rational: not an integer: " + to_string());
        return num_;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational operator-() const {
        Rational r = *this;
        r.num_.negate();
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    std::string to_string() const {
        if (is_integer()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    BigInt num_, den_;

    void reduce() {
        if (den_.sign() < 0) {
            num_.negate();
            den_.negate();
        }
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (g != BigInt(1)) {
            num_ = BigInt::exact_div(num_, g);
            den_ = BigInt::exact_div(den_, g);
        }
    }
};

inline std::string to_string(const Rational& v) { return v.to_string(); }

// Exact square root of a perfect-square rational (both num and den squares);
// returns the nonnegative root. Throws if the argument is not a square.
inline Rational rational_sqrt(const Rational& v) {
    if (v.sign() < 0) throw std::domain_error("rational_sqrt: negative");
    if (v.is_zero()) return Rational(0);
    auto isqrt = [](const BigInt& x) -> BigInt {
        // Newton on integers, seeded from a power of two above sqrt(x)
        BigInt lo(0), hi(1);
        while (hi * hi < x) hi = hi * BigInt(2);
        lo = hi / BigInt(2);
        while (lo < hi) {
            BigInt mid = (lo + hi) / BigInt(2);
            if (mid * mid < x)
                lo = mid + BigInt(1);
            else
                hi = mid;
        }
        return lo;
    };
    BigInt rn = isqrt(v.num()), rd = isqrt(v.den());
    if (rn * rn != v.num() || rd * rd != v.den())
        throw std::domain_error("rational_sqrt: not a perfect square: " + v.to_string());
    return Rational(rn, rd);
}

}  // namespace pav
