// Exact arithmetic in Q(sqrt(5)): values a + b*sqrt(5) with rational a, b.
// Conjugation (b -> -b) is a ring automorphism; norm(a,b) = a^2 - 5 b^2.

#pragma once

#include <stdexcept>
#include <string>

#include "pav/rational.hpp"

namespace pav {

class QuadExt {
public:
    QuadExt() : a_(0), b_(0) {}
    QuadExt(long long v) : a_(v), b_(0) {}
    QuadExt(int v) : a_(v), b_(0) {}
    QuadExt(Rational a) : a_(std::move(a)), b_(0) {}
    QuadExt(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QuadExt sqrt5() { return QuadExt(Rational(0), Rational(1)); }

    const Rational& rat_part() const { return a_; }
    const Rational& irr_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadExt conj() const { return QuadExt(a_, -b_); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        return QuadExt(x.a_ - y.a_, x.b_ - y.b_);
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        return QuadExt(x.a_ * y.a_ + Rational(5) * x.b_ * y.b_,
                       x.a_ * y.b_ + x.b_ * y.a_);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        Rational norm = y.a_ * y.a_ - Rational(5) * y.b_ * y.b_;
        if (norm.is_zero()) throw std::domain_error("QuadExt: division by zero");
        QuadExt t = x * y.conj();
        return QuadExt(t.a_ / norm, t.b_ / norm);
    }

    QuadExt operator-() const { return QuadExt(-a_, -b_); }
    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    std::string to_string() const {
        if (b_.is_zero()) return a_.to_string();
        std::string s = a_.is_zero() ? "" : a_.to_string();
        if (!s.empty() && b_.sign() > 0) s += "+";
        s += b_.to_string() + "*sqrt5";
        return s;
    }

private:
    Rational a_, b_;
};

inline std::string to_string(const QuadExt& v) { return v.to_string(); }

// Only rational perfect squares are supported; the series square root seeds
// from the constant term, which is 1 everywhere this is used.
inline QuadExt quadext_sqrt(const QuadExt& v) {
    if (!v.is_rational()) throw std::domain_error("quadext_sqrt: irrational constant term");
    return QuadExt(rational_sqrt(v.rat_part()));
}

inline Rational scalar_sqrt(const Rational& v) { return rational_sqrt(v); }
inline QuadExt scalar_sqrt(const QuadExt& v) { return quadext_sqrt(v); }

}  // namespace pav
