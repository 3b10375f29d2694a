// Truncated formal power series with exact scalar coefficients.
//
// A Series<S> knows its coefficients for exponents 0..order(); arithmetic
// never reads past that, and binary operations carry min(order, order).
// Scalars are Rational or QuadExt. No floating point anywhere.

#pragma once

#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "pav/quadext.hpp"
#include "pav/rational.hpp"

namespace pav {

template <class S>
class Series {
public:
    explicit Series(int order) : order_(order), c_(order + 1, S(0)) {
        if (order < 0) throw std::invalid_argument("Series: negative order");
    }

    static Series constant(S v, int order) {
        Series r(order);
        r.c_[0] = std::move(v);
        return r;
    }

    static Series one(int order) { return constant(S(1), order); }

    // polynomial c0 + c1 x + ... (coefficients beyond `order` are dropped)
    static Series poly(std::initializer_list<long long> cs, int order) {
        Series r(order);
        int i = 0;
        for (long long c : cs) {
            if (i > order) break;
            r.c_[i++] = S(c);
        }
        return r;
    }

    static Series from_coeffs(std::vector<S> cs) {
        if (cs.empty()) throw std::invalid_argument("Series: empty coefficient list");
        Series r(static_cast<int>(cs.size()) - 1);
        r.c_ = std::move(cs);
        return r;
    }

    int order() const { return order_; }

    const S& coeff(int i) const {
        if (i < 0 || i > order_) throw std::out_of_range("Series: coefficient index");
        return c_[i];
    }

    void set_coeff(int i, S v) {
        if (i < 0 || i > order_) throw std::out_of_range("Series: coefficient index");
        c_[i] = std::move(v);
    }

    bool is_zero() const {
        for (const S& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    // index of first nonzero coefficient; order()+1 when identically zero
    int valuation() const {
        for (int i = 0; i <= order_; ++i)
            if (!c_[i].is_zero()) return i;
        return order_ + 1;
    }

    Series truncate(int new_order) const {
        if (new_order > order_) throw std::invalid_argument("Series: cannot extend order");
        Series r(new_order);
        for (int i = 0; i <= new_order; ++i) r.c_[i] = c_[i];
        return r;
    }

    friend Series operator+(const Series& a, const Series& b) {
        Series r(std::min(a.order_, b.order_));
        for (int i = 0; i <= r.order_; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }

    friend Series operator-(const Series& a, const Series& b) {
        Series r(std::min(a.order_, b.order_));
        for (int i = 0; i <= r.order_; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }

    Series operator-() const {
        Series r(order_);
        for (int i = 0; i <= order_; ++i) r.c_[i] = S(0) - c_[i];
        return r;
    }

    friend Series operator*(const Series& a, const Series& b) {
        Series r(std::min(a.order_, b.order_));
        for (int i = 0; i <= r.order_; ++i) {
            S acc(0);
            for (int j = 0; j <= i; ++j) acc += a.c_[j] * b.c_[i - j];
            r.c_[i] = std::move(acc);
        }
        return r;
    }

    friend Series operator*(const S& s, const Series& a) {
        Series r(a.order_);
        for (int i = 0; i <= a.order_; ++i) r.c_[i] = s * a.c_[i];
        return r;
    }

    // q with q*den == num through the carried order; den(0) must be nonzero
    friend Series operator/(const Series& num, const Series& den) {
        if (den.c_[0].is_zero())
            throw std::domain_error("Series: division by series with zero constant term");
        Series q(std::min(num.order_, den.order_));
        for (int i = 0; i <= q.order_; ++i) {
            S acc = num.c_[i];
            for (int j = 1; j <= i; ++j) acc -= den.c_[j] * q.c_[i - j];
            q.c_[i] = acc / den.c_[0];
        }
        return q;
    }

    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }
    Series& operator/=(const Series& o) { return *this = *this / o; }

    // multiply by x^k, order preserved
    Series shift_up(int k) const {
        Series r(order_);
        for (int i = order_; i >= k; --i) r.c_[i] = c_[i - k];
        return r;
    }

    // divide by x^k; the k low coefficients must vanish; order drops by k
    Series shift_down(int k) const {
        if (k > order_) throw std::invalid_argument("Series: shift_down beyond order");
        for (int i = 0; i < k; ++i)
            if (!c_[i].is_zero())
                throw std::domain_error("Series: shift_down with nonzero low coefficient");
        Series r(order_ - k);
        for (int i = 0; i <= r.order_; ++i) r.c_[i] = c_[i + k];
        return r;
    }

    Series pow(unsigned e) const {
        Series acc = one(order_), base = *this;
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    template <class T>
    Series<T> map(const std::function<T(const S&)>& f) const {
        Series<T> r(order_);
        for (int i = 0; i <= order_; ++i) r.set_coeff(i, f(c_[i]));
        return r;
    }

    bool agrees_with(const Series& o, int through) const {
        if (through > order_ || through > o.order_) return false;
        for (int i = 0; i <= through; ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }

    friend bool operator==(const Series& a, const Series& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }

private:
    int order_;
    std::vector<S> c_;
};

// r with r*r == s, branch r(0) = +sqrt(s(0)); the constant term must be a
// perfect square in the scalar field.
template <class S>
Series<S> series_sqrt(const Series<S>& s) {
    S r0 = scalar_sqrt(s.coeff(0));
    if (r0.is_zero()) throw std::domain_error("series_sqrt: zero constant term");
    Series<S> r(s.order());
    r.set_coeff(0, r0);
    S two_r0 = S(2) * r0;
    for (int n = 1; n <= s.order(); ++n) {
        S acc = s.coeff(n);
        for (int j = 1; j < n; ++j) acc -= r.coeff(j) * r.coeff(n - j);
        r.set_coeff(n, acc / two_r0);
    }
    return r;
}

// num/den when den has a zero constant term: both are shifted down by the
// valuation of den first. num must vanish to at least that depth.
template <class S>
Series<S> laurent_div(const Series<S>& num, const Series<S>& den) {
    int v = den.valuation();
    if (v > den.order()) throw std::domain_error("laurent_div: zero denominator");
    if (v == 0) return num / den;
    return num.shift_down(v) / den.shift_down(v);
}

// Catalan numbers 1,1,2,5,14,...; built from the closed form and checked
// against the convolution recurrence C_{n+1} = sum C_i C_{n-i}.
inline Series<Rational> catalan_series(int order) {
    Series<Rational> c(order);
    BigInt binom(1);  // binom(2n, n)
    for (int n = 0; n <= order; ++n) {
        if (n > 0) {
            // binom(2n,n) = binom(2n-2,n-1) * (2n-1)*2n / n^2
            binom = binom * BigInt(2 * n - 1) * BigInt(2 * n);
            binom = BigInt::exact_div(binom, BigInt(static_cast<long long>(n) * n));
        }
        c.set_coeff(n, Rational(BigInt::exact_div(binom, BigInt(n + 1))));
    }
    for (int n = 0; n < order; ++n) {
        Rational conv(0);
        for (int i = 0; i <= n; ++i) conv += c.coeff(i) * c.coeff(n - i);
        if (!(conv == c.coeff(n + 1)))
            throw std::logic_error("catalan_series: closed form and recurrence disagree");
    }
    return c;
}

// Solves for the series F with F(0) = f0 in either
//   fixed-point form:  F = sum_k poly[k] * F^k, or
//   root form:         0 = sum_k poly[k] * F^k,
// by order-by-order coefficient extraction. Requires a simple root at the
// origin: the derivative of the defining equation w.r.t. F must be a unit.
template <class S>
Series<S> solve_algebraic(const std::vector<Series<S>>& poly, const S& f0, int order,
                          bool fixed_point = true) {
    if (poly.empty()) throw std::invalid_argument("solve_algebraic: empty polynomial");
    const int deg = static_cast<int>(poly.size()) - 1;
    for (const auto& p : poly)
        if (p.order() < order) throw std::invalid_argument("solve_algebraic: coefficient order too low");

    // G(F) := sum poly_k F^k - [fixed_point] * F, want G(F) = 0
    auto eval_g = [&](const Series<S>& f, int ord) {
        Series<S> acc = poly[deg].truncate(ord);
        Series<S> ft = f.truncate(ord);
        for (int k = deg - 1; k >= 0; --k) acc = acc * ft + poly[k].truncate(ord);
        if (fixed_point) acc -= ft;
        return acc;
    };

    // validity of f0 and simplicity of the root, both at x = 0
    S g0(0), gp0(0), fpow(1);
    for (int k = 0; k <= deg; ++k) {
        g0 += poly[k].coeff(0) * fpow;
        if (k + 1 <= deg) gp0 += S(k + 1) * poly[k + 1].coeff(0) * fpow;
        fpow *= f0;
    }
    if (fixed_point) {
        g0 -= f0;
        gp0 -= S(1);
    }
    if (!g0.is_zero())
        throw std::domain_error("solve_algebraic: f0 does not satisfy the equation at x=0");
    if (gp0.is_zero())
        throw std::domain_error("solve_algebraic: root at origin is not simple");

    Series<S> f = Series<S>::constant(f0, order);
    for (int n = 1; n <= order; ++n) {
        // G(F_{<n}) agrees with G(F) below order n; the next coefficient is
        // forced linearly through gp0.
        Series<S> g = eval_g(f, n);
        f.set_coeff(n, S(0) - g.coeff(n) / gp0);
    }
    if (!eval_g(f, order).is_zero())
        throw std::domain_error("solve_algebraic: no series solution (residual does not vanish)");
    return f;
}

// Newton cross-check for solve_algebraic: same contract, different route.
template <class S>
Series<S> solve_algebraic_newton(const std::vector<Series<S>>& poly, const S& f0, int order,
                                 bool fixed_point = true) {
    const int deg = static_cast<int>(poly.size()) - 1;
    auto eval_g = [&](const Series<S>& f, int ord) {
        Series<S> acc = poly[deg].truncate(ord);
        Series<S> ft = f.truncate(ord);
        for (int k = deg - 1; k >= 0; --k) acc = acc * ft + poly[k].truncate(ord);
        if (fixed_point) acc -= ft;
        return acc;
    };
    auto eval_gprime = [&](const Series<S>& f, int ord) {
        Series<S> acc = Series<S>::constant(S(deg), ord) * poly[deg].truncate(ord);
        Series<S> ft = f.truncate(ord);
        for (int k = deg - 1; k >= 1; --k)
            acc = acc * ft + Series<S>::constant(S(k), ord) * poly[k].truncate(ord);
        if (fixed_point) acc -= Series<S>::one(ord);
        return acc;
    };
    Series<S> f = Series<S>::constant(f0, order);
    // each sweep is a full-order Newton step; order+1 steps certainly converge
    for (int it = 0; it <= order; ++it) {
        Series<S> g = eval_g(f, order), gp = eval_gprime(f, order);
        Series<S> next = f - g / gp;
        if (next == f) break;
        f = next;
    }
    if (!eval_g(f, order).is_zero())
        throw std::domain_error("solve_algebraic_newton: did not converge");
    return f;
}

}  // namespace pav
