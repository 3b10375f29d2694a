// Arbitrary-precision signed integers.
//
// Counting sequences and exact series coefficients outgrow int64 quickly
// (Catalan convolutions, binomial sums), so everything countable in this
// library flows through BigInt. Base 2^32 limbs, schoolbook arithmetic;
// operand sizes here stay under a few hundred bits, so no fast multiplication
// is needed.

#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pav {

class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // avoid UB on LLONG_MIN
        unsigned long long m = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                     : static_cast<unsigned long long>(v);
        while (m != 0) {
            mag_.push_back(static_cast<uint32_t>(m & 0xFFFFFFFFULL));
            m >>= 32;
        }
    }

    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(std::string_view s) {
        bool neg = false;
        size_t i = 0;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: empty literal");
        BigInt r;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
            r = r * BigInt(10) + BigInt(s[i] - '0');
        }
        if (neg) r.negate();
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    void negate() { sign_ = -sign_; }

    BigInt operator-() const {
        BigInt r = *this;
        r.negate();
        return r;
    }

    BigInt abs() const { return sign_ < 0 ? -*this : *this; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        if (a.sign_ >= 0) return cmp_mag(a.mag_, b.mag_);
        return cmp_mag(b.mag_, a.mag_);
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
            return r;
        }
        auto c = cmp_mag(a.mag_, b.mag_);
        if (c == std::strong_ordering::equal) return BigInt();
        if (c == std::strong_ordering::greater) {
            r.mag_ = sub_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            r.mag_ = sub_mag(b.mag_, a.mag_);
            r.sign_ = b.sign_;
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.mag_ = mul_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // Truncated division (C++ semantics): q rounds toward zero, r has the
    // sign of the dividend, a == q*b + r.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        if (cmp_mag(a.mag_, b.mag_) == std::strong_ordering::less) {
            q = BigInt();
            r = a;
            return;
        }
        std::vector<uint32_t> qm, rm;
        divmod_mag(a.mag_, b.mag_, qm, rm);
        q.mag_ = std::move(qm);
        q.trim();
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.mag_ = std::move(rm);
        r.trim();
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }

    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    // Division that must be exact; throws if a remainder survives.
    static BigInt exact_div(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        if (!r.is_zero()) throw std::domain_error("BigInt: inexact division");
        return q;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.mag_.empty() ? 0 : 1;
        b.sign_ = b.mag_.empty() ? 0 : 1;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    static BigInt pow2(unsigned k) {
        BigInt r;
        r.sign_ = 1;
        r.mag_.assign(k / 32 + 1, 0);
        r.mag_.back() = 1u << (k % 32);
        return r;
    }

    BigInt pow(unsigned e) const {
        BigInt base = *this, acc(1);
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    bool fits_int64() const {
        static const BigInt lo = BigInt::from_string("-9223372036854775808");
        static const BigInt hi = BigInt::from_string("9223372036854775807");
        return *this >= lo && *this <= hi;
    }

    long long to_int64() const {
        if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
        unsigned long long m = 0;
        for (size_t i = mag_.size(); i-- > 0;) m = (m << 32) | mag_[i];
        return sign_ < 0 ? -static_cast<long long>(m) : static_cast<long long>(m);
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<uint32_t> m = mag_;
        std::string out;
        while (!m.empty()) {
            uint64_t rem = 0;
            for (size_t i = m.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            char buf[10];
            for (int k = 0; k < 9; ++k) {
                buf[k] = static_cast<char>('0' + rem % 10);
                rem /= 10;
            }
            // inner chunks are zero-padded, the most significant one is not
            int len = m.empty() ? 0 : 9;
            if (m.empty()) {
                len = 9;
                while (len > 1 && buf[len - 1] == '0') --len;
            }
            for (int k = 0; k < len; ++k) out.push_back(buf[k]);
        }
        if (sign_ < 0) out.push_back('-');
        std::reverse(out.begin(), out.end());
        return out;
    }

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;  // little-endian, no high zero limbs

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    static std::strong_ordering cmp_mag(const std::vector<uint32_t>& a,
                                        const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() <=> b.size();
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& sml = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r(big.size() + 1, 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < big.size(); ++i) {
            uint64_t cur = carry + big[i] + (i < sml.size() ? sml[i] : 0);
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        r.back() = static_cast<uint32_t>(carry);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a.size(), 0);
        int64_t borrow = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            int64_t cur = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
            borrow = cur < 0;
            if (cur < 0) cur += (1LL << 32);
            r[i] = static_cast<uint32_t>(cur);
        }
        assert(borrow == 0);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a.size() + b.size(), 0);
        for (size_t i = 0; i < a.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(a[i]) * b[j] + r[i + j] + carry;
                r[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            r[i + b.size()] = static_cast<uint32_t>(carry);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::vector<uint32_t> shl_bits(const std::vector<uint32_t>& a, int s) {
        if (s == 0) return a;
        std::vector<uint32_t> r(a.size() + 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            r[i] |= a[i] << s;
            r[i + 1] = a[i] >> (32 - s);
        }
        return r;  // caller trims
    }

    // Knuth algorithm D on magnitudes; requires |u| >= |v|, v nonzero.
    static void divmod_mag(const std::vector<uint32_t>& u, const std::vector<uint32_t>& v,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
        if (v.size() == 1) {
            uint64_t d = v[0], rem = 0;
            q.assign(u.size(), 0);
            for (size_t i = u.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | u[i];
                q[i] = static_cast<uint32_t>(cur / d);
                rem = cur % d;
            }
            r.clear();
            if (rem) r.push_back(static_cast<uint32_t>(rem));
            return;
        }
        int s = 0;
        for (uint32_t top = v.back(); !(top & 0x80000000u); top <<= 1) ++s;
        std::vector<uint32_t> vn = shl_bits(v, s);
        while (vn.size() > v.size()) vn.pop_back();  // top bits fit
        std::vector<uint32_t> un = shl_bits(u, s);
        if (un.size() == u.size()) un.push_back(0);
        const size_t n = vn.size();
        const size_t m = un.size() - 1 - n;
        q.assign(m + 1, 0);
        for (size_t j = m + 1; j-- > 0;) {
            uint64_t num = (static_cast<uint64_t>(un[j + n]) << 32) | un[j + n - 1];
            uint64_t qhat = num / vn[n - 1];
            uint64_t rhat = num % vn[n - 1];
            while (qhat > 0xFFFFFFFFULL ||
                   qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
                --qhat;
                rhat += vn[n - 1];
                if (rhat > 0xFFFFFFFFULL) break;
            }
            // multiply-subtract qhat*vn from un[j .. j+n]
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * vn[i] + carry;
                carry = p >> 32;
                int64_t sub = static_cast<int64_t>(un[i + j]) -
                              static_cast<int64_t>(p & 0xFFFFFFFFULL) - borrow;
                borrow = sub < 0;
                if (sub < 0) sub += (1LL << 32);
                un[i + j] = static_cast<uint32_t>(sub);
            }
            int64_t top = static_cast<int64_t>(un[j + n]) - static_cast<int64_t>(carry) - borrow;
            if (top < 0) {
                // qhat was one too large: add vn back
                --qhat;
                uint64_t c2 = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t cur = static_cast<uint64_t>(un[i + j]) + vn[i] + c2;
                    un[i + j] = static_cast<uint32_t>(cur);
                    c2 = cur >> 32;
                }
                top += static_cast<int64_t>(c2);
            }
            un[j + n] = static_cast<uint32_t>(top);
            q[j] = static_cast<uint32_t>(qhat);
        }
        // remainder = un[0..n) >> s
        r.assign(un.begin(), un.begin() + n);
        if (s) {
            for (size_t i = 0; i + 1 < r.size(); ++i)
                r[i] = (r[i] >> s) | (r[i + 1] << (32 - s));
            r.back() >>= s;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
};

inline std::string to_string(const BigInt& v) { return v.to_string(); }

}  // namespace pav
