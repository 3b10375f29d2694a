// Evaluators for the explicit counting formulas and recurrences behind census
// cases 74, 125, 149 and 185, plus the 123-avoider refinements they consume.
// Everything is exact BigInt arithmetic; where two forms of the same quantity
// exist (a sum and its closed form, or two recurrences) both are computed and
// a mismatch raises IntegrityError.
//
// Range convention: a family evaluates to 0 for any n where its class of
// permutations is empty; binomials vanish outside 0 <= k <= n.

#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "pav/bigint.hpp"
#include "pav/series.hpp"

namespace pav {

class IntegrityError : public std::logic_error {
public:
    explicit IntegrityError(const std::string& what) : std::logic_error(what) {}
};

namespace formulas {

inline const BigInt& binom(int n, int k) {
    static const BigInt zero(0);
    if (k < 0 || n < 0 || k > n) return zero;
    constexpr int kMax = 160;
    if (n > kMax) throw std::invalid_argument("binom: argument too large");
    static std::vector<std::vector<BigInt>> table = [] {
        std::vector<std::vector<BigInt>> t(kMax + 1);
        t[0] = {BigInt(1)};
        for (int r = 1; r <= kMax; ++r) {
            t[r].resize(r + 1);
            t[r][0] = t[r][r] = BigInt(1);
            for (int c = 1; c < r; ++c) t[r][c] = t[r - 1][c - 1] + t[r - 1][c];
        }
        return t;
    }();
    return table[n][k];
}

inline BigInt pow2(int e) {
    if (e < 0) throw std::invalid_argument("pow2: negative exponent");
    return BigInt::pow2(static_cast<unsigned>(e));
}

// coeff * 2^e where the exponent may only be negative if the coefficient
// vanishes (several sums carry such formally-zero terms at their range edge)
inline BigInt term_pow2(const BigInt& coeff, int e) {
    if (coeff.is_zero()) return BigInt(0);
    return coeff * pow2(e);
}

inline const BigInt& catalan(int n) {
    static const BigInt zero(0);
    if (n < 0) return zero;
    constexpr int kMax = 64;
    if (n > kMax) throw std::invalid_argument("catalan: argument too large");
    static std::vector<BigInt> table = [] {
        std::vector<BigInt> t(kMax + 1);
        t[0] = BigInt(1);
        for (int m = 1; m <= kMax; ++m) {
            BigInt acc(0);
            for (int i = 0; i < m; ++i) acc += t[i] * t[m - 1 - i];
            t[m] = acc;
        }
        return t;
    }();
    return table[n];
}

// ---- 123-avoider refinements ------------------------------------------------

// number of 123-avoiders of length n with first letter i
inline BigInt catalan_refined_first_letter(int n, int i) {
    if (n < 1 || i < 1 || i > n)
        throw std::invalid_argument("catalan_refined_first_letter: out of range");
    BigInt acc = binom(n + i - 2, n - 1);
    for (int m = 0; m <= std::min(n - 1, i - 2); ++m)
        acc -= catalan(m) * binom(n + i - 2 * m - 3, n - m - 1);
    return acc;
}

// number of 123-avoiders of length a with leftmost ascent at index i; the
// decreasing permutation counts as ascent index a
inline BigInt catalan_refined_ascent_index(int a, int i) {
    if (a < 1 || i < 1 || i > a)
        throw std::invalid_argument("catalan_refined_ascent_index: out of range");
    if (i == a) return BigInt(1);
    BigInt acc(0);
    for (int j = 1; j <= a - i; ++j)
        acc += binom(a - j, i - 1) * catalan_refined_first_letter(a - i, j);
    return acc;
}

// ---- case 74: {1234,1243,3412} ----------------------------------------------

// first letter <= n-2, leftmost ascent top n, IDS not a consecutive set;
// computed as both the triple sum and the closed form
inline BigInt case74_b(int n) {
    if (n <= 4) return BigInt(0);
    BigInt sum(0);
    for (int a = 1; a <= n - 4; ++a)
        for (int b = a + 2; b <= n - 2; ++b)
            for (int m = 2; m <= b - a; ++m)
                sum += binom(b - a - 1, m - 2) *
                       (BigInt(b - m + 1) * BigInt(n - b - 1) + binom(n - b - 2, 2));
    BigInt closed = BigInt::exact_div(
        BigInt(n - 2) * (BigInt(3) * pow2(n) -
                         BigInt(n - 1) * BigInt(1LL * n * n - 3 * n + 12)),
        BigInt(12));
    if (sum != closed)
        throw IntegrityError("case74_b: sum and closed form disagree at n=" + std::to_string(n));
    return sum;
}

// first letter <= n-2, leftmost ascent top n, IDS a consecutive set
inline BigInt case74_ids2(int n) {
    if (n < 3) return BigInt(0);
    return BigInt(n - 5) * pow2(n - 1) + binom(n + 1, 2) + BigInt(3);
}

// first letter <= n-2, leftmost ascent top n-1
inline BigInt case74_d(int n) {
    if (n < 3) return BigInt(0);
    return BigInt(n + 8) * pow2(n - 3) + BigInt(1) - binom(n + 2, 2) -
           BigInt::exact_div(BigInt(n - 1) * BigInt(n - 2) * BigInt(2 * n - 3), BigInt(6));
}

// |S_n(T)|, via both stated recurrences
inline BigInt case74_a(int n) {
    if (n < 0) throw std::invalid_argument("case74_a: negative n");
    static std::mutex mu;
    static std::vector<BigInt> memo{BigInt(1), BigInt(1)};
    std::scoped_lock lock(mu);
    for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
        BigInt via_parts = memo[m - 1] + BigInt(2 * m - 9) * pow2(m - 2) + BigInt(3) +
                           binom(m + 1, 2) + case74_b(m);
        for (int j = 0; j <= m - 3; ++j) via_parts += case74_d(m - j);
        BigInt via_simplified =
            memo[m - 1] + BigInt(m - 1) * pow2(m) -
            BigInt::exact_div(
                BigInt(m - 1) * BigInt(1LL * m * m * m - 3LL * m * m + 14 * m - 6), BigInt(6));
        if (via_parts != via_simplified)
            throw IntegrityError("case74_a: recurrences disagree at n=" + std::to_string(m));
        memo.push_back(via_parts);
    }
    return memo[n];
}

// ---- case 125: {1243,2341,4123} ----------------------------------------------

// avoiders of length m starting (m-1) a m, expressed through C'_{a-1,i}
inline BigInt case125_uprime(int m, int a) {
    if (a < 2 || a > m - 2) throw std::invalid_argument("case125_uprime: out of range");
    BigInt acc(0);
    for (int i = 1; i <= a - 1; ++i)
        acc += binom(i + m - 2 - a, i) * catalan_refined_ascent_index(a - 1, i);
    return acc;
}

// starts with n-1, leftmost ascent (a, n) with a >= 2
inline BigInt case125_u(int n) {
    if (n < 3) return BigInt(0);
    BigInt acc = catalan(n - 2);
    for (int a = 2; a <= n - 2; ++a)
        for (int t = 0; t <= n - 2 - a; ++t)
            acc += binom(n - 2 - a, t) * case125_uprime(n - t, a);
    return acc;
}

// leftmost ascent (a, n) with a >= 2
inline BigInt case125_b(int n) {
    if (n < 0) throw std::invalid_argument("case125_b: negative n");
    static std::mutex mu;
    static std::vector<BigInt> memo{BigInt(0), BigInt(0), BigInt(0)};
    std::scoped_lock lock(mu);
    for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
        BigInt acc = memo[m - 1] + case125_u(m) + pow2(m - 3) - BigInt(m) + BigInt(2) +
                     binom(m - 2, 4);
        for (int j = 0; j <= m - 4; ++j)
            for (int i = 1; i <= m - 3 - j; ++i)
                acc += binom(m - 2 - i, j + 1) * catalan_refined_first_letter(m - 2 - j, i);
        memo.push_back(acc);
    }
    return memo[n];
}

// not starting with n, leftmost ascent (a, n-1) with 2 <= a <= n-2
inline BigInt case125_d(int n) {
    if (n < 0) throw std::invalid_argument("case125_d: negative n");
    static std::mutex mu;
    static std::vector<BigInt> memo{BigInt(0), BigInt(0), BigInt(0), BigInt(0), BigInt(1)};
    std::scoped_lock lock(mu);
    for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
        BigInt acc = memo[m - 1] + case125_b(m - 1) - case125_b(m - 2) + binom(m - 3, 2);
        for (int a = 3; a <= m - 3; ++a)
            for (int l = 0; l <= m - 3 - a; ++l)
                for (int k = 1; k <= m - 2 - a - l; ++k)
                    acc += binom(m - 5 - l - k, a - 3) * BigInt(k);
        memo.push_back(acc);
    }
    return memo[n];
}

// not starting with n, leftmost ascent (a, b) with 2 <= a < b <= n-2
inline BigInt case125_e(int n) {
    if (n < 0) throw std::invalid_argument("case125_e: negative n");
    static std::mutex mu;
    static std::vector<BigInt> memo{BigInt(0), BigInt(0), BigInt(0), BigInt(0)};
    std::scoped_lock lock(mu);
    for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
        BigInt acc = memo[m - 1] + case125_d(m - 1) + catalan(m - 2) - pow2(m - 3);
        for (int i = 3; i <= m - 2; ++i) acc += case125_d(i + 1) - case125_b(i);
        memo.push_back(acc);
    }
    return memo[n];
}

// not starting with n, leftmost ascent bottom 1
inline BigInt case125_g(int n) {
    if (n < 0) throw std::invalid_argument("case125_g: negative n");
    static std::mutex mu;
    static std::vector<BigInt> memo{BigInt(0), BigInt(0), BigInt(1)};
    std::scoped_lock lock(mu);
    for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
        BigInt acc = memo[m - 1] + BigInt(5) * pow2(m - 3) + binom(m - 1, 4) - BigInt(m);
        for (int k = 3; k <= m - 1; ++k) acc += binom(m - k + 1, 2) * pow2(k - 3);
        memo.push_back(acc);
    }
    return memo[n];
}

inline BigInt case125_a(int n) {
    if (n <= 1) return BigInt(1);
    return case125_b(n) + case125_d(n) + case125_e(n) + case125_g(n) + catalan(n - 1);
}

// ---- case 149: {1234,3412,4123} ----------------------------------------------

// |S_n({123,3412})|, expanded from the closed-form generating function
inline BigInt case149_e(int n) {
    if (n < 0) return BigInt(0);
    static std::mutex mu;
    static Series<Rational> cache = Series<Rational>::one(0);
    std::scoped_lock lock(mu);
    if (cache.order() < n) {
        int ord = std::max(n, 2 * cache.order());
        auto one_minus_x = Series<Rational>::poly({1, -1}, ord);
        auto num = Series<Rational>::poly({1, -4, 7, -5, 2}, ord);
        auto den = one_minus_x.pow(4) * Series<Rational>::poly({1, -2}, ord);
        cache = Series<Rational>::one(ord) +
                (Series<Rational>::poly({0, 1}, ord) * num) / den;
    }
    return cache.coeff(n).to_bigint();
}

// members of E_n whose final letter is in no occurrence of 231
inline BigInt case149_e_star(int n) {
    if (n < 1) return n == 0 ? BigInt(1) : BigInt(0);
    return pow2(n - 1);
}

inline BigInt case149_e_star_nl(int n, int l) {
    if (n < 1 || l < 1 || l > n) return BigInt(0);
    if (l == n) return BigInt(1);
    return pow2(n - l - 1);
}

// members of E_{n,l} whose leftmost ascent top is n
inline BigInt case149_eprime_nl(int n, int l) {
    if (n < 2 || l < 1 || l > n - 1) return BigInt(0);
    if (l == n - 1) return BigInt(n - 1);
    BigInt acc = binom(n - 1, l - 1);
    for (int b = 2; b <= l; ++b)
        for (int i = 1; i <= b - 1; ++i)
            for (int r = l + 1 - i; r <= n - 1 - b; ++r)
                acc += binom(r - 2 - l + b, b - 1 - i);
    for (int b = l + 1; b <= n - 1; ++b)
        for (int i = 1; i <= l; ++i)
            for (int r = l + 1 - i; r <= n - 1 - b; ++r)
                acc += binom(r - 2 - l + b, b - 1 - i);
    return acc;
}

// members of E_n whose final decreasing run has length l
inline BigInt case149_e_nl(int n, int l) {
    if (n < 1 || l < 1 || l > n) return BigInt(0);
    if (l == n) return BigInt(1);
    BigInt acc(0);
    for (int m = 0; m <= n - 1 - l; ++m) acc += case149_eprime_nl(n - m, l);
    return acc;
}

// two left-right maxima with the segment before n decreasing
inline BigInt case149_g(int n) {
    if (n < 2) return BigInt(0);
    if (n == 2) return BigInt(1);
    BigInt acc = BigInt(3 - n) * pow2(n - 3) - BigInt(1);
    for (int a = 1; a <= n - 2; ++a) acc += pow2(a - 1) * case149_e(n - 1 - a);
    for (int a = 2; a <= n - 1; ++a)
        acc += (pow2(n - 1 - a) - BigInt(1) - binom(n - a, 2)) *
               term_pow2(BigInt(a - 1), a - 2);
    for (int i = 0; i <= n - 2; ++i) acc += binom(n - 1 + i, 2 * i + 1);
    for (int a = 2; a <= n - 3; ++a)
        for (int l = 1; l <= n - 2 - a; ++l)
            for (int i = 0; i <= a - 1; ++i)
                acc += pow2(n - 2 - a - l) * binom(a - 1, i) * binom(l + i, i);
    return acc;
}

// exactly two left-right maxima
inline BigInt case149_b(int n) {
    if (n < 2) return BigInt(0);
    if (n == 2) return BigInt(1);
    BigInt acc = BigInt(7 - n) * pow2(n - 3) - BigInt(2);
    for (int a = 1; a <= n - 2; ++a) acc += pow2(a - 1) * case149_e(n - 1 - a);
    for (int a = 2; a <= n - 3; ++a)
        for (int l = 1; l <= n - 2 - a; ++l)
            for (int i = 0; i <= a - 1; ++i)
                acc += pow2(n - 2 - a - l) * binom(a - 1, i) * binom(l + i, i);
    for (int a = 2; a <= n - 1; ++a)
        acc += (pow2(n - 1 - a) - BigInt(1) - binom(n - a, 2)) *
               term_pow2(BigInt(a - 1), a - 2);
    for (int a = 3; a <= n - 1; ++a)
        for (int l = 1; l <= a - 2; ++l)
            for (int j = 0; j <= l; ++j)
                acc += binom(n - 1 - a + j, j) * case149_e_nl(a - 1, l);
    return acc;
}

// left-right maxima exactly the values {a, b, n}
inline BigInt case149_d_ab(int n, int a, int b) {
    if (!(1 <= a && a < b && b <= n - 1))
        throw std::invalid_argument("case149_d_ab: need 1 <= a < b <= n-1");
    BigInt acc = (pow2(a - 1) + binom(a, 2)) * (pow2(b - 1 - a) - BigInt(b - a));
    acc += (term_pow2(BigInt(a - 1), a - 2) - binom(a, 2)) * (pow2(b - 1 - a) - BigInt(1));
    for (int j = 0; j <= a - 1; ++j)
        acc += (binom(a - 1, j) - BigInt(1)) * binom(n - b + j, j);
    for (int j = 0; j <= a - 1; ++j)
        for (int r = 0; r <= b - 2 - a; ++r)
            acc += (binom(a - 1, j) - BigInt(1)) * binom(n - 3 - r - j, n - 1 - b);
    for (int j = 0; j <= a - 1; ++j)
        for (int i = 0; i <= j; ++i)
            for (int r = 0; r <= b - 1 - a; ++r)
                acc += binom(i + r, i) * binom(n - 2 + j - i - a - r, n - 1 - b);
    return acc;
}

// exactly three left-right maxima
inline BigInt case149_d(int n) {
    if (n < 3) return BigInt(0);
    BigInt acc(0);
    for (int a = 1; a <= n - 2; ++a)
        for (int b = a + 1; b <= n - 1; ++b) acc += case149_d_ab(n, a, b);
    return acc;
}

inline BigInt case149_a(int n) {
    if (n <= 1) return BigInt(1);
    return case149_b(n) + case149_d(n) + case149_e(n - 1);
}

// ---- case 185: {1234,2341,4123} ----------------------------------------------

// u_n is shared with case 125: the defining classes coincide value-for-value

// leftmost ascent (a, n) with a >= 2
inline BigInt case185_b(int n) {
    if (n < 0) throw std::invalid_argument("case185_b: negative n");
    static std::mutex mu;
    static std::vector<BigInt> memo{BigInt(0), BigInt(0), BigInt(0)};
    std::scoped_lock lock(mu);
    for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
        BigInt acc = memo[m - 1] + case125_u(m) + term_pow2(BigInt(m - 3), m - 4) +
                     binom(m - 2, 5) - binom(m - 2, 2);
        for (int j = 0; j <= m - 4; ++j)
            for (int i = 1; i <= m - 3 - j; ++i)
                acc += binom(m - i - 2, j + 1) * catalan_refined_first_letter(m - 2 - j, i);
        memo.push_back(acc);
    }
    return memo[n];
}

// not starting with n, leftmost ascent (a, n-1) with 2 <= a <= n-2
inline BigInt case185_d(int n) {
    if (n < 0) throw std::invalid_argument("case185_d: negative n");
    static std::mutex mu;
    static std::vector<BigInt> memo{BigInt(0), BigInt(0), BigInt(0), BigInt(0), BigInt(1)};
    std::scoped_lock lock(mu);
    for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
        BigInt acc = memo[m - 1] + case185_b(m - 1) - case185_b(m - 2) + binom(m - 3, 2) -
                     binom(m - 3, 5);
        for (int a = 3; a <= m - 3; ++a)
            for (int l = 0; l <= m - 3 - a; ++l)
                for (int k = 1; k <= m - 2 - a - l; ++k)
                    acc += binom(m - 5 - l - k, a - 3) * BigInt(k);
        memo.push_back(acc);
    }
    return memo[n];
}

// e-class members whose V-subsequence decreases with an element right of n
inline BigInt case185_v(int n) {
    if (n < 6) return BigInt(0);
    BigInt acc = pow2(n - 2) - binom(n - 1, 3) - BigInt(n) + BigInt(1);
    for (int a = 2; a <= n - 4; ++a)
        for (int l = 1; l <= n - 3 - a; ++l)
            acc += binom(n, a + l + 2) - binom(n - 1 - l, a + 1);
    return acc;
}

// e-class members whose V-subsequence is not decreasing
inline BigInt case185_w(int n) {
    if (n < 7) return BigInt(0);
    BigInt acc = pow2(n - 2) - BigInt(1) - binom(n - 1, 2) - binom(n - 1, 4) +
                 BigInt(4) * binom(n - 6, 2) + binom(n - 5, 3);
    for (int a = 2; a <= n - 6; ++a)
        for (int b = a + 4; b <= n - 2; ++b)
            acc += BigInt(b - 5 - a) * pow2(b - 2 - a);
    return acc;
}

// not starting with n, leftmost ascent (a, b) with 2 <= a < b <= n-2
inline BigInt case185_e(int n) {
    if (n < 5) return BigInt(0);
    if (n == 5) return BigInt(2);
    BigInt acc = case185_v(n) + case185_w(n) + catalan(n - 2) - BigInt(3) * pow2(n - 3) +
                 BigInt(1);
    for (int l = 1; l <= n - 2; ++l) acc += catalan(l);
    return acc;
}

// not starting with n, leftmost ascent bottom 1
inline BigInt case185_g(int n) {
    if (n < 0) throw std::invalid_argument("case185_g: negative n");
    static std::mutex mu;
    static std::vector<BigInt> memo{BigInt(0), BigInt(0), BigInt(1)};
    std::scoped_lock lock(mu);
    for (int m = static_cast<int>(memo.size()); m <= n; ++m)
        memo.push_back(memo[m - 1] + catalan(m - 1) + BigInt(m + 1) * pow2(m - 3) -
                       binom(m, 3) - BigInt(m));
    return memo[n];
}

inline BigInt case185_a(int n) {
    if (n <= 1) return BigInt(1);
    return case185_b(n) + case185_d(n) + case185_e(n) + case185_g(n) + catalan(n - 1);
}

// ---- dispatch by (case, family name) ------------------------------------------

inline BigInt family_value(int case_id, const std::string& name, int n) {
    switch (case_id) {
        case 74:
            if (name == "b") return case74_b(n);
            if (name == "ids2") return case74_ids2(n);
            if (name == "d") return case74_d(n);
            if (name == "a") return case74_a(n);
            break;
        case 125:
            if (name == "u") return case125_u(n);
            if (name == "b") return case125_b(n);
            if (name == "d") return case125_d(n);
            if (name == "e") return case125_e(n);
            if (name == "g") return case125_g(n);
            if (name == "a") return case125_a(n);
            break;
        case 149:
            if (name == "e") return case149_e(n);
            if (name == "estar") return case149_e_star(n);
            if (name == "g") return case149_g(n);
            if (name == "b") return case149_b(n);
            if (name == "d") return case149_d(n);
            if (name == "a") return case149_a(n);
            break;
        case 185:
            if (name == "u") return case125_u(n);
            if (name == "b") return case185_b(n);
            if (name == "d") return case185_d(n);
            if (name == "v") return case185_v(n);
            if (name == "w") return case185_w(n);
            if (name == "e") return case185_e(n);
            if (name == "g") return case185_g(n);
            if (name == "a") return case185_a(n);
            break;
        default:
            break;
    }
    throw std::invalid_argument("unknown formula family " + std::to_string(case_id) + "." + name);
}

inline std::vector<std::string> family_names(int case_id) {
    switch (case_id) {
        case 74: return {"b", "ids2", "d", "a"};
        case 125: return {"u", "b", "d", "e", "g", "a"};
        case 149: return {"e", "estar", "g", "b", "d", "a"};
        case 185: return {"u", "b", "d", "v", "w", "e", "g", "a"};
        default: return {};
    }
}

}  // namespace formulas
}  // namespace pav
