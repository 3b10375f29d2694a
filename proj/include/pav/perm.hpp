// Permutations in one-line notation, classical pattern containment, and the
// structural statistics the refinement arguments run on (left-right maxima,
// leftmost ascent, initial descent sequence).
//
// Conventions: positions and sites are 1-based; the empty permutation is a
// valid value and avoids every pattern. Lengths are capped at kMaxLen, which
// comfortably covers every bound used by the enumeration oracles.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pav {

class Permutation {
public:
    static constexpr int kMaxLen = 15;

    Permutation() = default;

    explicit Permutation(const std::vector<int>& values) {
        if (values.size() > kMaxLen) throw std::invalid_argument("Permutation: too long");
        n_ = static_cast<uint8_t>(values.size());
        std::array<bool, kMaxLen + 1> seen{};
        for (int i = 0; i < n_; ++i) {
            int v = values[i];
            if (v < 1 || v > n_ || seen[v])
                throw std::invalid_argument("Permutation: not a bijection onto 1..n");
            seen[v] = true;
            v_[i] = static_cast<uint8_t>(v);
        }
    }

    // "24153" (digits) or "2,4,1,5,3"; the comma form is required past 9
    static Permutation parse(std::string_view s) {
        std::vector<int> vals;
        if (s.find(',') != std::string_view::npos) {
            int cur = 0;
            bool have = false;
            for (char ch : s) {
                if (ch == ',') {
                    if (!have) throw std::invalid_argument("Permutation: empty entry");
                    vals.push_back(cur);
                    cur = 0;
                    have = false;
                } else if (ch >= '0' && ch <= '9') {
                    cur = cur * 10 + (ch - '0');
                    have = true;
                } else {
                    throw std::invalid_argument("Permutation: bad character");
                }
            }
            if (!have) throw std::invalid_argument("Permutation: trailing comma");
            vals.push_back(cur);
        } else {
            for (char ch : s) {
                if (ch < '1' || ch > '9') throw std::invalid_argument("Permutation: bad digit");
                vals.push_back(ch - '0');
            }
        }
        return Permutation(vals);
    }

    static Permutation identity(int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = i + 1;
        return Permutation(v);
    }

    int size() const { return n_; }
    bool empty() const { return n_ == 0; }

    // 1-based value access
    int at(int pos) const {
        if (pos < 1 || pos > n_) throw std::out_of_range("Permutation: position");
        return v_[pos - 1];
    }

    // 0-based unchecked access for hot loops
    uint8_t operator[](int i) const { return v_[i]; }

    // child in the generating tree: insert n+1 at site (1..n+1)
    Permutation insert_max(int site) const {
        Permutation c;
        c.n_ = static_cast<uint8_t>(n_ + 1);
        for (int i = 0; i < site - 1; ++i) c.v_[i] = v_[i];
        c.v_[site - 1] = static_cast<uint8_t>(n_ + 1);
        for (int i = site - 1; i < n_; ++i) c.v_[i + 1] = v_[i];
        return c;
    }

    Permutation remove_max() const {
        Permutation c;
        c.n_ = static_cast<uint8_t>(n_ - 1);
        int j = 0;
        for (int i = 0; i < n_; ++i)
            if (v_[i] != n_) c.v_[j++] = v_[i];
        return c;
    }

    std::vector<int> values() const { return std::vector<int>(v_.begin(), v_.begin() + n_); }

    std::string to_string() const {
        std::string s;
        if (n_ == 0) return "()";
        for (int i = 0; i < n_; ++i) {
            if (n_ > 9 && i) s += ',';
            s += std::to_string(static_cast<int>(v_[i]));
        }
        return s;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        if (a.n_ != b.n_) return false;
        return std::equal(a.v_.begin(), a.v_.begin() + a.n_, b.v_.begin());
    }

    friend bool operator<(const Permutation& a, const Permutation& b) {
        return std::lexicographical_compare(a.v_.begin(), a.v_.begin() + a.n_,
                                            b.v_.begin(), b.v_.begin() + b.n_);
    }

private:
    std::array<uint8_t, kMaxLen> v_{};
    uint8_t n_ = 0;
};

namespace detail {

// four-nested-loop scan with positional pruning; host values h, pattern p
inline bool contains4(const Permutation& h, const Permutation& p) {
    const int n = h.size();
    if (n < 4) return false;
    for (int a = 0; a <= n - 4; ++a) {
        for (int b = a + 1; b <= n - 3; ++b) {
            if ((h[a] < h[b]) != (p[0] < p[1])) continue;
            for (int c = b + 1; c <= n - 2; ++c) {
                if ((h[a] < h[c]) != (p[0] < p[2])) continue;
                if ((h[b] < h[c]) != (p[1] < p[2])) continue;
                for (int d = c + 1; d <= n - 1; ++d) {
                    if ((h[a] < h[d]) == (p[0] < p[3]) && (h[b] < h[d]) == (p[1] < p[3]) &&
                        (h[c] < h[d]) == (p[2] < p[3]))
                        return true;
                }
            }
        }
    }
    return false;
}

}  // namespace detail

// true iff some subsequence of host is order-isomorphic to pattern
inline bool contains(const Permutation& host, const Permutation& pattern) {
    const int k = pattern.size();
    if (k == 0) return true;
    if (k > host.size()) return false;
    if (k == 4) return detail::contains4(host, pattern);
    // small-k backtracking over chosen host positions
    std::array<int, Permutation::kMaxLen> chosen{};
    const int n = host.size();
    int depth = 0;
    int start = 0;
    while (true) {
        bool advanced = false;
        for (int i = start; i <= n - (k - depth); ++i) {
            bool ok = true;
            for (int j = 0; j < depth && ok; ++j)
                ok = (host[chosen[j]] < host[i]) == (pattern[j] < pattern[depth]);
            if (!ok) continue;
            chosen[depth++] = i;
            if (depth == k) return true;
            start = i + 1;
            advanced = true;
            break;
        }
        if (!advanced) {
            if (depth == 0) return false;
            --depth;
            start = chosen[depth] + 1;
        }
    }
}

// (position, value) pairs of entries exceeding everything to their left
inline std::vector<std::pair<int, int>> left_right_maxima(const Permutation& p) {
    std::vector<std::pair<int, int>> out;
    int best = 0;
    for (int i = 1; i <= p.size(); ++i)
        if (p.at(i) > best) {
            best = p.at(i);
            out.emplace_back(i, best);
        }
    return out;
}

inline int num_lr_maxima(const Permutation& p) {
    int count = 0, best = 0;
    for (int i = 0; i < p.size(); ++i)
        if (p[i] > best) {
            best = p[i];
            ++count;
        }
    return count;
}

struct Ascent {
    int index;   // smallest j with p_j < p_{j+1}
    int bottom;  // p_j
    int top;     // p_{j+1}
};

inline std::optional<Ascent> leftmost_ascent(const Permutation& p) {
    for (int j = 1; j < p.size(); ++j)
        if (p.at(j) < p.at(j + 1)) return Ascent{j, p.at(j), p.at(j + 1)};
    return std::nullopt;
}

// maximal strictly decreasing prefix; requires a nonempty permutation
inline std::vector<int> initial_descent_sequence(const Permutation& p) {
    if (p.empty())
        throw std::invalid_argument("initial_descent_sequence: empty permutation");
    std::vector<int> out{p.at(1)};
    for (int j = 2; j <= p.size() && p.at(j) < p.at(j - 1); ++j) out.push_back(p.at(j));
    return out;
}

inline bool is_consecutive_interval(const std::set<int>& s) {
    if (s.empty()) return true;
    return *s.rbegin() - *s.begin() + 1 == static_cast<int>(s.size());
}

inline bool is_consecutive_interval(const std::vector<int>& vals) {
    if (vals.empty()) return true;
    int lo = vals[0], hi = vals[0];
    for (int v : vals) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return hi - lo + 1 == static_cast<int>(vals.size());
}

// A set of exactly three distinct 4-letter patterns; the unordered identity
// of an avoidance problem. Stored sorted for canonical comparisons.
class PatternTriple {
public:
    PatternTriple(Permutation a, Permutation b, Permutation c,
                  std::optional<int> case_id = std::nullopt)
        : case_id_(case_id) {
        p_ = {std::move(a), std::move(b), std::move(c)};
        for (const auto& p : p_)
            if (p.size() != 4)
                throw std::invalid_argument("PatternTriple: patterns must have length 4");
        std::sort(p_.begin(), p_.end());
        if (p_[0] == p_[1] || p_[1] == p_[2])
            throw std::invalid_argument("PatternTriple: patterns must be distinct");
    }

    // "1234,1243,3412"
    static PatternTriple parse(std::string_view s) {
        std::vector<std::string> parts;
        std::string cur;
        for (char ch : s) {
            if (ch == ',') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        parts.push_back(cur);
        if (parts.size() != 3)
            throw std::invalid_argument("PatternTriple: expected three comma-separated patterns");
        return PatternTriple(Permutation::parse(parts[0]), Permutation::parse(parts[1]),
                             Permutation::parse(parts[2]));
    }

    const std::array<Permutation, 3>& patterns() const { return p_; }
    const Permutation& operator[](int i) const { return p_[i]; }

    std::optional<int> case_id() const { return case_id_; }
    void set_case_id(int id) { case_id_ = id; }

    std::string to_string() const {
        return p_[0].to_string() + "," + p_[1].to_string() + "," + p_[2].to_string();
    }

    friend bool operator==(const PatternTriple& a, const PatternTriple& b) {
        return a.p_ == b.p_;
    }
    friend bool operator<(const PatternTriple& a, const PatternTriple& b) {
        for (int i = 0; i < 3; ++i) {
            if (a.p_[i] < b.p_[i]) return true;
            if (b.p_[i] < a.p_[i]) return false;
        }
        return false;
    }

private:
    std::array<Permutation, 3> p_;
    std::optional<int> case_id_;
};

inline bool avoids_all(const Permutation& host, const PatternTriple& t) {
    for (const auto& p : t.patterns())
        if (contains(host, p)) return false;
    return true;
}

}  // namespace pav
