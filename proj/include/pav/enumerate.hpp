// Exact enumeration of pattern avoiders by the generating-tree construction:
// level n+1 is obtained from level n by inserting n+1 into every site that
// keeps the permutation an avoider. Any new occurrence created by inserting
// the maximum must use it as the pattern's largest letter, so one pass over
// the (L-1)-subsequences of the parent marks every blocked site at once.
//
// This module is the ground truth the closed forms are checked against, so
// it stores plain permutations and fails loudly when the configured capacity
// is exceeded rather than ever truncating.

#pragma once

#include <cstring>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pav/bigint.hpp"
#include "pav/perm.hpp"

namespace pav {

class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

struct EnumOptions {
    // stored permutations across the two live levels
    size_t capacity = 50'000'000;
};

namespace detail {

// relative-order class of three values, as a pattern index:
// 123 -> 0, 132 -> 1, 213 -> 2, 231 -> 3, 312 -> 4, 321 -> 5
inline int order3(int x, int y, int z) {
    if (x < y) {
        if (y < z) return 0;
        return x < z ? 1 : 3;
    }
    if (x < z) return 2;
    return y < z ? 4 : 5;
}

inline int order2(int x, int y) { return x < y ? 0 : 1; }

}  // namespace detail

// Patterns preprocessed for the insert-the-maximum site check. For a pattern
// of length L whose maximum sits at position q, an occurrence of the reduced
// (L-1)-pattern at host positions i_1<...<i_{L-1} blocks exactly the sites in
// (i_{q-1}, i_q], with i_0 = 0 and i_L = n+1.
class CompiledPatterns {
public:
    explicit CompiledPatterns(const std::vector<Permutation>& patterns) {
        for (const auto& p : patterns) {
            const int len = p.size();
            if (len < 2 || len > 4)
                throw std::invalid_argument("CompiledPatterns: supported pattern lengths are 2..4");
            int q = 0;
            std::vector<int> reduced;
            for (int i = 1; i <= len; ++i) {
                if (p.at(i) == len)
                    q = i;
                else
                    reduced.push_back(p.at(i));
            }
            if (len == 4)
                by3_[detail::order3(reduced[0], reduced[1], reduced[2])].push_back(
                    static_cast<uint8_t>(q));
            else if (len == 3)
                by2_[detail::order2(reduced[0], reduced[1])].push_back(static_cast<uint8_t>(q));
            else
                by1_.push_back(static_cast<uint8_t>(q));
        }
        has3_ = false;
        for (const auto& v : by3_) has3_ = has3_ || !v.empty();
        has2_ = !by2_[0].empty() || !by2_[1].empty();
    }

    // writes active sites (1..n+1) of parent into `sites`, returns count
    int active_sites(const Permutation& parent, int* sites) const {
        const int n = parent.size();
        int16_t diff[Permutation::kMaxLen + 3];
        std::memset(diff, 0, sizeof(diff));
        if (has3_ && n >= 3) {
            for (int a = 0; a < n - 2; ++a)
                for (int b = a + 1; b < n - 1; ++b)
                    for (int c = b + 1; c < n; ++c) {
                        const auto& qs = by3_[detail::order3(parent[a], parent[b], parent[c])];
                        if (qs.empty()) continue;
                        const int pos[5] = {0, a + 1, b + 1, c + 1, n + 1};
                        for (uint8_t q : qs) {
                            ++diff[pos[q - 1] + 1];
                            --diff[pos[q] + 1];
                        }
                    }
        }
        if (has2_ && n >= 2) {
            for (int a = 0; a < n - 1; ++a)
                for (int b = a + 1; b < n; ++b) {
                    const auto& qs = by2_[detail::order2(parent[a], parent[b])];
                    if (qs.empty()) continue;
                    const int pos[4] = {0, a + 1, b + 1, n + 1};
                    for (uint8_t q : qs) {
                        ++diff[pos[q - 1] + 1];
                        --diff[pos[q] + 1];
                    }
                }
        }
        if (!by1_.empty() && n >= 1) {
            for (int a = 0; a < n; ++a) {
                const int pos[3] = {0, a + 1, n + 1};
                for (uint8_t q : by1_) {
                    ++diff[pos[q - 1] + 1];
                    --diff[pos[q] + 1];
                }
            }
        }
        int count = 0, run = 0;
        for (int site = 1; site <= n + 1; ++site) {
            run += diff[site];
            if (run == 0) sites[count++] = site;
        }
        return count;
    }

private:
    std::array<std::vector<uint8_t>, 6> by3_;  // 4-letter patterns, keyed by reduced 3-class
    std::array<std::vector<uint8_t>, 2> by2_;  // 3-letter patterns, keyed by reduced 2-class
    std::vector<uint8_t> by1_;                 // 2-letter patterns
    bool has3_ = false, has2_ = false;
};

// Levels of the generating tree for an arbitrary pattern list, built lazily.
class AvoiderLevels {
public:
    explicit AvoiderLevels(std::vector<Permutation> patterns, EnumOptions opts = {})
        : patterns_(std::move(patterns)), compiled_(patterns_), opts_(opts) {
        levels_.push_back({Permutation()});  // level 0: the empty permutation
    }

    AvoiderLevels(const PatternTriple& t, EnumOptions opts = {})
        : AvoiderLevels(std::vector<Permutation>(t.patterns().begin(), t.patterns().end()),
                        opts) {}

    const std::vector<Permutation>& level(int n) {
        if (n + 1 > Permutation::kMaxLen)
            throw std::invalid_argument("AvoiderLevels: level beyond supported length");
        while (static_cast<int>(levels_.size()) <= n) expand();
        return levels_[n];
    }

    const std::vector<Permutation>& patterns() const { return patterns_; }
    const CompiledPatterns& compiled() const { return compiled_; }

private:
    std::vector<Permutation> patterns_;
    CompiledPatterns compiled_;
    EnumOptions opts_;
    std::vector<std::vector<Permutation>> levels_;

    void expand() {
        const auto& cur = levels_.back();
        std::vector<Permutation> next;
        next.reserve(cur.size() * 2);
        int sites[Permutation::kMaxLen + 1];
        for (const auto& parent : cur) {
            int k = compiled_.active_sites(parent, sites);
            if (next.size() + k + cur.size() > opts_.capacity)
                throw CapacityError("enumeration capacity exceeded at length " +
                                    std::to_string(parent.size() + 1));
            for (int i = 0; i < k; ++i) next.push_back(parent.insert_max(sites[i]));
        }
        levels_.push_back(std::move(next));
    }
};

// |S_n(patterns)| for n = 0..n_max, exactly
inline std::vector<BigInt> count_avoiders_general(const std::vector<Permutation>& patterns,
                                                  int n_max, EnumOptions opts = {}) {
    AvoiderLevels levels(patterns, opts);
    std::vector<BigInt> counts;
    for (int n = 0; n <= n_max; ++n)
        counts.push_back(BigInt(static_cast<long long>(levels.level(n).size())));
    return counts;
}

inline std::vector<BigInt> count_avoiders(const PatternTriple& t, int n_max,
                                          EnumOptions opts = {}) {
    return count_avoiders_general(
        std::vector<Permutation>(t.patterns().begin(), t.patterns().end()), n_max, opts);
}

// {i : inserting n+1 at site i keeps a T-avoider}; host must avoid T
inline std::vector<int> active_sites(const Permutation& p, const PatternTriple& t) {
    if (!avoids_all(p, t))
        throw std::invalid_argument("active_sites: permutation does not avoid the triple");
    CompiledPatterns compiled(
        std::vector<Permutation>(t.patterns().begin(), t.patterns().end()));
    int sites[Permutation::kMaxLen + 1];
    int k = compiled.active_sites(p, sites);
    return std::vector<int>(sites, sites + k);
}

// ---- refined statistics ----------------------------------------------------

enum class StatFamily {
    FirstLetter,            // key a = first value
    LastLetter,             // key a = last value
    NumLRMaxima,            // key a = number of left-right maxima
    LeftmostAscent,         // key (a,b) = (bottom, top); (0,0) when decreasing
    IncreasingPrefixToMax,  // key a = position of n when the prefix up to n increases
    DescendingPrefix,       // key (a,b) = (maximal descending prefix length, first<=n-2)
    IDSConsecutive,         // key a = 1 iff the IDS values form a consecutive set
};

struct StatisticKey {
    int a = 0, b = 0;
    friend bool operator<(const StatisticKey& x, const StatisticKey& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
    friend bool operator==(const StatisticKey& x, const StatisticKey& y) {
        return x.a == y.a && x.b == y.b;
    }
};

// key of p under the family; nullopt when the family does not cover p
inline std::optional<StatisticKey> statistic_key(const Permutation& p, StatFamily fam) {
    const int n = p.size();
    switch (fam) {
        case StatFamily::FirstLetter:
            return n ? std::optional<StatisticKey>({p.at(1), 0}) : std::nullopt;
        case StatFamily::LastLetter:
            return n ? std::optional<StatisticKey>({p.at(n), 0}) : std::nullopt;
        case StatFamily::NumLRMaxima:
            return StatisticKey{num_lr_maxima(p), 0};
        case StatFamily::LeftmostAscent: {
            auto la = leftmost_ascent(p);
            if (!la) return StatisticKey{0, 0};
            return StatisticKey{la->bottom, la->top};
        }
        case StatFamily::IncreasingPrefixToMax: {
            if (n == 0) return std::nullopt;
            for (int i = 1; i <= n; ++i) {
                if (i > 1 && p.at(i) < p.at(i - 1)) return std::nullopt;
                if (p.at(i) == n) return StatisticKey{i, 0};
            }
            return std::nullopt;  // unreachable
        }
        case StatFamily::DescendingPrefix: {
            if (n == 0) return std::nullopt;
            int m = 1;
            while (m < n && p.at(m + 1) < p.at(m)) ++m;
            return StatisticKey{m, p.at(1) <= n - 2 ? 1 : 0};
        }
        case StatFamily::IDSConsecutive: {
            if (n == 0) return std::nullopt;
            return StatisticKey{is_consecutive_interval(initial_descent_sequence(p)) ? 1 : 0, 0};
        }
    }
    return std::nullopt;
}

inline std::map<StatisticKey, BigInt> refined_count(const PatternTriple& t, int n,
                                                    StatFamily fam, EnumOptions opts = {}) {
    AvoiderLevels levels(t, opts);
    std::map<StatisticKey, BigInt> out;
    for (const auto& p : levels.level(n))
        if (auto key = statistic_key(p, fam)) out[*key] += BigInt(1);
    return out;
}

using PermPredicate = std::function<bool(const Permutation&)>;

// all avoiders of length n satisfying the predicate, in lex order
inline std::vector<Permutation> filtered_list(const PatternTriple& t, int n,
                                              const PermPredicate& pred,
                                              EnumOptions opts = {}) {
    AvoiderLevels levels(t, opts);
    std::vector<Permutation> out;
    for (const auto& p : levels.level(n))
        if (pred(p)) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

inline BigInt count_filtered(AvoiderLevels& levels, int n, const PermPredicate& pred) {
    long long c = 0;
    for (const auto& p : levels.level(n))
        if (pred(p)) ++c;
    return BigInt(c);
}

inline BigInt count_filtered(const PatternTriple& t, int n, const PermPredicate& pred,
                             EnumOptions opts = {}) {
    AvoiderLevels levels(t, opts);
    return count_filtered(levels, n, pred);
}

}  // namespace pav
