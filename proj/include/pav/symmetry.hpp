// The order-8 symmetry group generated by reverse, complement and inverse,
// acting elementwise on pattern triples; orbit census and grouping of
// symmetry classes by counting sequence (Wilf classes).

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "pav/bigint.hpp"
#include "pav/perm.hpp"

namespace pav {

inline Permutation reverse(const Permutation& p) {
    std::vector<int> v = p.values();
    std::reverse(v.begin(), v.end());
    return Permutation(v);
}

inline Permutation complement(const Permutation& p) {
    std::vector<int> v = p.values();
    for (int& x : v) x = p.size() + 1 - x;
    return Permutation(v);
}

inline Permutation inverse(const Permutation& p) {
    std::vector<int> v(p.size());
    for (int i = 1; i <= p.size(); ++i) v[p.at(i) - 1] = i;
    return Permutation(v);
}

// the eight symmetries: compositions of inverse (optional) then reverse /
// complement; index layout is {id, r, c, rc} x {-, inverse}
inline Permutation apply_symmetry(int sym, const Permutation& p) {
    Permutation q = (sym & 4) ? inverse(p) : p;
    if (sym & 1) q = reverse(q);
    if (sym & 2) q = complement(q);
    return q;
}

inline PatternTriple apply_symmetry(int sym, const PatternTriple& t) {
    return PatternTriple(apply_symmetry(sym, t[0]), apply_symmetry(sym, t[1]),
                         apply_symmetry(sym, t[2]));
}

// lexicographically least image of the (sorted) triple under all 8 symmetries
inline PatternTriple canonical_triple(const PatternTriple& t) {
    PatternTriple best = t;
    for (int sym = 1; sym < 8; ++sym) {
        PatternTriple img = apply_symmetry(sym, t);
        if (img < best) best = img;
    }
    return best;
}

// all C(24,3) = 2024 triples of distinct 4-letter patterns, in lex order
inline std::vector<PatternTriple> all_4letter_triples() {
    std::vector<Permutation> pats;
    std::vector<int> v{1, 2, 3, 4};
    do {
        pats.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    std::vector<PatternTriple> out;
    for (size_t i = 0; i < pats.size(); ++i)
        for (size_t j = i + 1; j < pats.size(); ++j)
            for (size_t k = j + 1; k < pats.size(); ++k)
                out.emplace_back(pats[i], pats[j], pats[k]);
    return out;
}

struct SymmetryClass {
    PatternTriple canonical;
    std::vector<PatternTriple> members;  // distinct triples in the orbit

    int orbit_size() const { return static_cast<int>(members.size()); }
};

// partition into orbits under the 8 symmetries, sorted by canonical triple
inline std::vector<SymmetryClass> symmetry_classes(const std::vector<PatternTriple>& triples) {
    std::map<PatternTriple, std::set<PatternTriple>> orbits;
    for (const auto& t : triples) orbits[canonical_triple(t)].insert(t);
    std::vector<SymmetryClass> out;
    out.reserve(orbits.size());
    for (auto& [canon, members] : orbits)
        out.push_back(SymmetryClass{canon, {members.begin(), members.end()}});
    return out;
}

struct WilfClass {
    std::vector<int> class_indices;        // indices into the symmetry-class list
    std::vector<BigInt> counting_sequence; // |S_n(T)| for n = 0..n_max
};

using CountingOracle = std::function<std::vector<BigInt>(const PatternTriple&, int)>;

// groups symmetry classes by exact equality of counting sequences through
// n_max; the oracle may have been evaluated elsewhere (counts passed in) so
// that callers control parallelism.
inline std::vector<WilfClass> wilf_group_from_counts(
    const std::vector<std::vector<BigInt>>& counts) {
    std::map<std::vector<BigInt>, std::vector<int>> groups;
    for (size_t i = 0; i < counts.size(); ++i)
        groups[counts[i]].push_back(static_cast<int>(i));
    std::vector<WilfClass> out;
    // deterministic order: by least member index (canonical-representative order)
    std::vector<const std::pair<const std::vector<BigInt>, std::vector<int>>*> items;
    for (const auto& kv : groups) items.push_back(&kv);
    std::sort(items.begin(), items.end(),
              [](auto* a, auto* b) { return a->second.front() < b->second.front(); });
    for (auto* kv : items) out.push_back(WilfClass{kv->second, kv->first});
    return out;
}

inline std::vector<WilfClass> wilf_group(const std::vector<SymmetryClass>& classes, int n_max,
                                         const CountingOracle& counter) {
    if (n_max < 4) throw std::invalid_argument("wilf_group: n_max must be at least 4");
    std::vector<std::vector<BigInt>> counts;
    counts.reserve(classes.size());
    for (const auto& cls : classes) counts.push_back(counter(cls.canonical, n_max));
    return wilf_group_from_counts(counts);
}

// The thirteen exceptional triples carry their census case numbers; every
// other class is addressed by its canonical triple.
inline const std::vector<std::pair<int, const char*>>& known_cases() {
    static const std::vector<std::pair<int, const char*>> table = {
        {74, "1234,1243,3412"},  {109, "2143,3412,3421"}, {121, "1243,2341,3412"},
        {125, "1243,2341,4123"}, {149, "1234,3412,4123"}, {185, "1234,2341,4123"},
        {188, "1432,2143,3214"}, {209, "1243,1432,3142"}, {216, "2143,3142,3412"},
        {225, "1243,2413,3142"}, {228, "2341,2413,3412"}, {230, "1234,1243,2341"},
        {240, "2341,3412,3421"},
    };
    return table;
}

inline PatternTriple case_triple(int case_id) {
    for (const auto& [id, s] : known_cases())
        if (id == case_id) {
            PatternTriple t = PatternTriple::parse(s);
            t.set_case_id(id);
            return t;
        }
    throw std::invalid_argument("unknown case id: " + std::to_string(case_id));
}

inline std::optional<int> known_case_id(const PatternTriple& t) {
    PatternTriple canon = canonical_triple(t);
    for (const auto& [id, s] : known_cases())
        if (canonical_triple(PatternTriple::parse(s)) == canon) return id;
    return std::nullopt;
}

}  // namespace pav
