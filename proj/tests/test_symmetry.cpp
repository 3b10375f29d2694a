#include <doctest.h>

#include <random>
#include <set>

#include "pav/enumerate.hpp"
#include "pav/symmetry.hpp"

using namespace pav;

TEST_CASE("reverse, complement, inverse") {
    CHECK(inverse(Permutation::parse("2413")) == Permutation::parse("3142"));
    CHECK(complement(Permutation::parse("1234")) == Permutation::parse("4321"));
    CHECK(reverse(Permutation::parse("1234")) == Permutation::parse("4321"));
    std::mt19937 rng(42);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<int> v(6);
        for (int i = 0; i < 6; ++i) v[i] = i + 1;
        std::shuffle(v.begin(), v.end(), rng);
        Permutation p(v);
        CHECK(reverse(reverse(p)) == p);
        CHECK(complement(complement(p)) == p);
        CHECK(inverse(inverse(p)) == p);
        // composite consistency: r(c(i(p))) computed stepwise equals the
        // indexed symmetry that encodes the same composition
        CHECK(reverse(complement(inverse(p))) == apply_symmetry(4 | 1 | 2, p));
    }
}

TEST_CASE("the eight symmetries form a group of order 8 on triples") {
    PatternTriple t = PatternTriple::parse("1243,2341,3412");
    std::set<std::string> images;
    for (int s = 0; s < 8; ++s) images.insert(apply_symmetry(s, t).to_string());
    // closure: composing any two symmetries lands back in the image set
    for (int s1 = 0; s1 < 8; ++s1)
        for (int s2 = 0; s2 < 8; ++s2)
            CHECK(images.count(apply_symmetry(s1, apply_symmetry(s2, t)).to_string()) == 1);
    CHECK(images.size() <= 8);
    CHECK(8 % images.size() == 0);
}

TEST_CASE("symmetry census: 317 classes partitioning 2024 triples") {
    auto triples = all_4letter_triples();
    REQUIRE(triples.size() == 2024);
    auto classes = symmetry_classes(triples);
    CHECK(classes.size() == 317);
    size_t covered = 0;
    std::set<std::string> seen;
    for (const auto& c : classes) {
        covered += c.members.size();
        CHECK(8 % c.orbit_size() == 0);
        // canonical is a member and minimal
        bool found = false;
        for (const auto& m : c.members) {
            CHECK(!(m < c.canonical));
            if (m == c.canonical) found = true;
            CHECK(seen.insert(m.to_string()).second);  // disjointness
        }
        CHECK(found);
    }
    CHECK(covered == 2024);
}

TEST_CASE("singleton input forms one class containing the triple") {
    PatternTriple t = PatternTriple::parse("1234,1243,3412");
    auto classes = symmetry_classes({t});
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].members.size() == 1);
    CHECK(classes[0].members[0] == t);
    CHECK(canonical_triple(t) == t);
}

TEST_CASE("avoidance counts are symmetry invariants") {
    std::mt19937 rng(99);
    auto triples = all_4letter_triples();
    for (int iter = 0; iter < 3; ++iter) {
        const PatternTriple& t = triples[rng() % triples.size()];
        auto base = count_avoiders(t, 8);
        for (int s = 1; s < 8; ++s) CHECK(count_avoiders(apply_symmetry(s, t), 8) == base);
    }
}

TEST_CASE("wilf grouping is trivial at low depth and refines monotonically") {
    auto classes = symmetry_classes(all_4letter_triples());
    std::vector<std::vector<BigInt>> counts;
    counts.reserve(classes.size());
    for (const auto& c : classes) counts.push_back(count_avoiders(c.canonical, 6));
    // prefix lengths 3 and 4: every triple counts 1,1,2,6 and then 21
    size_t prev = 0;
    for (int n = 3; n <= 6; ++n) {
        std::vector<std::vector<BigInt>> pref;
        for (const auto& c : counts) pref.emplace_back(c.begin(), c.begin() + n + 1);
        auto groups = wilf_group_from_counts(pref);
        if (n <= 4) CHECK(groups.size() == 1);
        CHECK(groups.size() >= prev);  // refinement never merges
        prev = groups.size();
        size_t members = 0;
        for (const auto& g : groups) members += g.class_indices.size();
        CHECK(members == classes.size());
    }
    CHECK(prev > 1);
    // the oracle-driven entry point agrees with grouping precomputed counts
    auto direct = wilf_group(classes, 6, [](const PatternTriple& t, int n) {
        return count_avoiders(t, n);
    });
    std::vector<std::vector<BigInt>> pref6(counts.begin(), counts.end());
    CHECK(direct.size() == wilf_group_from_counts(pref6).size());
    CHECK_THROWS(wilf_group(classes, 3, [](const PatternTriple& t, int n) {
        return count_avoiders(t, n);
    }));
}

TEST_CASE("the thirteen known cases resolve to distinct classes") {
    std::set<std::string> canon;
    for (const auto& [id, s] : known_cases()) {
        PatternTriple t = case_triple(id);
        CHECK(known_case_id(t) == id);
        canon.insert(canonical_triple(t).to_string());
    }
    CHECK(canon.size() == 13);
    CHECK_THROWS(case_triple(999));
    CHECK_FALSE(known_case_id(PatternTriple::parse("1234,1243,1324")).has_value());
    // a triple symmetric to case 74 resolves to 74
    CHECK(known_case_id(PatternTriple::parse("1234,2134,3412")) == 74);
}
