#include <doctest.h>

#include <random>

#include "pav/enumerate.hpp"
#include "pav/predicates.hpp"
#include "pav/symmetry.hpp"

using namespace pav;

namespace {

// independent oracle: walk all n! permutations and filter by avoids_all
std::vector<BigInt> factorial_scan(const PatternTriple& t, int n_max) {
    std::vector<BigInt> counts(n_max + 1, BigInt(0));
    counts[0] = BigInt(1);
    for (int n = 1; n <= n_max; ++n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = i + 1;
        long long c = 0;
        do {
            if (avoids_all(Permutation(v), t)) ++c;
        } while (std::next_permutation(v.begin(), v.end()));
        counts[n] = BigInt(c);
    }
    return counts;
}

}  // namespace

TEST_CASE("count_avoiders equals the factorial-scan oracle") {
    // full scan; the tree construction must reproduce it exactly
    for (const char* spec : {"1234,1243,3412", "2341,3412,3421", "1243,1432,3142"}) {
        PatternTriple t = PatternTriple::parse(spec);
        CHECK(count_avoiders(t, 7) == factorial_scan(t, 7));
    }
    PatternTriple deep = PatternTriple::parse("1243,2341,4123");
    CHECK(count_avoiders(deep, 9) == factorial_scan(deep, 9));
}

TEST_CASE("low-order counts are pattern-independent") {
    std::mt19937 rng(17);
    auto triples = all_4letter_triples();
    for (int iter = 0; iter < 5; ++iter) {
        auto counts = count_avoiders(triples[rng() % triples.size()], 4);
        CHECK(counts[0] == BigInt(1));
        CHECK(counts[1] == BigInt(1));
        CHECK(counts[2] == BigInt(2));
        CHECK(counts[3] == BigInt(6));
        CHECK(counts[4] == BigInt(21));  // 24 minus the three excluded patterns
    }
}

TEST_CASE("children are bounded by n+1 per avoider") {
    PatternTriple t = PatternTriple::parse("2143,3142,3412");
    auto counts = count_avoiders(t, 9);
    for (int n = 1; n <= 9; ++n)
        CHECK(counts[n] <= counts[n - 1] * BigInt(n + 1));
}

TEST_CASE("capacity bound raises instead of truncating") {
    PatternTriple t = PatternTriple::parse("1234,1243,3412");
    CHECK_THROWS_AS(count_avoiders(t, 10, EnumOptions{50}), CapacityError);
}

TEST_CASE("general pattern lists: single and double patterns") {
    // |S_n(132)| is Catalan
    auto c132 = count_avoiders_general({Permutation::parse("132")}, 9);
    long long cat[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
    for (int n = 0; n <= 9; ++n) CHECK(c132[n] == BigInt(cat[n]));
    // {123, 3412}: 1, 1, 2, 5, 13, 33, 80, ...
    auto e = count_avoiders_general({Permutation::parse("123"), Permutation::parse("3412")}, 8);
    long long ee[] = {1, 1, 2, 5, 13, 33, 80, 185, 411};
    for (int n = 0; n <= 8; ++n) CHECK(e[n] == BigInt(ee[n]));
    // a 2-letter pattern: only the decreasing permutation avoids 12
    auto dec = count_avoiders_general({Permutation::parse("12")}, 6);
    for (int n = 1; n <= 6; ++n) CHECK(dec[n] == BigInt(1));
}

TEST_CASE("active_sites: reference examples") {
    PatternTriple t240 = case_triple(240);
    CHECK(active_sites(Permutation::parse("12"), t240) == std::vector<int>{1, 2, 3});
    // active sites of 23154 lying left of the maximum are {1,2,4}
    Permutation p = Permutation::parse("23154");
    auto act = active_sites(p, t240);
    std::vector<int> left;
    int npos = 0;
    for (int i = 1; i <= p.size(); ++i)
        if (p.at(i) == p.size()) npos = i;
    for (int s : act)
        if (s <= npos) left.push_back(s);
    CHECK(left == std::vector<int>{1, 2, 4});

    PatternTriple t109 = case_triple(109);
    CHECK(active_sites(Permutation::parse("321"), t109) == std::vector<int>{1, 3, 4});
    CHECK_THROWS(active_sites(Permutation::parse("3421"), t109));  // not an avoider
}

TEST_CASE("active sites agree with direct insertion checks") {
    std::mt19937 rng(31);
    auto triples = all_4letter_triples();
    for (int iter = 0; iter < 4; ++iter) {
        PatternTriple t = triples[rng() % triples.size()];
        AvoiderLevels levels(t);
        for (const auto& p : levels.level(6)) {
            auto act = active_sites(p, t);
            std::vector<int> direct;
            for (int site = 1; site <= p.size() + 1; ++site)
                if (avoids_all(p.insert_max(site), t)) direct.push_back(site);
            CHECK(act == direct);
        }
    }
}

TEST_CASE("refined counts: reference spot values") {
    PatternTriple t125 = case_triple(125);
    // leftmost ascent (a, n) with a >= 2 at n=4: five avoiders
    auto m = refined_count(t125, 4, StatFamily::LeftmostAscent);
    BigInt total(0);
    for (const auto& [k, v] : m)
        if (k.b == 4 && k.a >= 2) total += v;
    CHECK(total == BigInt(5));
    auto members = filtered_list(t125, 4, lemma_predicate(125, "b"));
    REQUIRE(members.size() == 5);
    const char* expect[] = {"2413", "2431", "3241", "3412", "3421"};
    for (int i = 0; i < 5; ++i) CHECK(members[i].to_string() == expect[i]);

    CHECK(count_filtered(t125, 5, lemma_predicate(125, "d")) == BigInt(6));
    auto d5 = filtered_list(t125, 5, lemma_predicate(125, "d"));
    const char* expect_d[] = {"24135", "24153", "24315", "32415", "34125", "34215"};
    REQUIRE(d5.size() == 6);
    for (int i = 0; i < 6; ++i) CHECK(d5[i].to_string() == expect_d[i]);

    PatternTriple t185 = case_triple(185);
    auto e5 = filtered_list(t185, 5, lemma_predicate(185, "e"));
    REQUIRE(e5.size() == 2);
    CHECK(e5[0].to_string() == "23154");
    CHECK(e5[1].to_string() == "42315");
}

TEST_CASE("filtered_list: reference witness lists") {
    CHECK(filtered_list(case_triple(125), 3, lemma_predicate(125, "b")).size() == 1);
    CHECK(filtered_list(case_triple(125), 3, lemma_predicate(125, "b"))[0].to_string() == "231");
    auto v6 = filtered_list(case_triple(185), 6, lemma_predicate(185, "v"));
    REQUIRE(v6.size() == 3);
    CHECK(v6[0].to_string() == "241635");
    CHECK(v6[1].to_string() == "241653");
    CHECK(v6[2].to_string() == "524163");
    auto w7 = filtered_list(case_triple(185), 7, lemma_predicate(185, "w"));
    REQUIRE(w7.size() == 1);
    CHECK(w7[0].to_string() == "2531764");
}

TEST_CASE("refined partitions and transport") {
    PatternTriple t74 = case_triple(74);
    auto counts = count_avoiders(t74, 8);
    for (int n = 1; n <= 8; ++n) {
        auto m = refined_count(t74, n, StatFamily::NumLRMaxima);
        BigInt total(0);
        for (const auto& [k, v] : m) total += v;
        CHECK(total == counts[n]);
        // no pattern starts with 4, so the one-left-right-maximum slice is
        // the whole previous level
        auto it = m.find(StatisticKey{1, 0});
        BigInt m1 = it == m.end() ? BigInt(0) : it->second;
        CHECK(m1 == counts[n - 1]);
    }
    // first-letter counts transport to last-letter counts of the reversed triple
    PatternTriple t125 = case_triple(125);
    PatternTriple rev(reverse(t125[0]), reverse(t125[1]), reverse(t125[2]));
    CHECK(refined_count(t125, 6, StatFamily::FirstLetter) ==
          refined_count(rev, 6, StatFamily::LastLetter));
}

TEST_CASE("statistic keys for the remaining families") {
    Permutation p = Permutation::parse("64325178");
    CHECK(statistic_key(p, StatFamily::FirstLetter)->a == 6);
    CHECK(statistic_key(p, StatFamily::LastLetter)->a == 8);
    CHECK(statistic_key(p, StatFamily::LeftmostAscent)->a == 2);
    CHECK(statistic_key(p, StatFamily::LeftmostAscent)->b == 5);
    CHECK(statistic_key(p, StatFamily::DescendingPrefix)->a == 4);
    CHECK(statistic_key(p, StatFamily::DescendingPrefix)->b == 1);
    CHECK(statistic_key(p, StatFamily::IDSConsecutive)->a == 0);
    CHECK_FALSE(statistic_key(p, StatFamily::IncreasingPrefixToMax).has_value());
    // 1 < 2 < 5 reaches the maximum at position 3
    CHECK(statistic_key(Permutation::parse("12534"), StatFamily::IncreasingPrefixToMax)->a == 3);
    CHECK_FALSE(
        statistic_key(Permutation::parse("21534"), StatFamily::IncreasingPrefixToMax).has_value());
    // IDS of 43215 is 4321, a consecutive set
    CHECK(statistic_key(Permutation::parse("43215"), StatFamily::IDSConsecutive)->a == 1);
}
