#include <doctest.h>

#include "pav/catalog.hpp"
#include "pav/forest.hpp"

using namespace pav;
using namespace pav::forest;

namespace {

std::vector<Label> sorted_children(const RuleSystem& sys, Label l) {
    auto v = succ_children(sys, l);
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("succession rules: explicit rule lines") {
    auto s240 = make_rule_system(240);
    CHECK(sorted_children(s240, {LabelFam::Plain, 3}) ==
          std::vector<Label>{{LabelFam::Plain, 4}, {LabelFam::Bar, 3}, {LabelFam::Bar, 4}});
    CHECK(sorted_children(s240, {LabelFam::Bar, 3}) ==
          std::vector<Label>{{LabelFam::Plain, 4}, {LabelFam::Bar, 3}, {LabelFam::DBar, 3}});
    // the double-bar line reaches down to parameter 2
    CHECK(sorted_children(s240, {LabelFam::DBar, 2}) ==
          std::vector<Label>{{LabelFam::Plain, 3}, {LabelFam::DBar, 2}});

    auto s109 = make_rule_system(109);
    // the double-bar line repeats its own label twice
    auto db4 = succ_children(s109, {LabelFam::DBar, 4});
    CHECK(std::count(db4.begin(), db4.end(), Label{LabelFam::DBar, 4}) == 2);
    CHECK(db4.size() == 4);

    auto s188 = make_rule_system(188);
    auto beta5 = sorted_children(s188, {LabelFam::Beta, 5});
    CHECK(beta5 == std::vector<Label>{{LabelFam::AlphaIK, 2, 2},
                                      {LabelFam::Beta, 5},
                                      {LabelFam::BetaP, 5},
                                      {LabelFam::BetaP, 6},
                                      {LabelFam::Gamma, 3}});
    CHECK_THROWS(succ_children(s240, {LabelFam::Beta, 3}));
    CHECK_THROWS(succ_children(s240, {LabelFam::Plain, 2}));
}

TEST_CASE("every node has as many children as active sites") {
    // |children(label k-family)| is k for the 240/109 systems
    auto s240 = make_rule_system(240);
    for (int k = 3; k <= 8; ++k) {
        CHECK(succ_children(s240, {LabelFam::Plain, k}).size() == static_cast<size_t>(k));
        CHECK(succ_children(s240, {LabelFam::Bar, k}).size() == static_cast<size_t>(k));
        CHECK(succ_children(s240, {LabelFam::DBar, k}).size() == static_cast<size_t>(k));
    }
    auto s109 = make_rule_system(109);
    for (int k = 3; k <= 8; ++k) {
        CHECK(succ_children(s109, {LabelFam::Plain, k}).size() == static_cast<size_t>(k));
        CHECK(succ_children(s109, {LabelFam::Bar, k}).size() == static_cast<size_t>(k));
        CHECK(succ_children(s109, {LabelFam::DBar, k}).size() == static_cast<size_t>(k));
        CHECK(succ_children(s109, {LabelFam::TBar, k}).size() == static_cast<size_t>(k));
    }
}

TEST_CASE("level counts: small levels and brute force") {
    for (int cid : {240, 109, 188}) {
        auto sys = make_rule_system(cid);
        auto lv = level_counts(sys, 9);
        CHECK(lv[2] == BigInt(2));
        CHECK(lv[3] == BigInt(6));
        CHECK(lv[4] == BigInt(21));
        auto brute = count_avoiders(case_triple(cid), 9);
        for (int n = 2; n <= 9; ++n) {
            INFO("case ", cid, " level ", n);
            CHECK(lv[n] == brute[n]);
        }
    }
}

TEST_CASE("level counts match the theorem series through order 16") {
    for (int cid : {240, 109, 188}) {
        auto lv = level_counts(make_rule_system(cid), 16);
        auto f = catalog::gf_catalog(cid, 16);
        for (int n = 2; n <= 16; ++n) {
            INFO("case ", cid, " level ", n);
            CHECK(Rational(lv[n]) == f.coeff(n));
        }
    }
}

TEST_CASE("sum of child multiset sizes gives the next level") {
    auto sys = make_rule_system(240);
    auto dist = level_label_distribution(sys, 8);
    for (int n = 2; n < 8; ++n) {
        BigInt expected(0);
        for (const auto& [label, count] : dist[n])
            expected += count * BigInt(static_cast<long long>(succ_children(sys, label).size()));
        BigInt next(0);
        for (const auto& [label, count] : dist[n + 1]) next += count;
        CHECK(expected == next);
    }
}

TEST_CASE("labels of small avoiders") {
    auto s240 = make_rule_system(240);
    CHECK(label_of(Permutation::parse("12"), s240) == Label{LabelFam::Plain, 3});
    CHECK(label_of(Permutation::parse("21"), s240) == Label{LabelFam::Bar, 3});
    CHECK(label_of(Permutation::parse("231"), s240) == Label{LabelFam::DBar, 3});
    auto s109 = make_rule_system(109);
    CHECK(label_of(Permutation::parse("12"), s109) == Label{LabelFam::Plain, 3});
    CHECK(label_of(Permutation::parse("21"), s109) == Label{LabelFam::Bar, 3});
    CHECK(label_of(Permutation::parse("213"), s109) == Label{LabelFam::TBar, 3});
    CHECK(label_of(Permutation::parse("321"), s109) == Label{LabelFam::DBar, 3});
    CHECK_THROWS(label_of(Permutation::parse("12"), make_rule_system(188)));
    CHECK_THROWS(label_of(Permutation::parse("1"), s240));
}

TEST_CASE("exhaustive rule validation to depth 6") {
    for (int cid : {240, 109}) {
        auto rep = verify_rules(make_rule_system(cid), 6);
        INFO("case ", cid);
        CHECK(rep.ok);
        CHECK(rep.nodes_checked > 0);
        CHECK(rep.mismatches.empty());
    }
    CHECK_THROWS(verify_rules(make_rule_system(188), 6));
}

TEST_CASE("the single-pattern 132 system reproduces the Catalan numbers") {
    auto lv = level_counts(make_rule_system(132), 12);
    auto cat = catalan_series(12);
    for (int n = 2; n <= 12; ++n) CHECK(Rational(lv[n]) == cat.coeff(n));
}

TEST_CASE("case 188 per-family level counts match the solved system") {
    auto fam = level_family_counts(make_rule_system(188), 12);
    struct Item {
        LabelFam f;
        const char* name;
    };
    for (auto [lf, name] : {Item{LabelFam::AlphaIK, "A11"}, Item{LabelFam::AlphaP, "Ap11"},
                            Item{LabelFam::AlphaPP, "App11"}, Item{LabelFam::Beta, "B1"},
                            Item{LabelFam::BetaP, "Bp1"}, Item{LabelFam::Gamma, "G1"},
                            Item{LabelFam::GammaP, "Gp1"}, Item{LabelFam::Delta, "D1"},
                            Item{LabelFam::F361425, "L"}, Item{LabelFam::F142536, "Lp"},
                            Item{LabelFam::F253614, "Lpp"}}) {
        auto g = catalog::intermediate_gf(188, name, 12);
        auto it = fam.find(lf);
        for (int n = 2; n <= 12; ++n) {
            BigInt have =
                (it != fam.end() && n < static_cast<int>(it->second.size())) ? it->second[n]
                                                                             : BigInt(0);
            INFO("family ", name, " level ", n);
            CHECK(Rational(have) == g.coeff(n));
        }
    }
}
