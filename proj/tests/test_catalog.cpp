#include <doctest.h>

#include "pav/catalog.hpp"
#include "pav/enumerate.hpp"
#include "pav/predicates.hpp"
#include "pav/symmetry.hpp"

using namespace pav;
using catalog::RSeries;

TEST_CASE("every catalog series starts 1,1,2,6,21 with nonnegative integers") {
    for (int cid : catalog::cases()) {
        auto f = catalog::gf_catalog(cid, 16);
        INFO("case ", cid);
        CHECK(f.coeff(0) == Rational(1));
        CHECK(f.coeff(1) == Rational(1));
        CHECK(f.coeff(2) == Rational(2));
        CHECK(f.coeff(3) == Rational(6));
        CHECK(f.coeff(4) == Rational(21));
        for (int n = 0; n <= 16; ++n) {
            CHECK(f.coeff(n).is_integer());
            CHECK(f.coeff(n).sign() >= 0);
        }
    }
    CHECK_THROWS(catalog::gf_catalog(237, 8));
}

TEST_CASE("catalog series match brute-force counts through n=8") {
    for (int cid : catalog::cases()) {
        auto f = catalog::gf_catalog(cid, 8);
        auto counts = count_avoiders(case_triple(cid), 8);
        for (int n = 0; n <= 8; ++n) {
            INFO("case ", cid, " n=", n);
            CHECK(f.coeff(n) == Rational(counts[n]));
        }
    }
}

TEST_CASE("all derivation identities hold through order 16") {
    for (const auto& [id, ok] : catalog::catalan_identities(16)) {
        INFO(id);
        CHECK(ok);
    }
    for (int cid : catalog::cases())
        for (const auto& [id, ok] : catalog::case_identities(cid, 16)) {
            INFO(id);
            CHECK(ok);
        }
}

TEST_CASE("case 240 kernel roots expand as expected") {
    auto [vp, vpp] = catalog::case240_roots(5);
    QuadExt s5 = QuadExt::sqrt5();
    auto half = [](QuadExt v) { return v / QuadExt(2); };
    CHECK(vp.coeff(0) == QuadExt(1));
    CHECK(vp.coeff(1) == QuadExt(1));
    CHECK(vp.coeff(2) == half(QuadExt(3) + s5));
    CHECK(vp.coeff(3) == QuadExt(4) + QuadExt(2) * s5);
    CHECK(vp.coeff(4) == QuadExt(15) + QuadExt(7) * s5);
    CHECK(vp.coeff(5) == half(QuadExt(119) + QuadExt(53) * s5));
    CHECK(catalog::case240_kernel(vp).is_zero());
    CHECK(catalog::case240_kernel(vpp).is_zero());
}

TEST_CASE("named intermediates match refined counts through n=8") {
    struct Item {
        int cid;
        const char* name;
    };
    for (auto [cid, name] : {Item{121, "M"}, Item{121, "G2"}, Item{216, "H_total"},
                             Item{228, "G2"}, Item{230, "B1"}}) {
        auto s = catalog::intermediate_gf(cid, name, 8);
        AvoiderLevels levels(case_triple(cid));
        auto pred = lemma_predicate(cid, name);
        for (int n = 0; n <= 8; ++n) {
            INFO("(", cid, ",", name, ") n=", n);
            CHECK(s.coeff(n) == Rational(count_filtered(levels, n, pred)));
        }
    }
    // (149, E) counts {123,3412}-avoiders
    auto e = catalog::intermediate_gf(149, "E", 8);
    auto counts =
        count_avoiders_general({Permutation::parse("123"), Permutation::parse("3412")}, 8);
    for (int n = 0; n <= 8; ++n) CHECK(e.coeff(n) == Rational(counts[n]));
    CHECK_THROWS(catalog::intermediate_gf(121, "nope", 8));
    CHECK_THROWS(catalog::intermediate_gf(209, "G2", 8));
}

TEST_CASE("every advertised intermediate evaluates with integer coefficients") {
    for (int cid : catalog::cases())
        for (const auto& name : catalog::intermediate_names(cid)) {
            auto s = catalog::intermediate_gf(cid, name, 12);
            for (int n = 0; n <= 12; ++n) {
                INFO("(", cid, ",", name, ") n=", n);
                CHECK(s.coeff(n).is_integer());
            }
        }
}

TEST_CASE("case 216 H_total equals the increasing-prefix refined count") {
    auto h = catalog::intermediate_gf(216, "H_total", 8);
    for (int n = 1; n <= 8; ++n) {
        auto m = refined_count(case_triple(216), n, StatFamily::IncreasingPrefixToMax);
        BigInt total(0);
        for (const auto& [k, v] : m) total += v;
        CHECK(h.coeff(n) == Rational(total));
    }
}
