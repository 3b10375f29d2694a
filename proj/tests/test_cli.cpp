#include <doctest.h>

#include <set>
#include <sstream>

#include "pav/cli.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = pav::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count subcommand emits n,count rows") {
    auto r = run_cli({"count", "--patterns", "1234,1243,3412", "--n", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "0,1\n1,1\n2,2\n3,6\n4,21\n5,73\n6,238\n");
    auto rj = run_cli({"count", "--patterns", "1234,1243,3412", "--n", "2", "--json"});
    CHECK(rj.code == 0);
    CHECK(rj.out == "{\"n\":0,\"count\":1}\n{\"n\":1,\"count\":1}\n{\"n\":2,\"count\":2}\n");
}

TEST_CASE("output is identical across repeated runs") {
    auto a = run_cli({"series", "--case", "240", "--order", "12"});
    auto b = run_cli({"series", "--case", "240", "--order", "12"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("classify output is identical across thread counts") {
    auto one = run_cli({"classify", "--wilf", "--n", "6", "--threads", "1"});
    auto four = run_cli({"classify", "--wilf", "--n", "6", "--threads", "4"});
    CHECK(one.code == 0);
    CHECK(one.out == four.out);
    // 317 class rows plus the two summary rows
    CHECK(std::count(one.out.begin(), one.out.end(), '\n') == 319);
    CHECK(one.out.find("symmetry_classes,317\n") != std::string::npos);
}

TEST_CASE("series subcommand: theorem and intermediate expansions") {
    auto r = run_cli({"series", "--case", "74", "--order", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "0,1\n1,1\n2,2\n3,6\n4,21\n5,73\n");
    auto ri = run_cli({"series", "--case", "216", "--name", "H_total", "--order", "4"});
    CHECK(ri.code == 0);
    CHECK(ri.out.substr(0, 8) == "0,0\n1,1\n");
    auto bad = run_cli({"series", "--case", "237", "--order", "4"});
    CHECK(bad.code == 2);
}

TEST_CASE("classify census summaries") {
    auto r = run_cli({"classify", "--sym"});
    CHECK(r.code == 0);
    CHECK(r.out == "symmetry_classes,317\n");
}

TEST_CASE("formula and list subcommands") {
    auto r = run_cli({"formula", "--case", "125", "--name", "b", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "0,0\n1,0\n2,0\n3,1\n4,5\n");
    auto l = run_cli({"list", "--class", "125.b", "--n", "4"});
    CHECK(l.code == 0);
    CHECK(l.out == "2413\n2431\n3241\n3412\n3421\n");
    auto lw = run_cli({"list", "--class", "185.w", "--n", "7"});
    CHECK(lw.out == "2531764\n");
    auto conflict = run_cli(
        {"list", "--class", "125.b", "--patterns", "1234,1243,3412", "--n", "4"});
    CHECK(conflict.code == 2);
}

TEST_CASE("forest subcommand") {
    auto r = run_cli({"forest", "--case", "240", "--n", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "2,2\n3,6\n4,21\n5,79\n6,313\n");
    auto v = run_cli({"forest", "--case", "109", "--verify", "--n", "6"});
    CHECK(v.code == 0);
    CHECK(v.out.find("pass") != std::string::npos);
    auto v188 = run_cli({"forest", "--case", "188", "--verify", "--n", "8"});
    CHECK(v188.code == 0);
}

TEST_CASE("usage and capacity exit codes") {
    CHECK(run_cli({"nonsense"}).code == 2);
    CHECK(run_cli({"count", "--n", "4"}).code == 2);             // missing --patterns
    CHECK(run_cli({"count", "--patterns", "12,34,56", "--n", "3"}).code == 2);
    CHECK(run_cli({"verify"}).code == 2);                        // need --all or --case
    CHECK(run_cli({"list", "--class", "no-dot", "--n", "3"}).code == 2);
    CHECK(run_cli({"list", "--class", "x.b", "--n", "3"}).code == 2);
    CHECK(run_cli({"list", "--class", "125.zzz", "--n", "3"}).code == 2);
    auto cap = run_cli({"count", "--patterns", "1234,1243,3412", "--n", "9", "--capacity", "40"});
    CHECK(cap.code == 3);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("a throwing check becomes a failed entry; capacity still propagates") {
    pav::verify::VerificationReport rep;
    pav::verify::detail::guarded(rep, "series.999", std::nullopt,
                                 [] { throw pav::IntegrityError("boom"); });
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].check_id == "series.999.exception");
    CHECK_FALSE(rep.entries[0].pass);
    CHECK(rep.entries[0].witness == "boom");
    CHECK_THROWS_AS(pav::verify::detail::guarded(rep, "x", std::nullopt,
                                                 [] { throw pav::CapacityError("full"); }),
                    pav::CapacityError);
    // and the CLI maps a capacity overflow inside verify to exit 3
    auto r = run_cli({"verify", "--case", "74", "--capacity", "100"});
    CHECK(r.code == 3);
}

TEST_CASE("verify --case emits a passing report") {
    auto r = run_cli({"verify", "--case", "121", "--n", "7", "--n-theorem", "7", "--order", "12",
                      "--n-intermediate", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("theorem_oracle.121") != std::string::npos);
    CHECK(r.out.find("fail") == std::string::npos);
}

TEST_CASE("verify --all covers every module surface and passes at reduced depth") {
    auto r = run_cli({"verify", "--all", "--n", "6", "--n-theorem", "7", "--order", "12",
                      "--n-forest", "7", "--n-rules", "6", "--n-intermediate", "6", "--n-wilf",
                      "9"});
    CHECK(r.code == 0);
    // one line per check: id,case,range,status,"witness"
    std::set<std::string> ids;
    std::istringstream is(r.out);
    std::string line;
    while (std::getline(is, line)) {
        auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        ids.insert(line.substr(0, comma));
        CHECK(line.find(",fail,") == std::string::npos);
    }
    // the suite must exercise every subsystem: series identities, the
    // oracle comparisons, lemma families, forests, census
    for (const char* id :
         {"series.catalan.xC2", "series.catalan.fixed_point", "series.solver_crosscheck",
          "theorem_oracle.74", "theorem_oracle.240", "lemma.74.b", "lemma.74.ids2",
          "lemma.125.u", "lemma.125.b_members", "lemma.149.d_ab", "lemma.149.e_refined",
          "lemma.185.v", "lemma.185.w", "forest.240.levels_vs_brute",
          "forest.188.levels_vs_series", "rules.240", "rules.109", "series.209.residual",
          "series.228.residual", "series.240.kernel_root_v1", "series.121.M_from_N",
          "intermediate.121.M", "intermediate.121.G2", "intermediate.216.H_total",
          "intermediate.228.G2", "intermediate.230.B1", "intermediate.149.E",
          "census.symmetry", "census.wilf"}) {
        INFO(id);
        CHECK(ids.count(id) == 1);
    }
}
