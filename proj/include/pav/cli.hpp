// Command-line front end: counting, witness listing, series expansion,
// symmetry/Wilf classification, forest simulation and the verification suite.
// CSV goes to stdout, diagnostics to stderr; identical inputs produce
// byte-identical output regardless of thread count.
//
// Exit codes: 0 success (all checks pass), 1 failed verification,
// 2 usage error, 3 capacity exceeded.

#pragma once

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "pav/verify.hpp"

namespace pav {
namespace cli {

namespace detail {

inline std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

inline void print_report(const verify::VerificationReport& rep, bool json, std::ostream& out) {
    for (const auto& e : rep.entries) {
        std::string case_str = e.case_id ? std::to_string(*e.case_id) : "";
        if (json) {
            out << "{\"check\":\"" << json_escape(e.check_id) << "\",\"case\":"
                << (case_str.empty() ? "null" : case_str) << ",\"range\":\""
                << json_escape(e.n_range) << "\",\"status\":\"" << (e.pass ? "pass" : "fail")
                << "\",\"witness\":\"" << json_escape(e.witness) << "\"}\n";
        } else {
            out << e.check_id << "," << case_str << "," << e.n_range << ","
                << (e.pass ? "pass" : "fail") << ",\"" << e.witness << "\"\n";
        }
    }
}

inline std::pair<int, std::string> parse_class_id(const std::string& cls) {
    auto dot = cls.find('.');
    if (dot == std::string::npos)
        throw std::invalid_argument("--class expects <case>.<family>, e.g. 125.e");
    int case_id = 0;
    try {
        size_t used = 0;
        case_id = std::stoi(cls.substr(0, dot), &used);
        if (used != dot) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("--class expects a numeric case id");
    }
    return {case_id, cls.substr(dot + 1)};
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"pattern-avoidance census toolkit"};
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json, "emit one JSON object per output row");

    // ---- count ----
    auto* count_cmd = app.add_subcommand("count", "count avoiders of a pattern triple");
    std::string count_patterns;
    int count_n = 10;
    size_t capacity = 50'000'000;
    count_cmd->add_option("--patterns", count_patterns, "triple, e.g. 1234,1243,3412")
        ->required();
    count_cmd->add_option("--n", count_n, "maximum length");
    count_cmd->add_option("--capacity", capacity, "stored-permutation bound");

    // ---- list ----
    auto* list_cmd = app.add_subcommand("list", "list avoiders in a named lemma class");
    std::string list_class, list_patterns;
    int list_n = 5;
    list_cmd->add_option("--class", list_class, "<case>.<family>, e.g. 125.e");
    list_cmd->add_option("--patterns", list_patterns, "triple (defaults to the case's)");
    list_cmd->add_option("--n", list_n, "length")->required();

    // ---- series ----
    auto* series_cmd = app.add_subcommand("series", "expand a catalog generating function");
    int series_case = 0, series_order = 16;
    std::string series_name;
    series_cmd->add_option("--case", series_case, "census case id")->required();
    series_cmd->add_option("--order", series_order, "truncation order");
    series_cmd->add_option("--name", series_name, "intermediate series name");

    // ---- classify ----
    auto* classify_cmd = app.add_subcommand("classify", "symmetry and Wilf census");
    bool do_sym = false, do_wilf = false;
    int classify_n = 10;
    unsigned classify_threads = std::thread::hardware_concurrency();
    classify_cmd->add_flag("--sym", do_sym, "symmetry-class census only");
    classify_cmd->add_flag("--wilf", do_wilf, "group classes by counting sequence");
    classify_cmd->add_option("--n", classify_n, "counting depth for --wilf");
    classify_cmd->add_option("--threads", classify_threads, "worker threads");

    // ---- formula ----
    auto* formula_cmd = app.add_subcommand("formula", "evaluate a counting formula family");
    int formula_case = 0, formula_n = 10;
    std::string formula_name;
    formula_cmd->add_option("--case", formula_case, "census case id")->required();
    formula_cmd->add_option("--name", formula_name, "family name, e.g. b")->required();
    formula_cmd->add_option("--n", formula_n, "maximum n");

    // ---- forest ----
    auto* forest_cmd = app.add_subcommand("forest", "simulate a succession-rule forest");
    int forest_case = 0, forest_n = 16;
    bool forest_verify = false;
    forest_cmd->add_option("--case", forest_case, "240, 109, 188 or 132")->required();
    forest_cmd->add_option("--n", forest_n, "maximum level");
    forest_cmd->add_flag("--verify", forest_verify, "validate rules against the avoider tree");

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "run the claim-verification suite");
    int verify_case = 0;
    bool verify_all = false;
    verify::VerifyOptions vopts;
    verify_cmd->add_option("--case", verify_case, "restrict to one census case");
    verify_cmd->add_flag("--all", verify_all, "every check including the census");
    verify_cmd->add_option("--n", vopts.n_lemma, "lemma/oracle depth");
    verify_cmd->add_option("--order", vopts.order, "series order");
    verify_cmd->add_option("--n-theorem", vopts.n_theorem, "series-vs-enumeration depth");
    verify_cmd->add_option("--n-wilf", vopts.n_wilf, "Wilf census depth");
    verify_cmd->add_option("--n-forest", vopts.n_forest, "forest-vs-enumeration depth");
    verify_cmd->add_option("--n-rules", vopts.n_rules, "exhaustive rule-check depth");
    verify_cmd->add_option("--n-intermediate", vopts.n_intermediate,
                           "refined-count comparison depth");
    verify_cmd->add_option("--threads", vopts.threads, "worker threads for the census");
    verify_cmd->add_option("--capacity", vopts.capacity, "stored-permutation bound");

    // --json may be written after the subcommand as well
    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (count_cmd->parsed()) {
            auto t = PatternTriple::parse(count_patterns);
            auto counts = count_avoiders(t, count_n, EnumOptions{capacity});
            for (int n = 0; n <= count_n; ++n) {
                if (json)
                    out << "{\"n\":" << n << ",\"count\":" << counts[n].to_string() << "}\n";
                else
                    out << n << "," << counts[n].to_string() << "\n";
            }
            return 0;
        }

        if (list_cmd->parsed()) {
            PermPredicate pred = [](const Permutation&) { return true; };
            std::optional<PatternTriple> triple;
            if (!list_class.empty()) {
                auto [cid, family] = detail::parse_class_id(list_class);
                pred = lemma_predicate(cid, family);
                triple = case_triple(cid);
            }
            if (!list_patterns.empty()) {
                auto given = PatternTriple::parse(list_patterns);
                if (triple && !(given == *triple))
                    throw std::invalid_argument("--patterns conflicts with the class's triple " +
                                                triple->to_string());
                triple = given;
            }
            if (!triple) throw std::invalid_argument("list: need --class or --patterns");
            for (const auto& p : filtered_list(*triple, list_n, pred, EnumOptions{capacity})) {
                if (json)
                    out << "{\"perm\":\"" << p.to_string() << "\"}\n";
                else
                    out << p.to_string() << "\n";
            }
            return 0;
        }

        if (series_cmd->parsed()) {
            catalog::RSeries s = series_name.empty()
                                     ? catalog::gf_catalog(series_case, series_order)
                                     : catalog::intermediate_gf(series_case, series_name,
                                                                series_order);
            for (int n = 0; n <= series_order; ++n) {
                if (!s.coeff(n).is_integer())
                    throw IntegrityError("non-integer coefficient at n=" + std::to_string(n));
                if (json)
                    out << "{\"n\":" << n << ",\"coefficient\":" << s.coeff(n).to_string()
                        << "}\n";
                else
                    out << n << "," << s.coeff(n).to_string() << "\n";
            }
            return 0;
        }

        if (classify_cmd->parsed()) {
            if (!do_sym && !do_wilf)
                throw std::invalid_argument("classify: need --sym and/or --wilf");
            auto classes = symmetry_classes(all_4letter_triples());
            if (do_sym && !do_wilf) {
                if (json)
                    out << "{\"symmetry_classes\":" << classes.size() << "}\n";
                else
                    out << "symmetry_classes," << classes.size() << "\n";
                return 0;
            }
            verify::VerifyOptions wopts;
            wopts.threads = classify_threads;
            wopts.capacity = capacity;
            auto counts = verify::detail::count_all_classes(classes, classify_n, wopts);
            auto groups = wilf_group_from_counts(counts);
            std::vector<int> group_of(classes.size(), -1);
            for (size_t g = 0; g < groups.size(); ++g)
                for (int i : groups[g].class_indices) group_of[i] = static_cast<int>(g);
            for (size_t i = 0; i < classes.size(); ++i) {
                std::string seq;
                for (size_t j = 0; j < counts[i].size(); ++j) {
                    if (j) seq += ';';
                    seq += counts[i][j].to_string();
                }
                if (json) {
                    out << "{\"canonical\":\"" << classes[i].canonical.to_string()
                        << "\",\"orbit_size\":" << classes[i].orbit_size() << ",\"counts\":\""
                        << seq << "\",\"wilf_group\":" << group_of[i] << "}\n";
                } else {
                    out << "\"" << classes[i].canonical.to_string() << "\","
                        << classes[i].orbit_size() << "," << seq << "," << group_of[i] << "\n";
                }
            }
            if (json)
                out << "{\"symmetry_classes\":" << classes.size()
                    << ",\"wilf_classes\":" << groups.size() << "}\n";
            else
                out << "symmetry_classes," << classes.size() << "\nwilf_classes,"
                    << groups.size() << "\n";
            return 0;
        }

        if (formula_cmd->parsed()) {
            for (int n = 0; n <= formula_n; ++n) {
                BigInt v = formulas::family_value(formula_case, formula_name, n);
                if (json)
                    out << "{\"n\":" << n << ",\"value\":" << v.to_string() << "}\n";
                else
                    out << n << "," << v.to_string() << "\n";
            }
            return 0;
        }

        if (forest_cmd->parsed()) {
            auto sys = forest::make_rule_system(forest_case);
            if (forest_verify) {
                if (forest_case == 188 || forest_case == 132) {
                    // no per-permutation labelling: validate level totals
                    int depth = std::min(forest_n, 10);
                    auto lv = forest::level_counts(sys, depth);
                    bool ok = true;
                    if (forest_case == 188) {
                        auto brute = count_avoiders(case_triple(188), depth);
                        for (int n = 2; n <= depth; ++n) ok = ok && lv[n] == brute[n];
                    } else {
                        auto brute = count_avoiders_general({Permutation::parse("132")}, depth);
                        for (int n = 2; n <= depth; ++n) ok = ok && lv[n] == brute[n];
                    }
                    out << "rules." << forest_case << ",level_totals,n<=" << depth << ","
                        << (ok ? "pass" : "fail") << "\n";
                    return ok ? 0 : 1;
                }
                auto rep = forest::verify_rules(sys, std::min(forest_n, 10));
                out << "rules." << forest_case << ",exhaustive,n<" << std::min(forest_n, 10)
                    << "," << (rep.ok ? "pass" : "fail") << "\n";
                for (const auto& m : rep.mismatches) out << "witness,\"" << m << "\"\n";
                return rep.ok ? 0 : 1;
            }
            auto lv = forest::level_counts(sys, forest_n);
            for (int n = 2; n <= forest_n; ++n) {
                if (json)
                    out << "{\"n\":" << n << ",\"total\":" << lv[n].to_string() << "}\n";
                else
                    out << n << "," << lv[n].to_string() << "\n";
            }
            return 0;
        }

        if (verify_cmd->parsed()) {
            verify::VerificationReport rep;
            if (verify_all) {
                rep = verify::run_all_checks(vopts);
            } else if (verify_case != 0) {
                rep = verify::run_case_checks(verify_case, vopts);
            } else {
                throw std::invalid_argument("verify: need --all or --case <id>");
            }
            detail::print_report(rep, json, out);
            size_t failed = 0;
            for (const auto& e : rep.entries) failed += e.pass ? 0 : 1;
            err << rep.entries.size() << " checks, " << failed << " failed\n";
            return rep.all_pass() ? 0 : 1;
        }
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const IntegrityError& e) {
        err << "integrity error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace cli
}  // namespace pav
