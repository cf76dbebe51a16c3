/*
   Copyright 2026 the kloo authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef KLOO_CLI_HPP
#define KLOO_CLI_HPP

#include <CLI11.hpp>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "kloo/char_sums.hpp"
#include "kloo/cubic_census.hpp"
#include "kloo/eq_solver.hpp"
#include "kloo/field.hpp"
#include "kloo/kloosterman.hpp"
#include "kloo/value_distribution.hpp"
#include "kloo/verify.hpp"

namespace kloo::cli {

using json = nlohmann::ordered_json;

// Exit codes: 0 success / all-pass, 1 verification failure, 2 usage or
// domain error, 3 enumeration-cap violation without --force.
enum ExitCode { kOk = 0, kVerifyFail = 1, kUsage = 2, kCap = 3 };

inline std::string modulus_hex(std::uint64_t mod) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(mod));
    return buf;
}

// Depth-first flattening: object keys join with '.', array entries by index.
// The row order follows JSON insertion order, so CSV columns are stable.
inline void flatten(const json& j, const std::string& prefix,
                    std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
        }
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& v : j) {
            flatten(v, prefix + "." + std::to_string(i++), rows);
        }
    } else if (j.is_string()) {
        rows.emplace_back(prefix, j.get<std::string>());
    } else {
        rows.emplace_back(prefix, j.dump());
    }
}

inline void emit(const json& record, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << record.dump(2) << "\n";
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(record, "", rows);
    if (format == "csv") {
        out << "key,value\n";
        for (const auto& [k, v] : rows) out << k << "," << v << "\n";
        return;
    }
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    for (const auto& [k, v] : rows) {
        out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << "\n";
    }
}

inline json field_block(const FieldContext& F) {
    return {{"m", F.m()},
            {"modulus_hex", modulus_hex(F.modulus())},
            {"generator_hex", F.element_hex(F.generator())}};
}

inline json classification_json(const FieldContext& F, const Classification& c) {
    json j;
    j["a_hex"] = F.element_hex(c.a);
    j["case"] = to_string(c.tag);
    j["witness_hex"] = F.element_hex(c.witness);
    j["eps"] = c.eps.has_value() ? json(*c.eps) : json(nullptr);
    j["delta"] = c.delta.has_value() ? json(*c.delta) : json(nullptr);
    j["tr_a"] = c.tr_a;
    j["mod8"] = c.mod8;
    j["mod3"] = c.mod3;
    j["mod24"] = c.mod24;
    return j;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Binary Kloosterman sums K(a) over GF(2^m) and their residues mod 24"};
    app.fallthrough(true);

    std::string format = "table";
    std::string modulus_arg;
    bool force = false;
    long long seed = 0;  // reserved; no randomness anywhere
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_option("--modulus", modulus_arg, "override the field modulus (hex encoding)");
    app.add_flag("--force", force, "lift enumeration caps");
    app.add_option("--seed", seed, "reserved for interface stability");

    int m = 0, k = 1, m_min = 4, m_max = 8;
    std::string a_hex, c_hex, mode = "fast", suite = "all";
    bool all = false;

    auto* ksum = app.add_subcommand("ksum", "evaluate K(a) and its residues");
    ksum->add_option("--m", m)->required();
    ksum->add_option("--a", a_hex)->required();

    auto* classify = app.add_subcommand("classify", "K(a) mod 24 without evaluating K");
    classify->add_option("--m", m)->required();
    classify->add_option("--a", a_hex);
    classify->add_flag("--all", all);

    auto* dist = app.add_subcommand("distribution", "value distribution of K mod 24");
    dist->add_option("--m", m)->required();
    dist->add_option("--mode", mode)->check(CLI::IsMember({"fast", "closed", "brute"}));

    auto* solveeq = app.add_subcommand("solve-eq", "solve x^(2^k) + x^(2^k-1) = a");
    solveeq->add_option("--m", m)->required();
    solveeq->add_option("--k", k)->required();
    solveeq->add_option("--a", a_hex)->required();

    auto* curve = app.add_subcommand("curve-count", "points on y^2 + cy + xy = x^3");
    curve->add_option("--m", m)->required();
    curve->add_option("--c", c_hex)->required();

    auto* expsums = app.add_subcommand("expsums", "the four exponential sums of the tables");
    expsums->add_option("--m", m)->required();

    app.add_subcommand("lpoly", "L-polynomial of y^2 + y = x^9 + x^3 from scratch");

    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("--m-min", m_min);
    verify_cmd->add_option("--m-max", m_max);
    verify_cmd->add_option("--suite", suite)
        ->check(CLI::IsMember(
            {"all", "field", "lemma10", "thm6", "thm4", "thm9", "lemma12", "thm13", "thm16"}));

    app.require_subcommand(1);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    if (const char* env = std::getenv("KLOO_FORCE"); env != nullptr && std::string(env) != "0") {
        force = true;
    }

    try {
        std::optional<std::uint64_t> modulus;
        if (!modulus_arg.empty()) modulus = std::stoull(modulus_arg, nullptr, 16);

        json record;
        int rc = kOk;

        if (app.got_subcommand(ksum)) {
            FieldContext F(m, modulus);
            const FieldElement a = F.parse_element(a_hex);
            const long long v = kloosterman_direct(F, a, force);
            const auto mod3 = congruence_mod3(F, a, force);
            record["command"] = "ksum";
            record["field"] = field_block(F);
            json payload;
            payload["a_hex"] = F.element_hex(a);
            payload["value"] = v;
            payload["mod8"] = congruence_mod8(F, a);
            payload["mod3"] = mod3.has_value() ? json(*mod3) : json("undetermined");
            payload["mod24"] = ((v % 24) + 24) % 24;
            record["payload"] = payload;
            record["status"] = "ok";
        } else if (app.got_subcommand(classify)) {
            FieldContext F(m, modulus);
            record["command"] = "classify";
            record["field"] = field_block(F);
            if (all) {
                json items = json::array();
                for (FieldElement a = 1; a < F.q(); ++a) {
                    items.push_back(classification_json(F, classify24(F, a, force)));
                }
                record["payload"] = {{"items", items}};
            } else {
                if (a_hex.empty()) throw Error("classify needs --a or --all");
                const FieldElement a = F.parse_element(a_hex);
                record["payload"] = classification_json(F, classify24(F, a, force));
            }
            record["status"] = "ok";
        } else if (app.got_subcommand(dist)) {
            FieldContext F(m, modulus);
            const DistMode dm = mode == "fast"   ? DistMode::Fast
                                : mode == "brute" ? DistMode::Brute
                                                  : DistMode::Closed;
            const DistTable t = distribution(F, dm, force);
            record["command"] = "distribution";
            record["field"] = field_block(F);
            json counts;
            for (int key : {3, 7, 11, 15, 19, 23}) counts[std::to_string(key)] = t.counts.at(key);
            record["payload"] = {{"mode", mode}, {"counts", counts}};
            record["status"] = "ok";
        } else if (app.got_subcommand(solveeq)) {
            FieldContext F(m, modulus);
            const FieldElement a = F.parse_element(a_hex);
            const SolutionReport rep = count_solutions(F, k, a, force);
            record["command"] = "solve-eq";
            record["field"] = field_block(F);
            json payload;
            payload["k"] = rep.k;
            payload["a_hex"] = F.element_hex(rep.a);
            payload["s"] = rep.s;
            payload["case"] = to_string(rep.tag);
            payload["count"] = rep.count;
            payload["root_b_hex"] =
                rep.root_b.has_value() ? json(F.element_hex(*rep.root_b)) : json(nullptr);
            json sols = json::array();
            for (FieldElement x : enumerate_solutions(F, k, a, force)) {
                sols.push_back(F.element_hex(x));
            }
            payload["solutions"] = sols;
            record["payload"] = payload;
            record["status"] = "ok";
        } else if (app.got_subcommand(curve)) {
            FieldContext F(m, modulus);
            const FieldElement c = F.parse_element(c_hex);
            const CurveCount cc = curve_count(F, c, force);
            record["command"] = "curve-count";
            record["field"] = field_block(F);
            record["payload"] = {{"c_hex", F.element_hex(cc.c)},
                                 {"points", cc.points},
                                 {"p3", cc.p3},
                                 {"epsilon", cc.epsilon}};
            record["status"] = "ok";
        } else if (app.got_subcommand(expsums)) {
            FieldContext F(m, modulus);
            record["command"] = "expsums";
            record["field"] = field_block(F);
            json sums = json::array();
            for (SumKind kind :
                 {SumKind::X3, SumKind::X9, SumKind::X3PlusX, SumKind::X9PlusX3}) {
                json row;
                row["kind"] = to_string(kind);
                row["brute"] = char_sum(F, sum_kind_poly(kind), force);
                row["closed"] = m % 2 == 0 ? json(lemma10_closed(kind, m)) : json(nullptr);
                sums.push_back(row);
            }
            record["payload"] = {{"sums", sums}};
            record["status"] = "ok";
        } else if (app.got_subcommand("lpoly")) {
            const auto S = brute_power_sums_x9_x3();
            const LPolynomial L = lpoly_build(S);
            record["command"] = "lpoly";
            record["field"] = json(nullptr);
            json payload;
            payload["power_sums"] = S;
            payload["coeffs"] = L.coeffs;
            json predicted;
            for (int r = 5; r <= 8; ++r) {
                predicted[std::to_string(r)] = lpoly_power_sum(L, r);
            }
            payload["predicted_power_sums"] = predicted;
            record["payload"] = payload;
            record["status"] = "ok";
        } else if (app.got_subcommand(verify_cmd)) {
            std::vector<std::string> suites;
            if (suite == "all") {
                suites = verify::suite_order();
            } else {
                suites = {suite};
            }
            const auto results = verify::run_suites(suites, m_min, m_max, force);
            record["command"] = "verify";
            record["field"] = json(nullptr);
            json items = json::array();
            bool all_pass = true;
            for (const auto& r : results) {
                items.push_back({{"suite", r.suite},
                                 {"m", r.m},
                                 {"status", r.pass ? "pass" : "fail"},
                                 {"detail", r.detail}});
                all_pass = all_pass && r.pass;
            }
            record["payload"] = {{"results", items}};
            record["status"] = all_pass ? "pass" : "fail";
            rc = all_pass ? kOk : kVerifyFail;
            if (!all_pass) {
                for (const auto& r : results) {
                    if (!r.pass) {
                        err << "FAIL " << r.suite << " m=" << r.m << ": " << r.detail << "\n";
                        break;
                    }
                }
            }
        }

        emit(record, format, out);
        return rc;
    } catch (const CapError& e) {
        err << "cap violation: " << e.what() << " (rerun with --force)\n";
        return kCap;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace kloo::cli

#endif  // KLOO_CLI_HPP
