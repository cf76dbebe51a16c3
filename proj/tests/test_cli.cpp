#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "kloo/cli.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int rc;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int rc = kloo::cli::run(args, out, err);
    return {rc, out.str(), err.str()};
}

}  // namespace

TEST_CASE("ksum json output") {
    const auto r = run_cli({"ksum", "--m", "4", "--a", "1", "--format", "json"});
    REQUIRE(r.rc == 0);
    const json j = json::parse(r.out);
    CHECK(j["command"] == "ksum");
    CHECK(j["field"]["m"] == 4);
    CHECK(j["field"]["modulus_hex"] == "13");
    CHECK(j["payload"]["value"] == -1);
    CHECK(j["payload"]["mod8"] == 7);
    CHECK(j["payload"]["mod24"] == 23);
    CHECK(j["status"] == "ok");
}

TEST_CASE("distribution closed over GF(64)") {
    const auto r =
        run_cli({"distribution", "--m", "6", "--mode", "closed", "--format", "json"});
    REQUIRE(r.rc == 0);
    const json j = json::parse(r.out);
    const json& c = j["payload"]["counts"];
    CHECK(c["3"] == 6);
    CHECK(c["7"] == 9);
    CHECK(c["11"] == 14);
    CHECK(c["15"] == 10);
    CHECK(c["19"] == 12);
    CHECK(c["23"] == 12);
}

TEST_CASE("distribution modes agree through the front end") {
    const auto fast = run_cli({"distribution", "--m", "6", "--mode", "fast", "--format", "json"});
    const auto brute =
        run_cli({"distribution", "--m", "6", "--mode", "brute", "--format", "json"});
    REQUIRE(fast.rc == 0);
    REQUIRE(brute.rc == 0);
    CHECK(json::parse(fast.out)["payload"]["counts"] ==
          json::parse(brute.out)["payload"]["counts"]);
}

TEST_CASE("classify single and all") {
    const auto one = run_cli({"classify", "--m", "6", "--a", "2", "--format", "json"});
    REQUIRE(one.rc == 0);
    const json j = json::parse(one.out);
    const int mod24 = j["payload"]["mod24"].get<int>();
    CHECK((j["payload"]["mod24"].get<int>() % 8 + 8) % 8 == j["payload"]["mod8"].get<int>() % 8);
    CHECK(mod24 % 3 == j["payload"]["mod3"].get<int>());

    const auto all = run_cli({"classify", "--m", "6", "--all", "--format", "json"});
    REQUIRE(all.rc == 0);
    CHECK(json::parse(all.out)["payload"]["items"].size() == 63);
}

TEST_CASE("solve-eq report is consistent with its own enumeration") {
    const auto r =
        run_cli({"solve-eq", "--m", "6", "--k", "2", "--a", "1", "--format", "json"});
    REQUIRE(r.rc == 0);
    const json p = json::parse(r.out)["payload"];
    CHECK(p["s"] == 2);
    CHECK(p["count"].get<std::size_t>() == p["solutions"].size());
}

TEST_CASE("curve-count ties the two counts together") {
    const auto r = run_cli({"curve-count", "--m", "5", "--c", "3", "--format", "json"});
    REQUIRE(r.rc == 0);
    const json p = json::parse(r.out)["payload"];
    CHECK(3 * p["p3"].get<long long>() == p["points"].get<long long>());
    CHECK(p["epsilon"] == 0);
}

TEST_CASE("expsums brute equals closed on even m") {
    const auto r = run_cli({"expsums", "--m", "8", "--format", "json"});
    REQUIRE(r.rc == 0);
    for (const auto& row : json::parse(r.out)["payload"]["sums"]) {
        CHECK(row["brute"] == row["closed"]);
    }
}

TEST_CASE("lpoly pipeline output") {
    const auto r = run_cli({"lpoly", "--format", "json"});
    REQUIRE(r.rc == 0);
    const json p = json::parse(r.out)["payload"];
    CHECK(p["power_sums"] == json::array({2, 4, -4, 16}));
    CHECK(p["coeffs"] == json::array({1, 2, 4, 4, 8, 8, 16, 16, 16}));
    CHECK(p["predicted_power_sums"]["8"] == -128);
}

TEST_CASE("verify runs clean on small fields") {
    const auto r = run_cli({"verify", "--suite", "thm9", "--m-min", "4", "--m-max", "6",
                            "--format", "json"});
    CHECK(r.rc == 0);
    CHECK(json::parse(r.out)["status"] == "pass");
}

TEST_CASE("modulus override changes the field but not the spectrum") {
    const auto a = run_cli({"distribution", "--m", "6", "--mode", "fast", "--format", "json"});
    const auto b = run_cli({"distribution", "--m", "6", "--mode", "fast", "--modulus", "49",
                            "--format", "json"});
    REQUIRE(a.rc == 0);
    REQUIRE(b.rc == 0);
    const json ja = json::parse(a.out), jb = json::parse(b.out);
    CHECK(ja["field"]["modulus_hex"] != jb["field"]["modulus_hex"]);
    CHECK(ja["payload"]["counts"] == jb["payload"]["counts"]);
}

TEST_CASE("output formats") {
    const auto csv = run_cli({"ksum", "--m", "4", "--a", "2", "--format", "csv"});
    REQUIRE(csv.rc == 0);
    CHECK(csv.out.rfind("key,value\n", 0) == 0);
    CHECK(csv.out.find("payload.value,") != std::string::npos);

    const auto table = run_cli({"ksum", "--m", "4", "--a", "2"});
    REQUIRE(table.rc == 0);
    CHECK(table.out.find("payload.value") != std::string::npos);
}

TEST_CASE("byte-identical reruns") {
    const std::vector<std::string> args = {"classify", "--m", "8", "--all", "--format", "json"};
    CHECK(run_cli(args).out == run_cli(args).out);
}

TEST_CASE("exit codes") {
    CHECK(run_cli({"--help"}).rc == 0);
    CHECK(run_cli({}).rc == 2);
    CHECK(run_cli({"ksum", "--m", "4"}).rc == 2);                      // missing --a
    CHECK(run_cli({"ksum", "--m", "4", "--a", "0"}).rc == 2);          // a = 0
    CHECK(run_cli({"ksum", "--m", "4", "--a", "zz"}).rc == 2);         // bad hex
    CHECK(run_cli({"ksum", "--m", "4", "--a", "1", "--modulus", "15"}).rc == 2);
    CHECK(run_cli({"classify", "--m", "5", "--a", "1"}).rc == 2);      // odd m
    CHECK(run_cli({"nonsense"}).rc == 2);

    const auto cap = run_cli({"distribution", "--m", "16", "--mode", "brute"});
    CHECK(cap.rc == 3);
    CHECK(cap.err.find("--force") != std::string::npos);
}
