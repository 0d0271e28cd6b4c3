#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "gsp4kit/cli.hpp"

using namespace gsp4kit;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

Json run_json(std::vector<std::string> args) {
    args.push_back("--json");
    return Json::parse(run(args).out);
}

}  // namespace

TEST_CASE("kostant report for the Klingen parabolic") {
    const Run r = run({"kostant", "--parabolic", "klingen", "--weight", "3,1,3", "--json"});
    CHECK(r.code == kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["subcommand"] == "kostant");
    CHECK(j["$schema"] == kSchemaPath);
    const Json& strata = j["payload"]["strata"];
    REQUIRE(strata.size() == 4);
    CHECK(strata[1]["degree"] == 1);
    CHECK(strata[1]["levi_weight"] == Json::array({0, 4, 3}));
    CHECK_FALSE(j["anchors"].empty());
}

TEST_CASE("landing failure exits with verification code") {
    const Run r = run({"landing", "--weight", "5,2,3"});
    CHECK(r.code == kExitVerificationFailed);
    CHECK(r.out.find("k-k' = 2t-3") != std::string::npos);
    CHECK(run({"landing", "--weight", "3,1,3"}).code == kExitOk);
}

TEST_CASE("zeta verification exit codes") {
    CHECK(run({"zeta-verify", "--order", "0"}).code == kExitOk);
    CHECK(run({"zeta-verify", "--order", "2", "--trials", "3"}).code == kExitVerificationFailed);
    CHECK(run({"zeta-verify", "--order", "2", "--trials", "3", "--convention", "rescaled"}).code == kExitOk);
    const Json j = run_json({"zeta-verify", "--order", "2", "--trials", "3"});
    CHECK(j["payload"]["first_failure"]["n"] == 1);
    CHECK(j["payload"]["constraint_enforced"] == true);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"kostant", "--weight", "3,x,1"}).code == kExitUsage);
    CHECK(run({"kostant", "--weight", "1,2,0"}).code == kExitUsage);
    CHECK(run({"kostant", "--weight", "1,0,0", "--parabolic", "levi"}).code == kExitUsage);
    CHECK(run({"bessel-classify", "--matrix", "1,1,1"}).code == kExitUsage);
    CHECK(run({"zeta-verify", "--trials", "0"}).code == kExitUsage);
    CHECK(run({"kostant", "--order", "-3"}).code == kExitUsage);
}

TEST_CASE("every computational subcommand lists anchors") {
    const std::vector<std::vector<std::string>> cases = {
        {"kostant", "--weight", "2,1,0"},      {"boundary", "--weight", "2,1,0"}, {"landing", "--weight", "4,2,3"},
        {"hodge-types", "--weight", "2,1,0"},  {"ktypes", "--weight", "2,1,0"},   {"ranks"},
        {"gamma", "--weight", "2,1"},          {"fe-check", "--weight", "2,1"},   {"char-split", "--weight", "2,1"},
        {"lfactor", "--order", "2"},           {"weyl-char", "--weight", "1,1,0"}, {"euler", "--bound", "20", "--s", "2"},
        {"bessel-classify", "--matrix", "1,0,1"}, {"zeta-verify", "--order", "1", "--trials", "1"}};
    for (const auto& c : cases) {
        const Json j = run_json(c);
        CHECK_MESSAGE(!j["anchors"].empty(), c[0]);
        CHECK(j["subcommand"] == c[0]);
        CHECK(Json::parse(j.dump()) == j);
    }
}

TEST_CASE("text output is flattened") {
    const Run r = run({"ranks", "--multiplicities", "2,3"});
    CHECK(r.out.find("rank_MB_minus1_plus: 5") != std::string::npos);
    CHECK(r.out.find("status: ok") != std::string::npos);
}

TEST_CASE("identical configuration gives identical JSON") {
    const std::vector<std::string> args = {"zeta-verify", "--order", "3", "--trials", "4", "--seed", "17", "--json"};
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("seed environment variable overrides the flag") {
    ::setenv("GSP4KIT_SEED", "77", 1);
    const Json j = run_json({"zeta-verify", "--order", "1", "--trials", "1", "--seed", "5"});
    ::unsetenv("GSP4KIT_SEED");
    CHECK(j["config"]["seed"] == 77);
    CHECK(j["payload"]["seed"] == 77);
}

TEST_CASE("selftest suites") {
    bool pass = true;
    const Json s = run_selftest(xi_action_table(), 42, &pass);
    std::map<std::string, bool> by_name;
    for (const auto& suite : s["suites"]) by_name[suite["name"].get<std::string>()] = suite["pass"].get<bool>();
    CHECK(by_name.at("weyl_xi_consistency"));
    CHECK(by_name.at("kostant_vs_chevalley_eilenberg"));
    CHECK(by_name.at("lfactor_vs_symmetric_powers"));
    CHECK(by_name.at("zeta_identity_rescaled"));
    // The published reading fails and the selftest reports it.
    CHECK_FALSE(by_name.at("zeta_identity_published"));
    CHECK_FALSE(pass);
    CHECK(run({"selftest"}).code == kExitVerificationFailed);
}

TEST_CASE("selftest detects a corrupted xi table") {
    auto bad = xi_action_table();
    std::swap(bad[2].perm[1], bad[2].perm[2]);
    bool pass = true;
    const Json s = run_selftest(bad, 42, &pass);
    CHECK_FALSE(pass);
    CHECK(s["suites"][0]["name"] == "weyl_xi_consistency");
    CHECK(s["suites"][0]["pass"] == false);
}
