#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "delliptic/cli.hpp"
#include "delliptic/json_io.hpp"

namespace {

struct Run {
    int rc;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "delliptic");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int rc = delliptic::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {rc, out.str(), err.str()};
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("class") {
    CHECK(run({"class", "m2", "--d", "2"}).out == "6*delta_0 + 24*delta_1\n");
    CHECK(run({"class", "m3", "--d", "1"}).out == "0\n");
    CHECK(run({"class", "m2", "--d", "0"}).rc == 2);
    CHECK(run({"class", "m5", "--d", "2"}).rc == 2);
    CHECK(run({"class", "m2"}).rc == 2);
    CHECK(run({}).rc == 2);
    CHECK(run({"--help"}).rc == 0);
}

TEST_CASE("class --json") {
    const auto r = run({"class", "m2e", "--d", "2", "--json"});
    REQUIRE(r.rc == 0);
    const auto j = delliptic::json_io::Json::parse(r.out);
    CHECK(j["schema"] == "delliptic/1");
    CHECK(j["class"]["space"] == "M2");
    CHECK(j["class"]["degree"] == 2);
    CHECK(j["class"]["coeffs"]["delta_00"] == "54/5");
    CHECK(j["class"]["coeffs"]["delta_01"] == "84/5");
    // Global flag also accepted before the subcommand.
    CHECK(run({"--json", "class", "m2e", "--d", "2"}).out == r.out);
}

TEST_CASE("series") {
    const auto r = run({"series", "m2", "delta_0", "--N", "10"});
    REQUIRE(r.rc == 0);
    CHECK(r.out.rfind("series: 0, 0, 6, 32, ", 0) == 0);
    CHECK(run({"series", "m3", "kappa_2", "--N", "30", "--json"}).out.find("\"monomials\"") != std::string::npos);
    CHECK(run({"series", "m2", "delta_0", "--N", "3"}).rc == 2);
    CHECK(run({"series", "m2", "kappa_2", "--N", "10"}).rc == 2);
}

TEST_CASE("qmod-fit") {
    // sigma_3 through q^10.
    const std::string s3 = R"(["0","1","9","28","73","126","252","344","585","757","1134"])";
    const auto r = run({"qmod-fit", "--weight", "4", s3});
    REQUIRE(r.rc == 0);
    CHECK(r.out == "-1/240 + 1/240*E4\n");
    const auto j = delliptic::json_io::Json::parse(run({"qmod-fit", "--weight", "4", "--json", s3}).out);
    CHECK(j["fit"]["monomials"][1]["b"] == 1);
    CHECK(j["fit"]["monomials"][1]["coeff"] == "1/240");
    const std::string dtau = R"(["0","1","4","6","12","10","24","14","32","27","40","22","72","26","56","60","80","34","108","38","120","84","88","46","192","75","104","108","168","58","240"])";
    const auto nq = delliptic::json_io::Json::parse(run({"qmod-fit", "--json", dtau}).out);
    CHECK(nq["fit"]["not_quasimodular"]["max_weight"] == 6);
    CHECK(nq["fit"]["not_quasimodular"]["order"] == 30);
    CHECK(run({"qmod-fit", "[1, 2"}).rc == 2);
    CHECK(run({"qmod-fit"}).rc == 2);
}

TEST_CASE("hurwitz and count") {
    CHECK(run({"hurwitz", "--d", "3", "--profile", "3", "--profile", "3", "--profile", "3"}).out == "1/3\n");
    CHECK(run({"hurwitz", "--d", "4", "--profile", "3", "--profile", "4"}).rc == 2);
    CHECK(run({"count", "sublattices", "--d", "6"}).out == "12\n");
    CHECK(run({"count", "pointed-isogenies", "--d", "4"}).out == "21\n");
    CHECK(run({"count", "dd22", "--d", "3"}).out == "16\n");
    CHECK(run({"count", "dd2222", "--d", "2"}).out == "720\n");
    CHECK(run({"count", "widgets", "--d", "2"}).rc == 2);
}

TEST_CASE("verify") {
    const auto ok = run({"verify", "--max-d", "1"});
    CHECK(ok.rc == 0);
    CHECK(ok.out.find("all checks passed") != std::string::npos);

    const auto bad = run({"verify", "--max-d", "3", "--inject-pairing", "M3:Delta_[5]:kappa_2:1/7"});
    CHECK(bad.rc == 1);
    CHECK(bad.out.find("FAIL  pairing_tables") != std::string::npos);
    CHECK(bad.err.find("pairing_tables") != std::string::npos);

    CHECK(run({"verify", "--inject-pairing", "M3:nope"}).rc == 2);
    CHECK(run({"verify", "--inject-pairing", "M3:Delta_[5]:Delta_[4]:1"}).rc == 2);
    CHECK(run({"verify", "--N", "5"}).rc == 2);
}

TEST_CASE("output is deterministic and --out writes the JSON document") {
    const std::string path = "cli_test_report.json";
    const auto a = run({"verify", "--max-d", "3", "--N", "12", "--json", "--out", path});
    const auto b = run({"verify", "--max-d", "3", "--N", "12", "--json"});
    REQUIRE(a.rc == 0);
    CHECK(a.out == b.out);
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == a.out);
    const auto j = delliptic::json_io::Json::parse(ss.str());
    CHECK(j["ok"] == true);
    CHECK(j["first_failure"].is_null());
    CHECK(j["classes"]["m3"][1]["theorem"]["coeffs"]["kappa_2"] == "-108");
    CHECK(j["classes"]["m3"][1]["agree"] == true);
    std::remove(path.c_str());
}

}
