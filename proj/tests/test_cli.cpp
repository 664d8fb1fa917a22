#include "commands.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "bintab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = bintab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
    args.insert(args.begin(), "--json");
    const auto r = run(args);
    REQUIRE(r.code == 0);
    return nlohmann::json::parse(r.out);
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "bintab_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

void write(const std::filesystem::path& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("analyze the running example") {
    const auto j = run_json({"analyze", "builtin:example1"});
    CHECK(std::abs(j["pairs"][0]["odds_ratio"]["value"].get<double>() - 0.40) < 5e-3);
    CHECK(std::abs(j["pairs"][1]["odds_ratio"]["value"].get<double>() - 0.64) < 5e-3);
    CHECK(std::abs(j["pairs"][2]["odds_ratio"]["value"].get<double>() - 1.11) < 5e-3);
    CHECK(j["conditional_odds_ratios"].size() == 6);
    const auto text = run({"analyze", "builtin:example1"});
    CHECK(text.code == 0);
    CHECK(text.out.find("top-order odds ratio") != std::string::npos);
}

TEST_CASE("analyze the rater table") {
    const auto j = run_json({"analyze", "builtin:raters"});
    CHECK(j["top_order_odds_ratio"]["exact"] == "2373/800");
    CHECK(std::abs(j["pairs"][2]["odds_ratio"]["value"].get<double>() - 56.672) < 1e-3);
}

TEST_CASE("analyze a uniform table") {
    const auto path = scratch("uniform.json");
    write(path, R"({"d": 3, "kind": "counts", "cells": [1,1,1,1,1,1,1,1]})");
    const auto j = run_json({"analyze", path.string()});
    for (const auto& p : j["pairs"]) {
        CHECK(p["correlation"] == 0.0);
        CHECK(p["odds_ratio"]["exact"] == "1");
    }
    for (const auto& c : j["conditional_odds_ratios"]) CHECK(c["odds_ratio"]["exact"] == "1");
    CHECK(j["top_order_odds_ratio"]["exact"] == "1");
}

TEST_CASE("vertices subcommand") {
    auto j = run_json({"--digits", "3", "vertices", "builtin:example1"});
    CHECK(j["count"] == 2);
    CHECK(j["dimension"] == 1);
    CHECK(j["vertices"][0][1] == "97/500");
    j = run_json({"--digits", "3", "--margins", "observed", "vertices", "builtin:example1"});
    CHECK(j["vertices"][0][0] == "1/20");
    j = run_json({"--digits", "3", "vertices", "builtin:water"});
    CHECK(j["count"] == 96);
    CHECK(j["dimension"] == 5);
    const auto threaded = run_json({"--digits", "3", "--threads", "3", "vertices", "builtin:water"});
    CHECK(threaded == j);
}

TEST_CASE("vertex files feed mixture, decompose, loglinear and sample") {
    const auto vfile = scratch("v.json");
    REQUIRE(run({"--digits", "3", "vertices", "builtin:example1", "-o", vfile.string()}).code == 0);
    const auto mix = run_json({"mixture", "--vertices", vfile.string(), "--weights", "1/2,1/2"});
    CHECK(mix["cells"][0] == "173/2000");
    const auto mid = scratch("mid.json");
    write(mid, R"({"d": 3, "cells": )" + mix["cells"].dump() + "}");
    const auto dec = run_json({"decompose", mid.string(), "--vertices", vfile.string()});
    CHECK(dec["theta"][0].get<double>() == doctest::Approx(0.5));
    const auto ll = run_json({"loglinear", "--vertices", vfile.string(), "--parametrization", "zero-mean"});
    CHECK(ll.size() == 2);
    CHECK(ll[0]["eps"] == 1e-8);
    const auto s = run({"--seed", "4", "sample", "--vertices", vfile.string(), "--count", "3"});
    CHECK(s.code == 0);
    CHECK(std::count(s.out.begin(), s.out.end(), '\n') == 4);
}

TEST_CASE("sampling output is reproducible") {
    for (const char* method : {"dirichlet", "hit-and-run"}) {
        const std::vector<std::string> args = {"--seed", "99", "sample", "builtin:example1", "--method", method, "--count", "20"};
        const auto a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        const auto header = nlohmann::json::parse(a.out.substr(0, a.out.find('\n')));
        CHECK(header["header"]["seed"] == 99);
        CHECK(header["header"]["method"] == method);
    }
}

TEST_CASE("targets, constraints, ipf, reproduce") {
    const auto t = run_json({"--digits", "3", "targets", "builtin:example1"});
    CHECK(t["moments"]["mu12"] == "97/500");
    const auto h = run_json({"--digits", "3", "constraints", "builtin:example1"});
    CHECK(h["rows"].size() == 6);
    const auto ipf = run_json({"--digits", "3", "ipf", "builtin:example1"});
    CHECK(ipf["converged"] == true);
    CHECK(std::abs(ipf["top_order_odds_ratio"].get<double>() - 1.0) < 1e-6);
    for (const char* name : {"example1", "water", "raters"}) {
        const auto r = run_json({"reproduce", name});
        CHECK(r["sections"].size() >= 3);
        CHECK(run({"reproduce", name}).out.find("deviation") != std::string::npos);
    }
}

TEST_CASE("export round trip") {
    const auto path = scratch("export.json");
    REQUIRE(run({"export", "builtin:example1", "-o", path.string()}).code == 0);
    const auto again = run({"export", path.string()});
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(again.out == buf.str());
    const auto csv = scratch("export.csv");
    REQUIRE(run({"export", "builtin:water", "--format", "csv", "-o", csv.string()}).code == 0);
    CHECK(run({"export", csv.string(), "--format", "csv"}).out == run({"export", "builtin:water", "--format", "csv"}).out);
}

TEST_CASE("exit codes") {
    const auto bad = scratch("bad.json");
    write(bad, R"({"d": 2, "kind": "counts", "cells": [1, -1, 1, 1]})");
    auto r = run({"analyze", bad.string()});
    CHECK(r.code == bintab::cli::kExitParse);
    CHECK(r.err.find("cell 1") != std::string::npos);
    CHECK(run({"analyze", scratch("missing.json").string()}).code == bintab::cli::kExitParse);

    const auto zero = scratch("zero.json");
    write(zero, R"({"d": 2, "kind": "counts", "cells": [1, 0, 1, 1]})");
    CHECK(run({"vertices", zero.string()}).code == bintab::cli::kExitDomain);
    CHECK(run({"reproduce", "nothing"}).code == bintab::cli::kExitDomain);
    CHECK(run({"decompose", "builtin:example1", "--digits", "3"}).code == bintab::cli::kExitDomain);

    // zero-digit rounding sends every moment to 0: three axes with P(X=1) = 1/2 cannot avoid each other
    CHECK(run({"--digits", "0", "vertices", "builtin:example1"}).code == bintab::cli::kExitInfeasible);
    CHECK(run({"analyze"}).code != 0);
    CHECK(run({"--help"}).code == 0);
}
