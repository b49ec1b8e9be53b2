#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"

using lefschetz::cli::run_cli;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    args.insert(args.begin(), {"--format", "json", "--no-timing"});
    const auto r = run(args);
    EXPECT_NE(r.code, 2) << r.err;
    return json::parse(r.out);
}

}  // namespace

TEST(Cli, CheckSlpOnPaperModule) {
    const auto doc = run_json({"check", "slp", "--num", "x^3,y^4", "--den", "x^5,y^5"});
    EXPECT_TRUE(doc["result"]["holds"].get<bool>());
    EXPECT_EQ(doc["command"], "check slp");
    EXPECT_EQ(doc["version"], "0.1.0");
    EXPECT_EQ(doc["runtime_ms"], 0);
}

TEST(Cli, SchemaKeysAreSorted) {
    const auto r = run({"--format", "json", "hilbert", "--num", "x^2,y^2", "--den", "x^4,y^4"});
    ASSERT_EQ(r.code, 0);
    const auto doc = json::parse(r.out);
    std::vector<std::string> keys;
    for (const auto& [k, v] : doc.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"command", "failures", "inputs", "result", "runtime_ms", "version"}));
    EXPECT_LT(r.out.find("\"command\""), r.out.find("\"failures\""));
    EXPECT_LT(r.out.find("\"runtime_ms\""), r.out.find("\"version\""));
    EXPECT_TRUE(doc["runtime_ms"].is_number_integer());
    EXPECT_EQ(doc["result"]["hilbert"]["text"], "2t^2+4t^3+3t^4+2t^5+t^6");
    EXPECT_FALSE(doc["result"]["almost_centered"].get<bool>());
}

TEST(Cli, ByteIdenticalJson) {
    const std::vector<std::string> args{"--format", "json", "--no-timing", "check", "slp", "--num", "x^2,y^2",
                                        "--den", "x^4,y^4,z^3", "--random-forms", "3", "--seed", "42"};
    const auto first = run(args);
    const auto second = run(args);
    EXPECT_EQ(first.code, 0);
    EXPECT_EQ(first.out, second.out);
    const auto doc = json::parse(first.out);
    EXPECT_EQ(doc["result"]["reports"].size(), 4u);
    EXPECT_FALSE(doc["result"]["holds"].get<bool>());
    const auto third = run({"--format", "json", "--no-timing", "sweep", "lgv-oracle", "--max", "4", "--jobs", "3"});
    const auto fourth = run({"--format", "json", "--no-timing", "sweep", "lgv-oracle", "--max", "4", "--jobs", "1"});
    EXPECT_EQ(third.out.substr(third.out.find("\"result\"")), fourth.out.substr(fourth.out.find("\"result\"")));
}

TEST(Cli, LgvOracle) {
    const auto doc = run_json({"lgv", "--a", "1,2", "--b", "0,1", "--oracle"});
    EXPECT_EQ(doc["result"]["determinant"], "1");
    EXPECT_EQ(doc["result"]["path_count"], "1");
    EXPECT_EQ(doc["result"]["positivity"], "Positive");
}

TEST(Cli, LinearFormOverride) {
    const auto doc = run_json({"check", "wlp", "--den", "x^3,y^3", "--linear-form", "2,5"});
    EXPECT_EQ(doc["result"]["witness"], json({2, 5}));
    EXPECT_EQ(run({"check", "wlp", "--den", "x^3,y^3", "--linear-form", "2,q"}).code, 2);
    EXPECT_EQ(run({"check", "wlp", "--den", "x^3,y^3", "--linear-form", "1,1,1"}).code, 2);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"hilbert", "--den", "x^^2"}).code, 2);
    EXPECT_EQ(run({"hilbert", "--num", "x", "--den", "x^2*y"}).code, 2);
    EXPECT_EQ(run({"check", "both", "--den", "x^2"}).code, 2);
    EXPECT_EQ(run({"pipeline", "--a", "3", "--b", "3", "--i", "2", "--d", "5"}).code, 2);
    EXPECT_EQ(run({"lgv", "--a", "2,1", "--b", "0,1"}).code, 2);
    EXPECT_EQ(run({"reproduce", "example-9"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
    // A sweep with findings is a property failure rather than a usage error.
    EXPECT_EQ(run({"--no-timing", "sweep", "lemmas", "--max", "3"}).code, 1);
}

TEST(Cli, ReproduceTargetsPass) {
    for (const auto* target : {"example-1var", "example-lex", "example-3var", "remark-tensor", "section4-csm"}) {
        const auto r = run({"--format", "json", "--no-timing", "reproduce", target});
        EXPECT_EQ(r.code, 0) << target << "\n" << r.out;
        const auto doc = json::parse(r.out);
        EXPECT_TRUE(doc["failures"].empty());
        EXPECT_TRUE(doc["result"]["passed"].get<bool>());
    }
}

TEST(Cli, RemarkRecordsFailingPair) {
    const auto doc = run_json({"reproduce", "remark-tensor"});
    const auto& failures = doc["result"]["slp"]["failures"];
    ASSERT_EQ(failures.size(), 1u);
    EXPECT_EQ(failures[0]["i"], 3);
    EXPECT_EQ(failures[0]["d"], 3);
}

TEST(Cli, PipelineVerb) {
    const auto doc = run_json({"pipeline", "--a", "5", "--b", "5", "--i", "4", "--d", "1", "--ideal", "x^3,y^4"});
    EXPECT_EQ(doc["result"]["rows"], json({"x^4", "x^3*y", "y^4"}));
    EXPECT_TRUE(doc["result"]["certified"].get<bool>());
    EXPECT_TRUE(doc["failures"].empty());
}

TEST(Cli, CsmVerb) {
    const auto doc = run_json({"csm", "--ideal", "x^3,y^3,z^4,x*z,y*z", "--var", "x"});
    EXPECT_TRUE(doc["result"]["criterion"].get<bool>());
    EXPECT_EQ(doc["result"]["entries"].size(), 2u);
}

TEST(Cli, TextFormatAndOutputFile) {
    const auto text = run({"--no-timing", "hilbert", "--den", "x^2,y^3"});
    EXPECT_EQ(text.code, 0);
    EXPECT_NE(text.out.find("text: 1+2t+2t^2+t^3"), std::string::npos);
    const auto path = std::filesystem::temp_directory_path() / "lefschetz_cli_report.json";
    const auto r = run({"--format", "json", "--no-timing", "--output", path.string(), "hilbert", "--den", "x^2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream file(path);
    const auto doc = json::parse(file);
    EXPECT_EQ(doc["result"]["socle_degree"], 1);
    std::filesystem::remove(path);
}

TEST(Cli, EnvironmentSelectsFormat) {
    ::setenv("LEFSCHETZ_FORMAT", "json", 1);
    const auto r = run({"--no-timing", "hilbert", "--den", "x^2"});
    ::unsetenv("LEFSCHETZ_FORMAT");
    EXPECT_TRUE(json::accept(r.out));
}
