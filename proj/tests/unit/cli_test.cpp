#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "duet");
    std::ostringstream out, err;
    const int code = duet::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("duet_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenPlanRenderPipeline) {
    ASSERT_EQ(run({"gen", "--seed", "7", "--n", "12", "--out", path("scene.json")}).code, 0);
    const auto plan = run({"plan", "--scene", path("scene.json"), "--method", "search", "--out", path("out")});
    ASSERT_EQ(plan.code, 0) << plan.err;
    for (const char* f : {"allocation.json", "timeline.json", "mission.json"}) {
        EXPECT_TRUE(fs::exists(dir_ / "out" / f)) << f;
    }
    EXPECT_EQ(run({"render", "--scene", path("scene.json"), "--tgraph", "1", "--out", path("scene.svg")}).code, 0);
    EXPECT_EQ(run({"render", "--timeline", path("out/timeline.json"), "--out", path("gantt.svg")}).code, 0);
    EXPECT_NE(slurp(dir_ / "gantt.svg").find("<svg"), std::string::npos);
}

TEST_F(Cli, GenIsDeterministic) {
    EXPECT_EQ(run({"gen", "--seed", "3"}).out, run({"gen", "--seed", "3"}).out);
}

TEST_F(Cli, RepeatedMethodIsUsageError) {
    const auto r = run({"plan", "--scene", duet::fixtures::data_path("fig3.json"), "--method", "search", "--method",
                        "greedy", "--out", path("o")});
    EXPECT_EQ(r.code, 2);
}

TEST_F(Cli, UnknownFlagAndMethodAreUsageErrors) {
    EXPECT_EQ(run({"gen", "--sead", "3"}).code, 2);
    EXPECT_EQ(run({"plan", "--scene", "x.json", "--method", "astar"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"verify", "--suite", "--scene", "x.json"}).code, 2);
    EXPECT_EQ(run({"plan", "--scene", duet::fixtures::data_path("fig3.json"), "--oracle", "sometimes",
                   "--out", path("o")}).code,
              2);
}

TEST_F(Cli, MissingOrInvalidInputFails) {
    EXPECT_EQ(run({"plan", "--scene", path("nope.json"), "--out", path("o")}).code, 1);
    std::ofstream(path("bad.json")) << "{\"workspace\": ";
    const auto r = run({"render", "--scene", path("bad.json")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("parse error"), std::string::npos);
}

TEST_F(Cli, InvariantViolationNamed) {
    std::string text = slurp(duet::fixtures::data_path("fig3.json"));
    const auto pos = text.find("\"target\": false");
    text.replace(pos, 15, "\"target\": true");
    std::ofstream(path("two.json")) << text;
    const auto r = run({"render", "--scene", path("two.json")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("exactly one target"), std::string::npos);
}

TEST_F(Cli, OutputDirectoryFromEnvironment) {
    setenv("DUET_OUT_DIR", path("env").c_str(), 1);
    const auto r = run({"plan", "--scene", duet::fixtures::data_path("fig5.json"), "--method", "greedy"});
    unsetenv("DUET_OUT_DIR");
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(fs::exists(dir_ / "env" / "mission.json"));
}

TEST_F(Cli, PlanOutputsAreDeterministic) {
    const auto scene = duet::fixtures::data_path("fig3.json");
    const std::vector<std::string> common = {"--method", "random", "--oracle", "seeded-random:0.3:4", "--seed", "2"};
    auto args = [&](const std::string& out) {
        std::vector<std::string> a = {"plan", "--scene", scene, "--out", out};
        a.insert(a.end(), common.begin(), common.end());
        return a;
    };
    run(args(path("a")));
    run(args(path("b")));
    for (const char* f : {"allocation.json", "timeline.json", "mission.json"}) {
        EXPECT_EQ(slurp(dir_ / "a" / f), slurp(dir_ / "b" / f)) << f;
    }
}

TEST_F(Cli, BlacklistOracleTriggersReplanning) {
    const auto r = run({"plan", "--scene", duet::fixtures::data_path("fig5.json"), "--oracle", "blacklist:2-1",
                        "--out", path("o")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(slurp(dir_ / "o" / "mission.json").find("\"replanning_count\": 1"), std::string::npos);
}

TEST_F(Cli, RenderFig3OverlayNumbersPlan) {
    const auto a = run({"render", "--scene", duet::fixtures::data_path("fig3.json"), "--tgraph", "1"});
    const auto b = run({"render", "--scene", duet::fixtures::data_path("fig3.json"), "--tgraph", "1"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(count(a.out, "class=\"orp\""), 3u);
    EXPECT_EQ(count(a.out, "class=\"order\""), 3u);
    for (const char* label : {">1</text>", ">2</text>", ">3</text>"}) {
        EXPECT_NE(a.out.find(label), std::string::npos) << label;
    }
    const auto r2 = run({"render", "--scene", duet::fixtures::data_path("fig3.json"), "--tgraph", "2"});
    EXPECT_EQ(count(r2.out, "class=\"orp\""), 4u);
}

TEST_F(Cli, RenderNeedsInput) {
    EXPECT_EQ(run({"render"}).code, 2);
    EXPECT_EQ(run({"render", "--tgraph", "1"}).code, 2);
}

TEST_F(Cli, VerifySceneAndSuite) {
    const auto one = run({"verify", "--scene", duet::fixtures::data_path("fig5.json")});
    EXPECT_EQ(one.code, 0) << one.out;
    EXPECT_NE(one.out.find("search=oracle: 1/1"), std::string::npos);
    const auto suite = run({"verify", "--suite"});
    EXPECT_EQ(suite.code, 0) << suite.out;
    EXPECT_NE(suite.out.find("search=oracle: 200/200"), std::string::npos) << suite.out;
}

TEST_F(Cli, BenchWritesCsv) {
    std::ofstream(path("cfg.json")) << R"({"n_values":[12],"repetitions":2,"methods":["search","distance"]})";
    const auto r = run({"bench", "--config", path("cfg.json"), "--out-csv", path("out.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string csv = slurp(dir_ / "out.csv");
    EXPECT_EQ(count(csv, "\n"), 3u);
    EXPECT_EQ(csv.rfind("method,N,", 0), 0u);
}
