#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "geodex/cli.hpp"

using geodex::cli::Format;
using geodex::cli::JobSpec;
using geodex::cli::run;
using nlohmann::json;

namespace {

JobSpec job(const std::string& cmd, const json& payload) {
    JobSpec j;
    j.command = cmd;
    j.payload = payload;
    return j;
}

json parse(const geodex::cli::JobResult& r) { return json::parse(r.output); }

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

} // namespace

TEST(Cli, ConvertOrigin) {
    const auto r = run(job("convert", {{"t", 1}, {"z", {0, 0}}}));
    ASSERT_EQ(r.exit_code, 0) << r.output;
    EXPECT_EQ(parse(r)["ball"], json::array({0.0, 0.0, 0.0}));
}

TEST(Cli, ConvertBackFromBall) {
    const auto r = run(job("convert", {{"ball", {0, 0, -0.5}}}));
    ASSERT_EQ(r.exit_code, 0) << r.output;
    EXPECT_NEAR(parse(r)["t"].get<double>(), 1.0 / 3.0, 1e-15);
}

TEST(Cli, VerifyKahler) {
    const auto r = run(job("verify", {{"suite", "kahler"}, {"seed", 7}}));
    EXPECT_EQ(r.exit_code, 0);
    const json o = parse(r);
    EXPECT_TRUE(o["passed"].get<bool>());
    for (const auto& c : o["reports"][0]["checks"]) EXPECT_TRUE(c["pass"].get<bool>()) << c["name"];
}

TEST(Cli, VerifyTightOverrideFails) {
    JobSpec j = job("verify", {{"suite", "kahler"}, {"seed", 7}});
    j.tolerances.closed = 1e-30;
    EXPECT_EQ(run(j).exit_code, 2);
}

TEST(Cli, SurfaceWritesObjAndCsv) {
    const auto dir = std::filesystem::temp_directory_path() / "geodex_cli_test";
    std::filesystem::create_directories(dir);
    const auto obj = dir / "s.obj", csv = dir / "s.csv";
    const json p = {{"b", {{0, 0}, {1, 0}, {1, 0}, {0, 0}}},
                    {"grid", {64, 64}},
                    {"obj", obj.string()},
                    {"csv", csv.string()}};
    const auto r = run(job("surface", p));
    ASSERT_EQ(r.exit_code, 0) << r.output;
    const json o = parse(r);
    EXPECT_LT(o["max_abs_H"].get<double>(), 1e-6);
    EXPECT_TRUE(o["totally_geodesic"].get<bool>());
    const std::string o_text = slurp(obj), c_text = slurp(csv);
    EXPECT_EQ(std::count(o_text.begin(), o_text.end(), 'v'), 64 * 64);
    EXPECT_EQ(c_text.rfind("r,t,x,y,z,H,K_rt,K_tt\n", 0), 0u);
    EXPECT_EQ(std::count(c_text.begin(), c_text.end(), '\n'), 64 * 64 + 1);
}

TEST(Cli, SurfaceFormats) {
    JobSpec j = job("surface", {{"b", {{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {"grid", {3, 3}}});
    j.format = Format::Obj;
    EXPECT_EQ(run(j).output.rfind("# ruled surface", 0), 0u);
    j.format = Format::Csv;
    EXPECT_EQ(run(j).output.rfind("r,t,", 0), 0u);
}

TEST(Cli, ValidationPaths) {
    struct Case {
        std::string cmd;
        json payload;
        std::string path;
    };
    const std::vector<Case> cases{
        {"convert", {{"t", 1}, {"z", {0}}}, "/payload/z"},
        {"convert", {{"t", 1}, {"z", {0, "x"}}}, "/payload/z/1"},
        {"convert", {{"z", {0, 0}}}, "/payload/t"},
        {"surface", {{"b", {{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {"grid", {1, 64}}}, "/payload/grid/0"},
        {"surface", {{"b", {{0, 0}, {0, 0}, {1, 0}, {0, 0}}}}, "/payload/b/1"},
        {"verify", {{"suite", "nope"}}, "/payload/suite"},
        {"flow", {{"beta", {1, 0}}, {"point", {{"t", 1}, {"z", {0, 0}}}}}, "/payload/s"},
    };
    for (const auto& c : cases) {
        const auto r = run(job(c.cmd, c.payload));
        EXPECT_EQ(r.exit_code, 1) << c.cmd;
        const json o = parse(r);
        EXPECT_EQ(o["error"]["kind"], "validation");
        EXPECT_EQ(o["error"]["path"], c.path) << r.output;
    }
    JobSpec j = job("convert", {{"t", 1}, {"z", {0, 0}}});
    j.format = Format::Obj;
    EXPECT_EQ(parse(run(j))["error"]["path"], "/format");
}

TEST(Cli, GeometryErrorsExitOne) {
    const auto r = run(job("endpoints", {{"xi", {0, 0}}, {"eta", {0, 0}}}));
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_EQ(parse(r)["error"]["code"], "OutsideChartU");
}

TEST(Cli, DeterministicForFixedSeed) {
    const auto a = run(job("verify", {{"suite", "flows"}, {"seed", 3}}));
    const auto b = run(job("verify", {{"suite", "flows"}, {"seed", 3}}));
    EXPECT_EQ(a.output, b.output);
    JobSpec c = job("verify", {{"suite", "flows"}, {"seed", 99}});
    c.seed = 3;
    EXPECT_EQ(run(c).output, a.output);
}

TEST(Cli, KillingAndFlowAgree) {
    const auto r = run(job("flow", {{"beta", {1, 0}}, {"point", {{"t", 1}, {"z", {0, 0}}}}, {"s", 2}}));
    ASSERT_EQ(r.exit_code, 0) << r.output;
    const json o = parse(r);
    EXPECT_DOUBLE_EQ(o["t"].get<double>(), 1.0);
    EXPECT_EQ(o["z"], json::array({2.0, 0.0}));
}
