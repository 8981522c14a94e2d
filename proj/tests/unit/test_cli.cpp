#include "support.hpp"

#include <minktrig_cli/cli.hpp>
#include <minktrig_cli/format.hpp>
#include <minktrig_cli/output.hpp>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <vector>

using namespace minktrig;
using namespace testing_support;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "minktrig");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::vector<double>> csv_numbers(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) rows.push_back(cli::parse_numbers(line));
    return rows;
}

}  // namespace

TEST(Format, TenSignificantDigits) {
    EXPECT_EQ(cli::fmt(1.0 / 3.0), "0.3333333333");
    EXPECT_EQ(cli::fmt(-0.0), "0");
    EXPECT_EQ(cli::fmt(2.0), "2");
    EXPECT_EQ(cli::round10(0.70710678118654757), 0.7071067812);
    EXPECT_EQ(cli::csv_row({1, 0.5}), "1,0.5");
    EXPECT_THROW(cli::parse_vec("1,2,3"), ConfigError);
    EXPECT_THROW(cli::parse_numbers("1,x"), ConfigError);
    EXPECT_EQ(cli::replace_extension("a/b.svg", ".csv"), "a/b.csv");
    EXPECT_EQ(cli::replace_extension("a.d/b", ".csv"), "a.d/b.csv");
}

TEST(Cli, EvalCosine) {
    const CliResult r = invoke({"eval", "--norm", "builtin:euclidean", "--fn", "cm", "--args", "1,0,1,1"});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(r.out, "{\"fn\":\"cm\",\"value\":0.7071067812}\n");
}

TEST(Cli, EvalBOnL4Axis) {
    const CliResult r = invoke({"eval", "--norm", "builtin:lp:4", "--fn", "b", "--args", "1,0"});
    EXPECT_EQ(r.code, cli::kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["value"][0].get<double>(), 0.0);
    EXPECT_EQ(j["value"][1].get<double>(), 1.0);
}

TEST(Cli, EvalGammaAtMixedApex) {
    const double c = 1 - std::pow(2.0, 0.25);
    const CliResult r = invoke({"eval", "--norm", "builtin:mixed:4", "--fn", "gamma", "--args", cli::fmt(c) + ",1"});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_NEAR(nlohmann::json::parse(r.out)["value"].get<double>(), 2.548, 1e-3);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(invoke({"eval", "--norm", "builtin:hexagon", "--fn", "cm", "--args", "1,0,1,1"}).code, cli::kExitConfig);
    EXPECT_EQ(invoke({"eval", "--norm", "builtin:euclidean", "--fn", "cm", "--args", "1,0"}).code, cli::kExitConfig);
    EXPECT_EQ(invoke({"eval", "--norm", "builtin:euclidean", "--fn", "tan", "--args", "1,0,1,1"}).code, cli::kExitConfig);
    EXPECT_EQ(invoke({"frobnicate"}).code, cli::kExitConfig);
    EXPECT_EQ(invoke({"eval", "--norm", "builtin:euclidean", "--fn", "cm", "--args", "0,0,1,1"}).code, cli::kExitDomain);
    EXPECT_EQ(invoke({"eval", "--norm", "builtin:euclidean", "--fn", "gamma", "--args", "0.5,0"}).code,
              cli::kExitDomain);
    EXPECT_EQ(invoke({"eval", "--norm", "builtin:lp:4", "--fn", "cn", "--args", "1,0,1,1"}).code, cli::kExitDomain);
    EXPECT_EQ(invoke({"plot", "--norm", "builtin:euclidean", "--figure", "circle", "--out", "/nonexistent/dir/c.svg"}).code,
              cli::kExitIo);
    EXPECT_EQ(invoke({"--help"}).code, cli::kExitOk);
}

TEST(Cli, VerifyExitStatus) {
    const CliResult ok = invoke({"verify", "--norm", "builtin:euclidean", "--suite", "trig", "--samples", "50"});
    EXPECT_EQ(ok.code, cli::kExitOk);
    const auto j = nlohmann::json::parse(ok.out);
    ASSERT_TRUE(j.is_array());
    EXPECT_TRUE(j[0].contains("witness"));
    const CliResult radon = invoke({"verify", "--norm", "builtin:lp:4", "--suite", "radon", "--samples", "50"});
    EXPECT_EQ(radon.code, cli::kExitOk);
    EXPECT_NE(radon.out.find("radon:NotRadon"), std::string::npos);
    EXPECT_EQ(invoke({"verify", "--norm", "builtin:euclidean", "--suite", "nope"}).code, cli::kExitConfig);
}

TEST(Cli, VerifyIsByteDeterministic) {
    const std::vector<std::string> args{"verify", "--norm", "builtin:lp:4", "--suite", "distortion", "--samples",
                                        "30", "--seed", "7"};
    EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(Cli, PlotCmConstruction) {
    const std::string svg = ::testing::TempDir() + "cm.svg";
    const CliResult r = invoke({"plot", "--norm", "builtin:euclidean", "--figure", "cm-construction", "--out", svg, "--y",
                       "0.5," + cli::fmt(std::sqrt(3.0) / 2)});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_EQ(slurp(svg).rfind("<svg", 0), 0u);
    const std::string csv = slurp(::testing::TempDir() + "cm.csv");
    EXPECT_NE(csv.find("\nq,0.5,0\n"), std::string::npos);
    EXPECT_NE(csv.find("\nnorm_q,0.5,\n"), std::string::npos);
}

TEST(Cli, PlotAllFigures) {
    for (const char* f : {"circle", "gamma-construction", "parallel-chords"}) {
        const std::string svg = ::testing::TempDir() + f + ".svg";
        const CliResult r = invoke({"plot", "--norm", "builtin:mixed:4", "--figure", f, "--out", svg});
        ASSERT_EQ(r.code, cli::kExitOk) << f << r.err;
        EXPECT_NE(slurp(svg).find("</svg>"), std::string::npos);
    }
    const std::string csv = slurp(::testing::TempDir() + "parallel-chords.csv");
    const auto at = csv.find("\ndefect,");
    ASSERT_NE(at, std::string::npos);
    EXPECT_LT(std::stod(csv.substr(at + 8)), 1e-6);
    EXPECT_EQ(invoke({"plot", "--norm", "builtin:euclidean", "--figure", "spiral", "--out", "x.svg"}).code,
              cli::kExitConfig);
}

TEST(Cli, GammaSweepIncreases) {
    const CliResult r = invoke({"table", "--fn", "gamma-sweep", "--p-list", "4,8,16"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "p,apex_x,apex_y,len1,len2,gamma");
    const auto rows = csv_numbers(r.out);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_LT(rows[0][5], rows[1][5]);
    EXPECT_LT(rows[1][5], rows[2][5]);
}

TEST(Cli, RhoTableEuclidean) {
    const std::string path = ::testing::TempDir() + "rho.csv";
    ASSERT_EQ(invoke({"table", "--norm", "builtin:euclidean", "--fn", "rho", "--rows", "32", "--out", path}).code, 0);
    for (const auto& row : csv_numbers(slurp(path))) EXPECT_NEAR(row[2], 1.0, 1e-5);
}

TEST(Cli, ArcParamsCoincideInMixedPlane) {
    const CliResult r = invoke({"table", "--norm", "builtin:mixed:4", "--fn", "arc-params", "--rows", "64"});
    ASSERT_EQ(r.code, 0);
    for (const auto& row : csv_numbers(r.out)) {
        EXPECT_NEAR(row[1], row[2], 1e-5);
        EXPECT_NEAR(row[1], row[3], 1e-5);
    }
}

TEST(Cli, CmRowAndCalculus) {
    const CliResult a = invoke({"table", "--norm", "builtin:lp:4", "--fn", "cm-row", "--rows", "12"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(csv_numbers(a.out).size(), 11u);
    const CliResult c = invoke({"calculus", "--norm", "builtin:euclidean", "--grid", "64"});
    ASSERT_EQ(c.code, 0);
    EXPECT_EQ(c.out.substr(0, c.out.find('\n')), "s,theta,rho,sn,cm,residual");
    for (const auto& row : csv_numbers(c.out)) {
        EXPECT_NEAR(row[3], std::sin(row[0]), 1e-7);
        EXPECT_NEAR(row[4], std::cos(row[0]), 1e-7);
        EXPECT_LT(row[5], 1e-3);
    }
}

TEST(Cli, GammaRows) {
    const CliResult r = invoke({"gamma", "--norm", "builtin:euclidean", "--point", "2,0", "--point", "0,-3"});
    ASSERT_EQ(r.code, 0);
    const auto rows = csv_numbers(r.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_NEAR(rows[0][2], std::sqrt(3.0), 1e-9);
    EXPECT_NEAR(rows[1][4], 1.0, 1e-9);
    const CliResult rnd = invoke({"gamma", "--norm", "builtin:lp:4", "--count", "5", "--seed", "3"});
    EXPECT_EQ(csv_numbers(rnd.out).size(), 5u);
    EXPECT_EQ(rnd.out, invoke({"gamma", "--norm", "builtin:lp:4", "--count", "5", "--seed", "3"}).out);
}
