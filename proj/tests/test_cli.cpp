#include "cli.hpp"
#include "support.hpp"

#include "latres/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace latres;
using namespace latres::test;

namespace
{

struct CliRun
{
    int code = -1;
    std::string out;
    std::string err;
};

CliRun invoke(const std::vector<std::string>& args, const std::string& input = "")
{
    std::istringstream in(input);
    std::ostringstream out, err;
    CliRun r;
    r.code = latres::cli::run(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::filesystem::path temp_path(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("latres_cli_" + name);
}

} // namespace

TEST(Cli, GridResectValidatePipeline)
{
    const CliRun g = invoke({"grid", "3", "3"});
    ASSERT_EQ(g.code, cli::kOk);
    EXPECT_TRUE(is_similar(parse_diagram(g.out), grid(3, 3)));

    const CliRun r = invoke({"resect", "--anchor", "4"}, g.out);
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_TRUE(is_similar(parse_diagram(r.out), s7()));
    EXPECT_EQ(invoke({"validate"}, r.out).code, cli::kOk);

    const CliRun i = invoke({"insert", "--anchor", "4"}, r.out);
    ASSERT_EQ(i.code, cli::kOk) << i.err;
    EXPECT_TRUE(is_similar(parse_diagram(i.out), grid(3, 3)));
}

TEST(Cli, AnchorsRankScheme)
{
    const std::string s = format_diagram(stacked_n7(1));
    const CliRun a = invoke({"anchors", "--kind", "2"}, s);
    EXPECT_EQ(a.code, cli::kOk);
    EXPECT_EQ(a.out, "7\n");
    const CliRun r = invoke({"rank", "--element", "7"}, s);
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_NE(r.out.find("1"), std::string::npos);
    EXPECT_EQ(invoke({"scheme", "--anchor", "7", "--kind", "2"}, s).code, cli::kOk);
    EXPECT_EQ(invoke({"scheme", "--anchor", "0", "--kind", "2"}, s).code, cli::kUsage);
    EXPECT_EQ(invoke({"anchors", "--kind", "4"}, s).code, cli::kUsage);
}

TEST(Cli, NormalizeWritesTrace)
{
    const auto trace = temp_path("trace.txt");
    const CliRun n = invoke({"normalize", "--trace", trace.string()}, format_diagram(s7()));
    ASSERT_EQ(n.code, cli::kOk) << n.err;
    EXPECT_TRUE(is_similar(parse_diagram(n.out), grid(3, 3)));
    std::ifstream f(trace);
    std::string line;
    ASSERT_TRUE(static_cast<bool>(std::getline(f, line)));
    EXPECT_EQ(line.rfind("insert ", 0), 0U);
    std::filesystem::remove(trace);
}

TEST(Cli, VerdictsUseExitCodeOne)
{
    EXPECT_EQ(invoke({"decide"}, format_diagram(s7())).code, cli::kOk);
    EXPECT_EQ(invoke({"decide"}, format_diagram(n5())).code, cli::kNegative);
    EXPECT_EQ(invoke({"oracle-check"}, format_diagram(n5())).code, cli::kNegative);
    EXPECT_EQ(invoke({"oracle-check"}, format_diagram(grid(2, 3))).code, cli::kOk);
    const CliRun v = invoke({"validate"}, format_diagram(make({{1}, {}}, {{}, {}})));
    EXPECT_EQ(v.code, cli::kNegative);
    EXPECT_FALSE(v.out.empty());
}

TEST(Cli, ErrorsUseExitCodeTwo)
{
    EXPECT_EQ(invoke({}).code, cli::kUsage);
    EXPECT_EQ(invoke({"frobnicate"}).code, cli::kUsage);
    EXPECT_EQ(invoke({"grid", "3"}).code, cli::kUsage);
    EXPECT_EQ(invoke({"validate", "/nonexistent/file"}).code, cli::kUsage);

    const CliRun p = invoke({"validate"}, "latdiag 1\nn 2\nu 0: x\n");
    EXPECT_EQ(p.code, cli::kUsage);
    EXPECT_NE(p.err.find("<stdin>"), std::string::npos);
    EXPECT_NE(p.err.find("line 3"), std::string::npos);

    // Surgery on a diagram that is not well formed is a precondition error.
    EXPECT_EQ(invoke({"resect", "--anchor", "0"}, format_diagram(make({{1}, {}}, {{}, {}}))).code,
              cli::kUsage);
    EXPECT_EQ(invoke({"census", "--max-size", "40", "--out", temp_path("x").string()}).code,
              cli::kUsage);
}

TEST(Cli, HelpExitsZero)
{
    const CliRun h = invoke({"--help"});
    EXPECT_EQ(h.code, cli::kOk);
    EXPECT_NE(h.out.find("census"), std::string::npos);
}

TEST(Cli, CensusAndTheoremCheck)
{
    const auto dir = temp_path("census");
    std::filesystem::remove_all(dir);
    const CliRun c = invoke({"census", "--max-size", "9", "--out", dir.string()});
    ASSERT_EQ(c.code, cli::kOk) << c.err;
    EXPECT_NE(c.out.find("total"), std::string::npos);
    EXPECT_EQ(CensusStore::load(dir).size(), census(9).size());
    std::filesystem::remove_all(dir);

    const CliRun t = invoke({"check-theorem", "--max-size", "9", "--oracle-max", "7"});
    EXPECT_EQ(t.code, cli::kOk) << t.out << t.err;
}

TEST(Cli, SearchNondiminishing)
{
    EXPECT_EQ(invoke({"search-nondim", "--max-size", "9", "--steps", "1"}).code, cli::kNegative);
    const CliRun w = invoke({"search-nondim", "--max-size", "12", "--steps", "1"});
    EXPECT_EQ(w.code, cli::kOk);
    EXPECT_NE(w.out.find("n7-counts"), std::string::npos);
}

TEST(Cli, RenderFormats)
{
    const auto dot = temp_path("g.dot");
    const auto svg = temp_path("g.svg");
    const std::string g = format_diagram(grid(3, 3));
    ASSERT_EQ(invoke({"render", "-o", dot.string(), "--overlay", "scheme(4)"}, g).code, cli::kOk);
    ASSERT_EQ(invoke({"render", "-o", svg.string(), "--overlay", "cells"}, g).code, cli::kOk);
    std::ifstream fd(dot), fs(svg);
    std::stringstream sd, ss;
    sd << fd.rdbuf();
    ss << fs.rdbuf();
    EXPECT_EQ(sd.str().rfind("digraph", 0), 0U);
    EXPECT_NE(ss.str().find("<svg"), std::string::npos);
    EXPECT_EQ(invoke({"render", "-o", dot.string(), "--overlay", "bogus"}, g).code, cli::kUsage);
    EXPECT_EQ(invoke({"render", "-o", dot.string(), "--format", "png"}, g).code, cli::kUsage);
    std::filesystem::remove(dot);
    std::filesystem::remove(svg);
}
