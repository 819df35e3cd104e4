#include "cli_app.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace tia;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

class Cli : public ::testing::Test {
protected:
    fs::path dir;

    void SetUp() override
    {
        dir = fs::temp_directory_path() / ("tia_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    std::string file(const std::string& name, const std::string& content)
    {
        auto p = (dir / name).string();
        std::ofstream(p) << content;
        return p;
    }

    static Outcome run(std::vector<std::string> args)
    {
        std::ostringstream out, err;
        int code = cli::run(std::move(args), out, err);
        return {code, out.str(), err.str()};
    }
};

} // namespace

TEST_F(Cli, ExactTiaOfC4)
{
    auto g = file("c4.gr", graph_to_string(gen_cycle(4)));
    auto r = run({"exact-tia", g});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "2\n");
}

TEST_F(Cli, AlphaOfPetersen)
{
    auto r = run({"alpha", file("p.gr", graph_to_string(gen_petersen()))});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "4\n");
}

TEST_F(Cli, DecomposeChordalValidates)
{
    Graph g = gen_chordal(30, 4);
    auto gp = file("ch.gr", graph_to_string(g));
    auto r = run({"decompose", "-k", "1", gp});
    ASSERT_EQ(r.code, 0) << r.err;
    auto parsed = read_decomposition_string(r.out);
    EXPECT_TRUE(validate(g, parsed.td).ok);
    EXPECT_EQ(parsed.k_reported, td_alpha(g, parsed.td));
    EXPECT_LE(parsed.k_reported, 8);
    EXPECT_EQ(decomposition_to_string(parsed.td, parsed.k_reported), r.out);

    auto v = run({"validate", gp, file("ch.td", r.out)});
    EXPECT_EQ(v.code, 0);
    EXPECT_EQ(v.out, "OK " + std::to_string(parsed.k_reported) + "\n");

    auto par = run({"--parallel", "2", "decompose", "-k", "1", gp});
    EXPECT_EQ(par.code, 0);
    EXPECT_EQ(par.out, r.out);
}

TEST_F(Cli, DecomposeTooLarge)
{
    auto r = run({"decompose", "-k", "1", file("k77.gr", graph_to_string(gen_blowup(Graph(7))))});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.out, "TOOLARGE\n");
}

TEST_F(Cli, ValidateReportsViolations)
{
    auto g = file("c4.gr", graph_to_string(gen_cycle(4)));
    auto td = file("bad.td", "s tia 2 1 4\nb 1 1 2\nb 2 3 4\n1 2\n");
    auto r = run({"validate", g, td});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.out, "VIOLATION edge-uncovered 1 4\nVIOLATION edge-uncovered 2 3\n");
}

TEST_F(Cli, SeparatorOutcomes)
{
    auto g = file("c4.gr", graph_to_string(gen_cycle(4)));
    auto found = run({"separator", "-k", "1", "--v1", "1", "--v2", "3", g});
    EXPECT_EQ(found.code, 0);
    EXPECT_EQ(found.out.rfind("FOUND ", 0), 0u);
    auto none = run({"separator", "-k", "1", "--v1", "1", "--v2", "2", g});
    EXPECT_EQ(none.code, 2);
    EXPECT_EQ(none.out, "NOWITNESS\n");
    auto bad = run({"separator", "-k", "1", "--v1", "9", "--v2", "2", g});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("bad vertex"), std::string::npos);
}

TEST_F(Cli, MwisWithWeights)
{
    auto g = file("p4.gr", graph_to_string(gen_path(4)));
    auto td = file("p4.td", "s tia 3 1 4\nb 1 1 2\nb 2 2 3\nb 3 3 4\n1 2\n2 3\n");
    auto unit = run({"mwis", g, td});
    EXPECT_EQ(unit.code, 0);
    EXPECT_EQ(unit.out.substr(0, 9), "WEIGHT 2\n");
    auto weighted = run({"mwis", g, td, "--weights", file("w.txt", "2 10\nc comment\n4 3\n")});
    EXPECT_EQ(weighted.code, 0);
    EXPECT_EQ(weighted.out, "WEIGHT 13\nSET 2 4\n");
}

TEST_F(Cli, GenerateIsStable)
{
    auto a = run({"generate", "chordal", "-n", "25", "--seed", "9"});
    auto b = run({"generate", "chordal", "-n", "25", "--seed", "9"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(read_graph_string(a.out), gen_chordal(25, 9));

    auto src = file("c4.gr", graph_to_string(gen_cycle(4)));
    auto h = run({"generate", "sep-hardness", "--graph", src, "-k", "4", "--pair", "1", "2"});
    EXPECT_EQ(h.code, 0);
    EXPECT_EQ(h.out.rfind("c u 15\nc v 16\n", 0), 0u);
    EXPECT_EQ(read_graph_string(h.out), gen_sep_hardness(gen_cycle(4), 4, std::pair{0, 1}).graph);
}

TEST_F(Cli, UsageAndInputErrors)
{
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"bogus"}).code, 1);
    EXPECT_EQ(run({"decompose", "x.gr"}).code, 1);
    EXPECT_EQ(run({"alpha", (dir / "missing.gr").string()}).code, 1);
    auto bad = run({"alpha", file("bad.gr", "p tia 3 1\ne 1 1\n")});
    EXPECT_EQ(bad.code, 1);
    EXPECT_FALSE(bad.err.empty());
    EXPECT_EQ(run({"exact-tia", file("big.gr", graph_to_string(Graph(12)))}).code, 1);
    EXPECT_EQ(run({"generate", "nonsense"}).code, 1);
    EXPECT_EQ(run({"generate", "npc", "-k", "4"}).code, 1);
    EXPECT_EQ(run({"mwis", file("g.gr", graph_to_string(gen_path(3))), file("t.td", "s tia 1 1 4\nb 1 1 2 3 4\n")}).code, 1);
}
