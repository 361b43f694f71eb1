#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "invnum/cli.hpp"
#include "invnum/constructions.hpp"
#include "invnum/graph_io.hpp"

using namespace invnum;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result cli(std::vector<std::string> args) {
    args.insert(args.begin(), "invnum");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
protected:
    std::filesystem::path dir;
    void SetUp() override {
        dir = std::filesystem::temp_directory_path() /
              ("invnum_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir);
    }
    void TearDown() override { std::filesystem::remove_all(dir); }
    std::string graph_file(const std::string& expr) {
        auto p = dir / (expr + ".txt");
        write_graph_file(p, parse_construction(expr));
        return p.string();
    }
    std::string text_file(const std::string& name, const std::string& body) {
        auto p = dir / name;
        std::ofstream(p) << body;
        return p.string();
    }
};

}  // namespace

TEST_F(CliFiles, InvReportsCertificate) {
    auto r = cli({"inv", graph_file("Q7")});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["inv"], 3);
    EXPECT_EQ(j["family"].size(), 3u);
    EXPECT_TRUE(j["exhausted_below"].get<bool>());
}

TEST_F(CliFiles, InvAboveMaxKIsNo) {
    auto r = cli({"inv", graph_file("Q7"), "--max-k", "2"});
    EXPECT_EQ(r.code, kExitNo);
    EXPECT_TRUE(nlohmann::json::parse(r.out)["inv"].is_null());
}

TEST_F(CliFiles, InvIsDeterministicAcrossWorkers) {
    auto g = graph_file("dijoin(V5,C3)");
    auto one = cli({"inv", g, "--workers", "1"});
    auto many = cli({"inv", g, "--workers", "3"});
    ASSERT_EQ(one.code, kExitOk);
    EXPECT_EQ(one.out, many.out);
}

TEST_F(CliFiles, PolynomialTournamentDecisions) {
    EXPECT_EQ(cli({"inv-t", graph_file("V5"), "--k", "1"}).code, kExitNo);
    EXPECT_EQ(cli({"inv-t", graph_file("V5"), "--k", "2"}).code, kExitOk);
    EXPECT_EQ(cli({"inv-t", graph_file("C4"), "--k", "1"}).code, kExitInputError);
    EXPECT_NE(cli({"inv-t", graph_file("V5"), "--k", "3"}).code, kExitOk);
}

TEST_F(CliFiles, ParamsAndBounds) {
    auto p = cli({"params", graph_file("V5")});
    ASSERT_EQ(p.code, kExitOk) << p.err;
    EXPECT_NE(p.out.find("tau"), std::string::npos);
    auto b = cli({"bounds", graph_file("V5")});
    EXPECT_EQ(b.code, kExitOk) << b.err;
}

TEST_F(CliFiles, ReduceDecodeRoundTrip) {
    auto formula = text_file("f.txt", "p o3sat 3 1\n1 2 3\n");
    auto graph = (dir / "g.txt").string();
    ASSERT_EQ(cli({"reduce", formula, "-o", graph}).code, kExitOk);
    auto inv = cli({"inv", graph, "--max-k", "1"});
    ASSERT_EQ(inv.code, kExitOk) << inv.err;
    auto cert = text_file("cert.json", inv.out);
    auto d = cli({"decode", formula, graph, cert});
    EXPECT_EQ(d.code, kExitOk) << d.err;
    auto bad = text_file("bad.json", R"({"family": [[0]]})");
    EXPECT_EQ(cli({"decode", formula, graph, bad}).code, kExitNo);
    auto empty = text_file("empty.json", R"({"family": [[]]})");
    EXPECT_EQ(cli({"decode", formula, graph, empty}).code, kExitInputError);
}

TEST_F(CliFiles, GenWritesParsableGraphs) {
    auto r = cli({"gen", "lex(TT2,C3)"});
    ASSERT_EQ(r.code, kExitOk);
    std::istringstream in(r.out);
    EXPECT_EQ(read_graph(in).order(), 6u);
    EXPECT_EQ(cli({"gen", "TT", "4"}).code, kExitOk);
    EXPECT_NE(cli({"gen", "--dot", "C3"}).out.find("->"), std::string::npos);
    EXPECT_EQ(cli({"gen", "nosuchgraph"}).code, kExitInputError);
}

TEST(Cli, InputAndLimitErrors) {
    EXPECT_EQ(cli({"inv", "/nonexistent/graph.txt"}).code, kExitInputError);
    EXPECT_EQ(cli({"census", "--order", "8"}).code, kExitLimit);
    EXPECT_EQ(cli({"bogus"}).code, kExitInputError);
    EXPECT_EQ(cli({"census", "--order", "5"}).code, kExitOk);
}
