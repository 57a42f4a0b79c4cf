#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "vpg/cli.hpp"

using namespace vpg;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir = fs::temp_directory_path() / ("vpg_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                           "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    std::string file(const std::string& name) const { return (dir / name).string(); }
    void write(const std::string& name, const std::string& text) const { std::ofstream(file(name)) << text; }
    std::string read(const std::string& name) const {
        std::ifstream in(file(name));
        return {std::istreambuf_iterator<char>(in), {}};
    }

    fs::path dir;
};

bool has_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        if (l == line) return true;
    return false;
}

}  // namespace

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"construct", "k3n"}).code, 2);
    EXPECT_EQ(run({"construct", "k3n", "--n", "2"}).code, 2);
    EXPECT_EQ(run({"verify", file("missing.g"), file("missing.rep")}).code, 2);
    write("bad.rep", "a : (0,0) (1,1)\n");
    write("g.g", "1 0\na\n");
    EXPECT_EQ(run({"verify", file("g.g"), file("bad.rep")}).code, 2);
    EXPECT_EQ(run({"oracle", file("g.g"), "--grid", "3by3", "--bends", "0"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, ConstructThenVerifyK3n) {
    auto c = run({"construct", "k3n", "--n", "10", "-o", file("k.rep"), "--graph-out", file("k.g"), "--svg", file("k.svg")});
    ASSERT_EQ(c.code, 0) << c.err;
    auto v = run({"verify", file("k.g"), file("k.rep"), "--proper"});
    EXPECT_EQ(v.code, 0);
    EXPECT_TRUE(has_line(v.out, "realizes: yes"));
    EXPECT_TRUE(has_line(v.out, "proper: yes"));
    EXPECT_TRUE(has_line(v.out, "max bends: 24"));
    EXPECT_NE(read("k.svg").find("<svg"), std::string::npos);
}

TEST_F(Cli, ConstructToStdoutRoundTrips) {
    auto c = run({"construct", "k2n", "--n", "5"});
    ASSERT_EQ(c.code, 0);
    std::istringstream in(c.out);
    auto R = read_representation(in);
    EXPECT_EQ(R.size(), 15u);
    EXPECT_EQ(R, construct_k2n_proper(5));
}

TEST_F(Cli, VerifyReportsMissingEdge) {
    write("g.g", "3 2\na\nb\nc\na b\nb c\n");
    write("r.rep", "a : (0,0) (2,0)\nb : (1,-1) (1,1)\nc : (5,0) (6,0)\n");
    auto v = run({"verify", file("g.g"), file("r.rep")});
    EXPECT_EQ(v.code, 1);
    EXPECT_TRUE(has_line(v.out, "realizes: no"));
    EXPECT_TRUE(has_line(v.out, "missing: b c"));
}

TEST_F(Cli, VerifyProperViolation) {
    write("g.g", "2 1\na\nb\na b\n");
    write("r.rep", "a : (0,0) (2,0)\nb : (1,0) (1,1)\n");
    EXPECT_EQ(run({"verify", file("g.g"), file("r.rep")}).code, 0);
    auto v = run({"verify", file("g.g"), file("r.rep"), "--proper"});
    EXPECT_EQ(v.code, 1);
    EXPECT_TRUE(has_line(v.out, "violation: non-crossing at (1,0): a b"));
}

TEST_F(Cli, SplitUpperAndGtm) {
    ASSERT_EQ(run({"construct", "split-upper", "--n", "5", "--k", "3", "-o", file("s.rep"), "--graph-out", file("s.g")}).code, 0);
    auto v = run({"verify", file("s.g"), file("s.rep")});
    EXPECT_EQ(v.code, 0);
    EXPECT_TRUE(has_line(v.out, "max bends: 11"));
    // from a graph file
    ASSERT_EQ(run({"construct", "split-upper", "--graph", file("s.g"), "-o", file("t.rep")}).code, 0);
    EXPECT_EQ(run({"verify", file("s.g"), file("t.rep")}).code, 0);

    ASSERT_EQ(run({"construct", "gtm", "--n", "6", "--k", "4", "-o", file("q.rep"), "--graph-out", file("q.g")}).code, 0);
    auto w = run({"verify", file("q.g"), file("q.rep"), "--proper"});
    EXPECT_EQ(w.code, 0);
    EXPECT_TRUE(has_line(w.out, "max bends: 5"));
}

TEST_F(Cli, GoodSetsAndCertificate) {
    write("r.rep", "1 : (0,0) (5,0)\n2 : (0,1) (5,1)\n3 : (0,2) (5,2)\n{1,2} : (9,9) (10,9)\n");
    auto g = run({"goodsets", file("r.rep"), "--k", "2"});
    EXPECT_EQ(g.code, 0);
    EXPECT_TRUE(has_line(g.out, "count: 2"));
    EXPECT_TRUE(has_line(g.out, "within bound: yes"));
    EXPECT_NE(g.out.find("{1,2} vertical"), std::string::npos);

    auto c = run({"certificate", file("r.rep"), "--target", "1,2"});
    EXPECT_EQ(c.code, 0);
    EXPECT_TRUE(has_line(c.out, "c: 2"));
    EXPECT_TRUE(has_line(c.out, "bend lower bound: 0"));
    // no probe meets 1 and 3 without 2
    auto around = run({"certificate", file("r.rep"), "--target", "1,3"});
    EXPECT_TRUE(has_line(around.out, "c: 1"));
    EXPECT_TRUE(has_line(around.out, "bend lower bound: 1"));
    EXPECT_EQ(run({"certificate", file("r.rep"), "--target", "1,9"}).code, 2);

    write("far.rep", "1 : (0,0) (1,0)\n2 : (50,50) (51,50)\n");
    auto none = run({"certificate", file("far.rep"), "--target", "1,2"});
    EXPECT_EQ(none.code, 0);
    EXPECT_TRUE(has_line(none.out, "c: 1"));
    EXPECT_TRUE(has_line(none.out, "bend lower bound: 1"));
}

TEST_F(Cli, Posets) {
    ASSERT_EQ(run({"posets", "build", "--r", "1", "--s", "2", "--n", "3", "-o", file("p.txt")}).code, 0);
    auto d = run({"posets", "dim", file("p.txt")});
    EXPECT_EQ(d.code, 0);
    EXPECT_TRUE(has_line(d.out, "dimension: 3"));
    auto low = run({"posets", "dim", file("p.txt"), "--max", "2"});
    EXPECT_EQ(low.code, 1);
    EXPECT_TRUE(has_line(low.out, "dimension: > 2"));

    // the printed witness is a realizer
    std::string orders;
    std::istringstream in(d.out);
    for (std::string l; std::getline(in, l);)
        if (l.rfind("order:", 0) == 0) orders += l.substr(6) + "\n";
    write("real.txt", orders);
    auto ok = run({"posets", "realizer-check", file("p.txt"), file("real.txt")});
    EXPECT_EQ(ok.code, 0);
    EXPECT_TRUE(has_line(ok.out, "realizer: yes"));
    write("one.txt", orders.substr(0, orders.find('\n') + 1));
    EXPECT_EQ(run({"posets", "realizer-check", file("p.txt"), file("one.txt")}).code, 1);
    write("junk.txt", "{1} {2}\n");
    EXPECT_EQ(run({"posets", "realizer-check", file("p.txt"), file("junk.txt")}).code, 2);
    EXPECT_EQ(run({"posets", "build", "--r", "2", "--s", "2", "--n", "3"}).code, 2);
}

TEST_F(Cli, Counting) {
    auto c = run({"counting", "--n", "1000", "--k", "16", "--t", "0"});
    EXPECT_EQ(c.code, 1);
    for (const char* tag : {"(a)", "(b)", "(c)", "(d)"}) EXPECT_NE(c.out.find(tag), std::string::npos);
    EXPECT_NE(c.out.find("(b) k! < ceil(k/2)! floor(k/2)! (k-5)!: true"), std::string::npos);
    auto a = run({"counting", "--n", "auto", "--k", "16", "--t", "0"});
    EXPECT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(run({"counting", "--n", "12x", "--k", "16", "--t", "0"}).code, 2);
}

TEST_F(Cli, Oracle) {
    write("k3.g", "3 3\na\nb\nc\na b\na c\nb c\n");
    auto o = run({"oracle", file("k3.g"), "--grid", "4x4", "--bends", "0"});
    EXPECT_EQ(o.code, 0);
    std::istringstream in(o.out);
    auto R = read_representation(in);
    std::ifstream gin(file("k3.g"));
    EXPECT_TRUE(verify_realizes(R, read_graph(gin)).ok);
    auto none = run({"oracle", file("k3.g"), "--grid", "6x6", "--bends", "1", "--nodes", "1", "--proper"});
    EXPECT_EQ(none.code, 1);
    EXPECT_TRUE(has_line(none.out, "not found within budget"));
}

TEST_F(Cli, Render) {
    ASSERT_EQ(run({"construct", "k2n", "--n", "5", "-o", file("k.rep")}).code, 0);
    ASSERT_EQ(run({"render", file("k.rep"), "-o", file("a.svg")}).code, 0);
    ASSERT_EQ(run({"render", file("k.rep"), "-o", file("b.svg")}).code, 0);
    const auto svg = read("a.svg");
    EXPECT_EQ(svg, read("b.svg"));
    std::size_t polylines = 0;
    for (auto p = svg.find("<polyline"); p != std::string::npos; p = svg.find("<polyline", p + 1)) ++polylines;
    EXPECT_EQ(polylines, 15u);
    ASSERT_EQ(run({"render", file("k.rep"), "-o", file("c.svg"), "--probes", "2"}).code, 0);
    EXPECT_NE(read("c.svg").find("class=\"probe\""), std::string::npos);

    write("empty.rep", "");
    ASSERT_EQ(run({"render", file("empty.rep"), "-o", file("e.svg")}).code, 0);
    EXPECT_EQ(read("e.svg").find("<polyline"), std::string::npos);
    EXPECT_NE(read("e.svg").find("</svg>"), std::string::npos);
}
