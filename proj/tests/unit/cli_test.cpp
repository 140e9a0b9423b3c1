#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string & stdin_text = "")
{
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = baba::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = std::filesystem::temp_directory_path() / ("bipolar_aba_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                                                         ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::create_directories(dir_);
        write("f1.aba", "asm(a). asm(b). ctr(a,x). ctr(b,y). rule(y,a).\n");
        write("g.baf", "arg(a). arg(b). att(a,b). sup(b,a).\n");
        write("cycle.af", "arg(a). arg(b). att(a,b). att(b,a).\n");
        write("bad.aba", "asm(a). rule(x,a).\n");
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    void write(const std::string & name, const std::string & text) { std::ofstream(dir_ / name) << text; }
    std::string path(const std::string & name) const { return (dir_ / name).string(); }
    std::string slurp(const std::string & name) const
    {
        std::ifstream f(dir_ / name);
        return std::string(std::istreambuf_iterator<char>(f), {});
    }

    std::filesystem::path dir_;
};

} // namespace

TEST_F(Cli, SolvePreferred)
{
    auto r = run_cli({"solve", "--input", path("f1.aba"), "--format", "aba", "--semantics", "prf", "--problem", "EE"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{a}\n");
}

TEST_F(Cli, ScepticalAdmissibleIsNo)
{
    auto r = run_cli({"solve", "--input", path("f1.aba"), "--format", "aba", "--semantics", "adm", "--problem", "SA", "--query", "y"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "NO\n");
}

TEST_F(Cli, BafNeedsSupport)
{
    auto r = run_cli({"solve", "--input", path("g.baf"), "--format", "baf", "--problem", "EE", "--semantics", "prf"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("MissingInterpretation"), std::string::npos) << r.err;
    auto ok = run_cli({"solve", "--input", path("g.baf"), "--format", "baf", "--support", "deductive", "--problem", "EE", "--semantics", "prf"});
    EXPECT_EQ(ok.code, 0);
}

TEST_F(Cli, DecisionProblems)
{
    auto base = std::vector<std::string>{"solve", "--input", path("f1.aba"), "--format", "aba", "--semantics", "prf"};
    auto with = [&](std::vector<std::string> extra) {
        auto args = base;
        args.insert(args.end(), extra.begin(), extra.end());
        return run_cli(args);
    };
    EXPECT_EQ(with({"--problem", "EX"}).out, "YES\n");
    EXPECT_EQ(with({"--problem", "NE"}).out, "YES\n");
    EXPECT_EQ(with({"--problem", "VER", "--set", "a"}).out, "YES\n");
    EXPECT_EQ(with({"--problem", "VER", "--set", "a,b"}).out, "NO\n");
    EXPECT_EQ(with({"--problem", "VER", "--set", ""}).out, "NO\n");
    EXPECT_EQ(with({"--problem", "CA", "--query", "y"}).out, "YES\n");
    EXPECT_EQ(with({"--problem", "CA", "--query", "b"}).out, "NO\n");
    EXPECT_EQ(with({"--problem", "SA", "--query", "a"}).out, "YES\n");
    EXPECT_EQ(with({"--problem", "VER"}).code, 3);
    EXPECT_EQ(with({"--problem", "CA"}).code, 3);
    EXPECT_EQ(with({"--problem", "SA", "--query", "nope"}).code, 2);
    EXPECT_EQ(with({"--problem", "VER", "--set", "nope"}).code, 2);
}

TEST_F(Cli, AfAndOracle)
{
    auto r = run_cli({"solve", "--input", path("cycle.af"), "--format", "af", "--semantics", "sstb", "--problem", "EE"});
    EXPECT_EQ(r.out, "{a}\n{b}\n");
    auto o = run_cli({"solve", "--input", path("cycle.af"), "--format", "af", "--semantics", "sstb", "--problem", "EE", "--oracle"});
    EXPECT_EQ(o.out, r.out);
    auto adm = run_cli({"solve", "--input", path("cycle.af"), "--format", "af", "--semantics", "adm", "--problem", "EE", "--oracle"});
    EXPECT_EQ(adm.out, "{}\n{a}\n{b}\n");
}

TEST_F(Cli, StdinAndOutputFile)
{
    auto r = run_cli({"solve", "--input", "-", "--format", "aba", "--semantics", "adm", "--problem", "EE", "--output", path("out.txt")},
                     "asm(a). ctr(a,x). rule(x,a).");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "");
    EXPECT_EQ(slurp("out.txt"), "{}\n");
}

TEST_F(Cli, Errors)
{
    EXPECT_EQ(run_cli({"solve", "--input", path("bad.aba"), "--format", "aba", "--semantics", "prf", "--problem", "EE"}).code, 2);
    EXPECT_EQ(run_cli({"solve", "--input", path("missing.aba"), "--format", "aba", "--semantics", "prf", "--problem", "EE"}).code, 2);
    EXPECT_EQ(run_cli({"solve", "--input", path("f1.aba"), "--format", "aba", "--semantics", "grd", "--problem", "EE"}).code, 3);
    EXPECT_EQ(run_cli({"solve", "--input", path("f1.aba"), "--format", "aba", "--semantics", "sstb", "--problem", "EE", "--algorithm", "basic"}).code, 3);
    EXPECT_EQ(run_cli({"solve", "--input", path("f1.aba"), "--format", "aba", "--support", "deductive", "--semantics", "prf", "--problem", "EE"}).code, 3);
    EXPECT_EQ(run_cli({}).code, 3);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 3);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST_F(Cli, BasicAlgorithm)
{
    auto r = run_cli({"solve", "--input", path("cycle.af"), "--format", "af", "--semantics", "prf", "--problem", "EE", "--algorithm", "basic"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{a}\n{b}\n");
}

TEST_F(Cli, Timeout)
{
    auto gen = run_cli({"generate", "--sentences", "3248", "--ratio", "0.37", "--rule-heads", "1624", "--rules-per-head", "2:406", "--seed", "1", "--output", path("big.aba")});
    ASSERT_EQ(gen.code, 0);
    auto r = run_cli({"solve", "--input", path("big.aba"), "--format", "aba", "--semantics", "adm", "--problem", "EE", "--timeout", "0.001"});
    EXPECT_EQ(r.code, 4);
    EXPECT_EQ(r.out, "TIMEOUT\n");
}

TEST_F(Cli, GenerateIsDeterministic)
{
    std::vector<std::string> args{"generate", "--sentences", "64", "--ratio", "0.37", "--rule-heads", "32", "--rules-per-head", "2:8", "--seed", "5"};
    auto a = run_cli(args);
    auto b = run_cli(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
    args.push_back("--output");
    args.push_back(path("g.aba"));
    EXPECT_EQ(run_cli(args).code, 0);
    EXPECT_EQ(slurp("g.aba"), a.out);
    EXPECT_EQ(run_cli({"generate", "--sentences", "4", "--ratio", "0.5", "--rule-heads", "9", "--rules-per-head", "2:2", "--seed", "1"}).code, 2);
    EXPECT_EQ(run_cli({"generate", "--sentences", "4", "--ratio", "0.5", "--rule-heads", "2", "--rules-per-head", "2", "--seed", "1"}).code, 3);
}

TEST_F(Cli, Bench)
{
    auto r = run_cli({"bench", "--sizes", "16:32:8", "--semantics", "prf", "--csv", path("b.csv")});
    EXPECT_EQ(r.code, 0);
    std::istringstream csv(slurp("b.csv"));
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(csv, line))
        lines.push_back(line);
    ASSERT_EQ(lines.size(), 4u);
    EXPECT_EQ(lines[0], "n_sentences,n_assumptions,n_rules,semantics,variant,seed,elapsed_ms,status");
    EXPECT_EQ(lines[1].rfind("16,", 0), 0u);
    EXPECT_EQ(lines[3].rfind("32,", 0), 0u);
    EXPECT_EQ(run_cli({"bench", "--sizes", "16:8:8", "--csv", "-"}).code, 3);
}
