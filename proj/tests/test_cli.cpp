#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + SUTURA_CLI + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

int lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, Enumerate) {
    auto r = run("enumerate 3");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out), 6);
    EXPECT_NE(r.out.find("5 = 1+3+1\n"), std::string::npos);
    EXPECT_EQ(lines(run("enumerate 1").out), 2);
    EXPECT_EQ(lines(run("enumerate 4 -1").out), 7);
    EXPECT_EQ(run("enumerate 11").code, 1);
    EXPECT_EQ(run("enumerate 4 --cap 3").code, 1);
    EXPECT_EQ(run("enumerate 6 --cap 6 --format json").code, 0);
}

TEST(Cli, DecomposeAndFromPair) {
    auto d = run("frompair --++ +-+-");
    EXPECT_EQ(d.code, 0);
    EXPECT_EQ(d.out, "0-3,1-2,4-9,5-8,6-7\n");
    auto x = run("decompose 0-3,1-2,4-9,5-8,6-7");
    EXPECT_EQ(x.out, "--++\n-++-\n+--+\n+-+-\n");
    EXPECT_EQ(run("frompair -- -+- -+-").out, "0-7,1-6,2-5,3-4\n");
    EXPECT_EQ(run("frompair +- -+").code, 1);
    EXPECT_EQ(run("decompose 0-2,1-3").code, 1);
    EXPECT_EQ(run("decompose 0-1 --format json").out.find("\"()\"") != std::string::npos, true);
}

TEST(Cli, StackAndCategory) {
    auto s = run("stack 0-5,1-4,2-3 0-5,1-4,2-3");
    EXPECT_EQ(s.code, 0);
    EXPECT_EQ(s.out, "tight, 1 loop\nm_geometric=1 m_algebraic=1\n");
    auto o = run("stack 0-5,1-2,3-4 0-1,2-3,4-5");
    EXPECT_EQ(o.out.rfind("overtwisted", 0), 0u);
    EXPECT_EQ(run("stack 0-1 0-1,2-3").code, 1);
    auto c = run("category 0-7,1-4,2-3,5-6 0-1,2-7,3-4,5-6");
    EXPECT_EQ(c.code, 0);
    EXPECT_NE(c.out.find("3 objects"), std::string::npos);
    EXPECT_NE(c.out.find("2 covering morphisms"), std::string::npos);
    EXPECT_EQ(run("category 0-1,2-3,4-5 0-5,1-2,3-4").code, 1);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("bogus").code, 2);
    EXPECT_EQ(run("enumerate").code, 2);
    EXPECT_EQ(run("enumerate 3 --format xml").code, 2);
    EXPECT_EQ(run("decompose 0-1 --format svg").code, 2);
    EXPECT_EQ(run("verify --level deep").code, 2);
}

TEST(Cli, RenderIsDeterministic) {
    auto a = run("render 0-5,1-4,2-3 --format svg"), b = run("render 0-5,1-4,2-3 --format svg");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.rfind("<svg", 0), 0u);
    EXPECT_EQ(run("render 0-1").out, "  +---+\n- 0 + 1\n  *   o\n");
}

TEST(Cli, Verify) {
    auto q = run("verify --format json");
    EXPECT_EQ(q.code, 0);
    EXPECT_NE(q.out.find("\"failures\": []"), std::string::npos);
    EXPECT_EQ(run("verify --connector-shift 1").code, 1);
    EXPECT_EQ(run("verify --seed 5").code, 0);
}

TEST(Cli, CacheSpill) {
    auto dir = std::filesystem::temp_directory_path() / "sutura_cli_cache_test";
    std::filesystem::remove_all(dir);
    const std::string env = "SUTURA_CACHE_DIR=" + dir.string();
    auto first = run("enumerate 5", env);
    EXPECT_TRUE(std::filesystem::exists(dir / "decompose.kv"));
    auto second = run("enumerate 5", env);
    EXPECT_EQ(first.out, second.out);
    EXPECT_EQ(first.out, run("enumerate 5").out);
    std::filesystem::remove_all(dir);
}
