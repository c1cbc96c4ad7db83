#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(NUREG_BINARY) + " " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("nureg_cli_" + std::to_string(getpid()));
        fs::create_directories(dir_);
        write("h_tree.txt", "6 5\n1 3\n2 3\n3 4\n4 6\n5 6\n");
        write("fam.txt", "1 3 2\n4 6 5\n");
        write("fam_sigma.txt", "1 3 2\n4 6 5\nsigma: 2 1\n");
        write("ideal.txt", "x1*x3*y2\nx4*x6*y5\n");
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) {
        std::ofstream(dir_ / name) << text;
        return path(name);
    }
    std::string path(const std::string& name) const { return "'" + (dir_ / name).string() + "'"; }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, Groebner) {
    auto r = run("groebner " + path("h_tree.txt"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "x5*y6\nx4*y6\nx4*x6*y5\nx3*y4\nx2*y3\nx1*y3\nx1*x3*y2\n");
    auto lab = run("groebner " + path("h_tree.txt") + " --labeling \"1 2 5 3 4 6\"");
    EXPECT_EQ(lab.code, 0);
    EXPECT_NE(lab.out.find("x1*x5*y2"), std::string::npos) << lab.out;
}

TEST_F(Cli, Regularity) {
    auto r = run("reg " + path("h_tree.txt"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "4\n");
    auto p3 = run("reg " + path("h_tree.txt") + " --p 3");
    EXPECT_EQ(p3.out, "4\n");
    auto betti = run("reg " + path("h_tree.txt") + " --betti");
    EXPECT_NE(betti.out.find("(5, 9): 2"), std::string::npos) << betti.out;
    auto ideal = run("reg-ideal " + path("ideal.txt"));
    EXPECT_EQ(ideal.code, 0);
    EXPECT_EQ(ideal.out, "4\n");
    auto bad = run("reg " + path("h_tree.txt") + " --p 4");
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.out.find("ConfigError"), std::string::npos) << bad.out;
}

TEST_F(Cli, Restrict) {
    auto r = run("restrict " + path("h_tree.txt") + " --w x1,x3,x4,x6,y2,y5");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "x4*x6*y5\nx1*x3*y2\n");
    auto ideal = run("restrict " + path("ideal.txt") + " --ideal --w x1,x3,y2");
    EXPECT_EQ(ideal.out, "x1*x3*y2\n");
}

TEST_F(Cli, NuAndReport) {
    auto r = run("nu " + path("h_tree.txt"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "4\n");
    auto block = run("nu " + path("h_tree.txt") + " --method block");
    EXPECT_EQ(block.out, "4\n");
    auto js = run("--json nu " + path("h_tree.txt"));
    auto j = nlohmann::json::parse(js.out);
    EXPECT_EQ(j["nu"], 4);
    EXPECT_EQ(j["certificate"]["edges"], 4);
    auto report = run("report " + path("h_tree.txt"));
    EXPECT_EQ(report.code, 0);
    EXPECT_NE(report.out.find("ell     4"), std::string::npos) << report.out;
    EXPECT_NE(report.out.find("reg     4"), std::string::npos) << report.out;
    EXPECT_NE(report.out.find("c       5"), std::string::npos) << report.out;
}

TEST_F(Cli, Doip) {
    auto r = run("doip " + path("h_tree.txt") + " " + path("fam.txt"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("DOIP\n", 0), 0u) << r.out;
    auto fixed = run("doip " + path("h_tree.txt") + " " + path("fam_sigma.txt") + " --fixed");
    EXPECT_EQ(fixed.out.rfind("not DOIP", 0), 0u) << fixed.out;
    auto js = run("--json doip " + path("h_tree.txt") + " " + path("fam.txt"));
    EXPECT_EQ(nlohmann::json::parse(js.out)["doip"], true) << js.out;
}

TEST_F(Cli, Forbidden) {
    auto none = run("forbidden " + path("h_tree.txt") + " " + path("fam.txt"));
    EXPECT_EQ(none.code, 0);
    EXPECT_EQ(none.out, "none\n");
    // in K4 the two edges are joined both ways by the remaining edges
    std::string g = write("k4.txt", "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    std::string fam = write("k4_fam.txt", "1 2\n3 4\n");
    auto found = run("forbidden " + g + " " + fam);
    EXPECT_EQ(found.code, 0);
    EXPECT_NE(found.out, "none\n");
    EXPECT_EQ(run("doip " + g + " " + fam).out.rfind("not DOIP", 0), 0u);
    auto js = run("--json forbidden " + g + " " + fam);
    EXPECT_TRUE(nlohmann::json::accept(js.out)) << js.out;
}

TEST_F(Cli, Gen) {
    auto fm = run("gen fm 2");
    EXPECT_EQ(fm.code, 0);
    EXPECT_EQ(fm.out, "4 3\n1 2\n2 3\n3 4\n");
    auto cm = run("gen cmbip \"F 1; F 1\"");
    EXPECT_EQ(cm.out, "# alpha 0 beta 2 formula 2\n3 2\n1 2\n2 3\n");
    auto g6 = run("gen --graph6 fm 1");
    EXPECT_EQ(g6.out, "A_\n");
    auto a = run("gen randblock 7 12 3");
    auto b = run("gen randblock 7 12 3");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    // generated files feed back into the other commands
    std::string file = write("fm3.txt", run("gen fm 3").out);
    EXPECT_EQ(run("reg " + file).out, "3\n");
}

TEST_F(Cli, VerifyExitCodes) {
    auto ok = run("verify two-block --max-n 6");
    EXPECT_EQ(ok.code, 0) << ok.out;
    EXPECT_NE(ok.out.find("two-block: pass"), std::string::npos) << ok.out;
    auto closed = run("verify closed --max-n 4");
    EXPECT_EQ(closed.code, 1) << closed.out;
    auto js = run("--json verify two-block --max-n 5");
    auto j = nlohmann::json::parse(js.out);
    EXPECT_EQ(j["claim"], "two-block");
    auto out = dir_ / "report.json";
    EXPECT_EQ(run("verify no-multiarcs --random 5 --out '" + out.string() + "'").code, 0);
    EXPECT_TRUE(fs::exists(out));
    EXPECT_EQ(run("verify nonsense").code, 2);
    EXPECT_EQ(run("verify nu-bounds --p 4").code, 2);
}

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("nu").code, 2);
    EXPECT_EQ(run("nu " + path("missing.txt")).code, 2);
    auto bad = write("bad.txt", "3 1\n1 4\n");
    auto r = run("nu " + bad);
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("VertexOutOfRange"), std::string::npos) << r.out;
    EXPECT_EQ(run("--help").code, 0);
}
