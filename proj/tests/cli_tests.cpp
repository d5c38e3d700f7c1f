// End-to-end tests driving the installed binary. The test runner passes the
// binary location as `--bin PATH` (wired up in CMakeLists via $<TARGET_FILE>).
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

std::string g_bin;
std::filesystem::path g_scratch;

struct RunResult {
    std::string out;
    int code = -1;
};

std::string sh_quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) {
        if (c == '\'')
            q += "'\\''";
        else
            q += c;
    }
    q += "'";
    return q;
}

RunResult run(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

RunResult tl(const std::string& args) { return run(sh_quote(g_bin) + " " + args); }

std::string fixture(const std::string& name, const std::string& content) {
    std::filesystem::path p = g_scratch / name;
    std::ofstream out(p);
    out << content;
    out.close();
    return sh_quote(p.string());
}

const char* kSwap = R"({"rows":2,"cols":2,"entries":[["0","1"],["1","0"]]})";
const char* kLens52 = R"({"rows":2,"cols":2,"entries":[["2","5"],["1","2"]]})";
const char* kIdentity2 = R"({"rows":2,"cols":2,"entries":[["1","0"],["0","1"]]})";
const char* kNonQhs = R"({"rows":2,"cols":2,"entries":[["1","0"],["1","-1"]]})";
const char* kForm71 = R"({"invariant_factors":["7"],"gram":[["6/7"]]})";
const char* kForm72 = R"({"invariant_factors":["7"],"gram":[["5/7"]]})";
const char* kForm51 = R"({"invariant_factors":["5"],"gram":[["4/5"]]})";
const char* kForm52 = R"({"invariant_factors":["5"],"gram":[["3/5"]]})";
const char* kForm33a = R"({"invariant_factors":["3","3"],"gram":[["1/3","0"],["0","1/3"]]})";
const char* kForm33b = R"({"invariant_factors":["3","3"],"gram":[["2/3","0"],["0","2/3"]]})";

} // namespace

TEST_CASE("lens subcommand") {
    RunResult form = tl("lens 7 1 --emit form");
    CHECK(form.code == 0);
    CHECK(form.out == "{\"invariant_factors\":[\"7\"],\"gram\":[[\"6/7\"]]}\n");

    RunResult mat = tl("lens 7 1 --emit matrix");
    CHECK(mat.code == 0);
    CHECK(mat.out == "{\"rows\":2,\"cols\":2,\"entries\":[[\"1\",\"7\"],[\"1\",\"6\"]]}\n");

    RunResult hom = tl("lens 1 1 --emit homology");
    CHECK(hom.code == 0);
    CHECK(hom.out == "{\"invariant_factors\":[],\"free_rank\":0}\n");

    RunResult defaulted = tl("lens 5 2");
    CHECK(defaulted.code == 0);
    CHECK(defaulted.out == "{\"invariant_factors\":[\"5\"],\"gram\":[[\"3/5\"]]}\n");
}

TEST_CASE("lens rejects bad parameters") {
    RunResult r = tl("lens 4 2 2>&1");
    CHECK(r.code == 2);
    CHECK(r.out.find("p and q must be coprime") != std::string::npos);

    CHECK(tl("lens 0 1 2>&1").code == 2);
    CHECK(tl("lens seven 1 2>&1").code == 1); // not an integer
}

TEST_CASE("lens table format") {
    RunResult r = tl("lens 7 1 --format table");
    CHECK(r.code == 0);
    CHECK(r.out.find("Z/7") != std::string::npos);
    CHECK(r.out.find("6/7") != std::string::npos);
}

TEST_CASE("linking subcommand") {
    std::string lens52 = fixture("lens52.json", kLens52);
    RunResult r = tl("linking --matrix " + lens52);
    CHECK(r.code == 0);
    CHECK(r.out == "{\"invariant_factors\":[\"5\"],\"gram\":[[\"3/5\"]]}\n");

    std::string swap = fixture("swap.json", kSwap);
    RunResult triv = tl("linking --matrix " + swap);
    CHECK(triv.code == 0);
    CHECK(triv.out == "{\"invariant_factors\":[],\"gram\":[]}\n");
}

TEST_CASE("linking reads standard input") {
    RunResult r = run("printf '%s' " + sh_quote(kLens52) + " | " + sh_quote(g_bin) +
                      " linking --matrix -");
    CHECK(r.code == 0);
    CHECK(r.out == "{\"invariant_factors\":[\"5\"],\"gram\":[[\"3/5\"]]}\n");
}

TEST_CASE("linking exit codes") {
    std::string identity = fixture("identity.json", kIdentity2);
    RunResult sym = tl("linking --matrix " + identity + " 2>&1");
    CHECK(sym.code == 3);
    CHECK(sym.out.find("orientation-reversing") != std::string::npos);

    std::string nonqhs = fixture("nonqhs.json", kNonQhs);
    RunResult qhs = tl("linking --matrix " + nonqhs + " 2>&1");
    CHECK(qhs.code == 4);
    CHECK(qhs.out.find("not a rational homology sphere") != std::string::npos);

    std::string odd =
        fixture("odd.json",
                R"({"rows":3,"cols":3,"entries":[["1","0","0"],["0","1","0"],["0","0","1"]]})");
    CHECK(tl("linking --matrix " + odd + " 2>&1").code == 3);

    std::string garbage = fixture("garbage.json", "{not json");
    CHECK(tl("linking --matrix " + garbage + " 2>&1").code == 1);
    CHECK(tl("linking --matrix " + sh_quote((g_scratch / "missing.json").string()) + " 2>&1").code ==
          1);
}

TEST_CASE("isometric subcommand") {
    std::string f71 = fixture("f71.json", kForm71);
    std::string f72 = fixture("f72.json", kForm72);
    std::string f51 = fixture("f51.json", kForm51);
    std::string f52 = fixture("f52.json", kForm52);

    RunResult yes = tl("isometric " + f71 + " " + f72);
    CHECK(yes.code == 0);
    CHECK(yes.out == "{\"isometric\":true,\"witness\":[[\"3\"]]}\n");

    RunResult no = tl("isometric " + f51 + " " + f52);
    CHECK(no.code == 0);
    CHECK(no.out == "{\"isometric\":false,\"witness\":null}\n");

    RunResult self = tl("isometric " + f71 + " " + f71);
    CHECK(self.code == 0);
    CHECK(self.out == "{\"isometric\":true,\"witness\":[[\"1\"]]}\n");

    std::string bad = fixture("badform.json", R"({"invariant_factors":["7"],"gram":[["3/2"]]})");
    CHECK(tl("isometric " + bad + " " + f71 + " 2>&1").code == 1);
}

TEST_CASE("isometric search cap") {
    std::string a = fixture("g33a.json", kForm33a);
    std::string b = fixture("g33b.json", kForm33b);

    RunResult capped = tl("isometric " + a + " " + b + " --cap 5 2>&1");
    CHECK(capped.code == 5);
    CHECK(capped.out.find("search cap") != std::string::npos);

    RunResult env = run("TORSIONLINK_CAP=4 " + sh_quote(g_bin) + " isometric " + a + " " + b +
                        " 2>/dev/null");
    CHECK(env.code == 5);

    // an explicit --cap wins over the environment
    RunResult both = run("TORSIONLINK_CAP=4 " + sh_quote(g_bin) + " isometric " + a + " " + b +
                         " --cap 100");
    CHECK(both.code == 0);
    CHECK(both.out.find("\"isometric\":true") != std::string::npos);
}

TEST_CASE("corpus golden record") {
    RunResult r = tl("corpus --genus 1 --twists 0 --count 1 --seed 0");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "{\"index\":0,\"genus\":1,\"twists\":0,\"seed\":\"0\","
          "\"matrix\":{\"rows\":2,\"cols\":2,\"entries\":[[\"0\",\"1\"],[\"1\",\"0\"]]},"
          "\"qhs\":true,\"homology\":{\"invariant_factors\":[],\"free_rank\":0},"
          "\"form\":{\"invariant_factors\":[],\"gram\":[]}}\n");
}

TEST_CASE("corpus is deterministic") {
    RunResult a = tl("corpus --genus 2 --twists 12 --count 6 --seed 42");
    RunResult b = tl("corpus --genus 2 --twists 12 --count 6 --seed 42");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 6);
}

TEST_CASE("corpus --check") {
    RunResult r = tl("corpus --genus 2 --twists 8 --count 5 --seed 7 --check");
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);
    std::size_t hits = 0;
    for (std::size_t pos = r.out.find("\"check\":\"ok\""); pos != std::string::npos;
         pos = r.out.find("\"check\":\"ok\"", pos + 1))
        ++hits;
    CHECK(hits == 5);
}

TEST_CASE("oracle subcommand is available but hidden") {
    std::string m3 = fixture("m3.json", R"({"rows":1,"cols":1,"entries":[["3"]]})");
    RunResult r = tl("oracle cokernel --matrix " + m3);
    CHECK(r.code == 0);
    CHECK(r.out == "{\"reps\":[[\"0\"],[\"1\"],[\"2\"]]}\n");

    std::string lens52 = fixture("lens52b.json", kLens52);
    RunResult t = tl("oracle table --matrix " + lens52);
    CHECK(t.code == 0);
    CHECK(t.out.find("\"table\"") != std::string::npos);

    RunResult help = tl("--help");
    CHECK(help.code == 0);
    CHECK(help.out.find("oracle") == std::string::npos);
}

TEST_CASE("argument errors and help") {
    CHECK(tl("frobnicate 2>&1").code == 1);
    CHECK(tl("2>&1").code == 1);
    CHECK(tl("lens 2>&1").code == 1);       // missing positionals
    CHECK(tl("linking 2>&1").code == 1);    // missing --matrix
    CHECK(tl("lens 7 1 --emit nonsense 2>&1").code == 1);
    CHECK(tl("--help").code == 0);
    CHECK(tl("lens --help").code == 0);
    CHECK(tl("corpus --help").code == 0);
}

int cli_tests_main(int argc, char** argv) {
    std::vector<const char*> pass;
    pass.push_back(argv[0]);
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--bin" && i + 1 < argc) {
            g_bin = argv[++i];
        } else {
            pass.push_back(argv[i]);
        }
    }
    if (g_bin.empty()) {
        std::cerr << "usage: cli_tests --bin PATH [doctest options]\n";
        return 2;
    }
    g_scratch = std::filesystem::current_path() / "cli_test_fixtures";
    std::filesystem::create_directories(g_scratch);

    doctest::Context ctx;
    ctx.applyCommandLine(static_cast<int>(pass.size()), pass.data());
    int rc = ctx.run();

    std::error_code ec;
    std::filesystem::remove_all(g_scratch, ec);
    return rc;
}

int main(int argc, char** argv) { return cli_tests_main(argc, argv); }
