#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct cli_result {
    int exit_code;
    std::string out;
};

// Runs a full shell command, captures stdout, drops stderr.
cli_result run(const std::string &cmdline) {
    std::string cmd = cmdline + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), out};
}

const std::string bin = CLI_BINARY_PATH;

std::string feed(const std::string &edge_list, const std::string &args) {
    return "printf '" + edge_list + "' | " + bin + " " + args + " -";
}

const std::string path3 = "n 3\\n1 2\\n2 3\\n";
const std::string claw = "n 4\\n1 2\\n1 3\\n1 4\\n";
const std::string cherry = "n 3\\n1 2\\n1 3\\n";
const std::string c4 = "n 4\\n1 2\\n2 3\\n3 4\\n1 4\\n";

} // namespace

TEST_CASE("recognize accepts a path and prints ordering plus labeling") {
    auto r = run(feed(path3, "recognize"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "status: closed\nordering: 1 2 3\nlabeling: 1 2 3\n");
}

TEST_CASE("recognize rejects the claw with a violation certificate") {
    auto r = run(feed(claw, "recognize"));
    CHECK(r.exit_code == 1);
    CHECK(r.out == "status: not closed\n"
                   "violation: u=1 v=3 w=4\n"
                   "present edge: 1 4\n"
                   "missing edge: 3 4\n");
}

TEST_CASE("recognize --json carries the same information") {
    auto r = run(feed(path3, "recognize --json"));
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["status"] == "closed");
    CHECK(j["ordering"] == json({1, 2, 3}));
    CHECK(j["labeling"] == json({1, 2, 3}));

    auto bad = run(feed(c4, "recognize --json"));
    CHECK(bad.exit_code == 1);
    json jb = json::parse(bad.out);
    CHECK(jb["status"] == "not_closed");
    CHECK(jb["violation"]["u"] == 1);
    CHECK(jb["violation"]["v"] == 2);
    CHECK(jb["violation"]["w"] == 4);
    CHECK(jb["violation"]["present_edge"] == json({1, 4}));
    CHECK(jb["violation"]["missing_edge"] == json({2, 4}));
}

TEST_CASE("recognize --verify cross-checks both verdicts") {
    auto ok = run(feed(path3, "recognize --verify --json"));
    CHECK(ok.exit_code == 0);
    json j = json::parse(ok.out);
    CHECK(j["verify"]["closed_labeling"] == true);
    CHECK(j["verify"]["groebner"] == true);

    auto bad = run(feed(claw, "recognize --verify"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("verify: violation edges ok\n") != std::string::npos);
    CHECK(bad.out.find("verify: oracle agrees\n") != std::string::npos);
}

TEST_CASE("recognize splits a disconnected graph per component") {
    auto r = run(feed("n 3\\n1 3\\n", "recognize"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "status: closed\nordering: 1 3 2\nlabeling: 1 3 2\n");
}

TEST_CASE("intervals prints exact scaled lines plus decimal comments") {
    auto r = run(feed(path3, "intervals"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "labeling: 1 2 3\n"
                   "1 3 7 3\n"
                   "2 6 11 3\n"
                   "3 9 12 3\n"
                   "# approx 1 [1.000000, 2.333333]\n"
                   "# approx 2 [2.000000, 3.666667]\n"
                   "# approx 3 [3.000000, 4.000000]\n");
}

TEST_CASE("intervals --check --json round-trips and reports the denominator") {
    auto r = run(feed(path3, "intervals --check --json"));
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["status"] == "closed");
    CHECK(j["denominator"] == 3);
    CHECK(j["intervals"] == json({{3, 7}, {6, 11}, {9, 12}}));
    CHECK(j["check"] == "ok");
}

TEST_CASE("intervals --assume-closed keeps the input labels") {
    auto good = run(feed(path3, "intervals --assume-closed"));
    CHECK(good.exit_code == 0);
    CHECK(good.out.find("labeling: 1 2 3\n") == 0);

    auto bad = run(feed(cherry, "intervals --assume-closed"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.out == "status: not closed\n"
                     "edges: (1,2) (1,3)\n"
                     "missing edge: 2 3\n");
}

TEST_CASE("facets lists label intervals after relabeling") {
    auto r = run(feed(path3, "facets"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "labeling: 1 2 3\n1 2\n2 3\n");

    auto j = json::parse(run(feed(path3, "facets --json")).out);
    CHECK(j["facets"] == json({{1, 2}, {2, 3}}));
}

TEST_CASE("c1p reports on the facet incidence matrix") {
    auto r = run(feed(path3, "c1p"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "labeling: 1 2 3\nc1p: true\n");

    auto bad = run(feed(c4, "c1p"));
    CHECK(bad.exit_code == 1);
}

TEST_CASE("oracle verdicts and labeling counts") {
    auto bad = run(feed(claw, "oracle"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.out == "not closed (24/24 labelings fail)\n");

    auto good = run(feed(path3, "oracle"));
    CHECK(good.exit_code == 0);
    CHECK(good.out == "closed\nlabeling: 1 2 3\n");

    auto j = json::parse(run(feed(claw, "oracle --json")).out);
    CHECK(j["status"] == "not_closed");
    CHECK(j["labelings"] == 24);
}

TEST_CASE("oracle refuses graphs beyond its limit") {
    auto r = run(feed("n 10\\n1 2\\n", "oracle"));
    CHECK(r.exit_code == 2);
    auto raised = run(feed("n 10\\n1 2\\n", "oracle --limit 10"));
    CHECK(raised.exit_code == 0);
}

TEST_CASE("gb prints the S-pair summary or a failing pair") {
    auto good = run(feed(path3, "gb"));
    CHECK(good.exit_code == 0);
    CHECK(good.out == "quadratic GB: yes (1 S-pair, all reduce to 0)\n");

    auto bad = run(feed(cherry, "gb"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.out == "quadratic GB: no\n"
                     "failing pair: (1,2),(1,3)\n"
                     "remainder: x2*y1*y3 - x3*y1*y2\n");

    auto j = json::parse(run(feed(cherry, "gb --json")).out);
    CHECK(j["quadratic_gb"] == false);
    CHECK(j["failing_pair"] == json({{1, 2}, {1, 3}}));
    CHECK(j["remainder"] == "x2*y1*y3 - x3*y1*y2");
}

TEST_CASE("gen writes canonical edge lists") {
    auto r = run(bin + " gen path 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n 5\n1 2\n2 3\n3 4\n4 5\n");

    auto claw_out = run(bin + " gen claw");
    CHECK(claw_out.out == "n 4\n1 2\n1 3\n1 4\n");

    auto a = run(bin + " gen random_gnm 30 --edges 60 --seed 9");
    auto b = run(bin + " gen random_gnm 30 --edges 60 --seed 9");
    CHECK(a.out == b.out);
}

TEST_CASE("gen output pipes straight back into recognize") {
    auto r = run(bin + " gen random_unit_interval 200 --length 0.05 --seed 4 | " +
                 bin + " recognize -");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("status: closed\n") == 0);
}

TEST_CASE("bench emits one CSV row per size") {
    auto r = run(bin + " bench --sizes 50,100 --seed 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("n,m,recognize_ms\n") == 0);
    CHECK(r.out.find("\n50,") != std::string::npos);
    CHECK(r.out.find("\n100,") != std::string::npos);
}

TEST_CASE("usage and input errors exit with code 2") {
    CHECK(run(bin + " recognize /nonexistent/file").exit_code == 2);
    CHECK(run(feed("1 1\\n", "recognize")).exit_code == 2);
    CHECK(run(feed("garbage\\n", "recognize")).exit_code == 2);
    CHECK(run(bin + " badcmd").exit_code == 2);
    CHECK(run(bin).exit_code == 2);
    CHECK(run(bin + " gen claw 5").exit_code == 2);
    CHECK(run(bin + " gen random_gnm 6").exit_code == 2);
    CHECK(run(bin + " gen nosuchkind 5").exit_code == 2);
    CHECK(run(bin + " bench --sizes 0").exit_code == 2);
    CHECK(run(bin + " --help").exit_code == 0);
}
