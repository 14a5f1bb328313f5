#include <cstdlib>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "localclust/io.hpp"
#include "localclust/uncross.hpp"

using namespace localclust;
using nlohmann::json;

namespace {

const char* kDemo = "p edge 4 5\ne 1 2\ne 1 3\ne 2 3\ne 2 4\ne 3 4\n";

// Scratch directory shared by the process-level tests.
const std::string& work_dir() {
    static const std::string dir = [] {
        char tmpl[] = "/tmp/localclust-io.XXXXXX";
        const char* made = mkdtemp(tmpl);
        REQUIRE(made != nullptr);
        return std::string(made);
    }();
    return dir;
}

std::string file_in_dir(const std::string& name, const std::string& content) {
    const std::string path = work_dir() + "/" + name;
    write_text_file(path, content);
    return path;
}

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;
};

CliRun run_cli(const std::string& args) {
    static int counter = 0;
    const std::string base = work_dir() + "/capture" + std::to_string(counter++);
    const std::string cmd = std::string(LOCALCLUST_CLI_PATH) + " " + args + " > " + base +
                            ".out 2> " + base + ".err";
    const int raw = std::system(cmd.c_str());
    CliRun r;
    r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = read_text_file(base + ".out");
    r.err = read_text_file(base + ".err");
    return r;
}

}  // namespace

TEST_SUITE("io-cli") {

TEST_CASE("graph files round trip through parse and serialize") {
    MultiGraph g = parse_graph(kDemo);
    CHECK(g.n() == 4);
    CHECK(g.m() == 5);
    CHECK(g.simple());
    CHECK(serialize_graph(g) == kDemo);
    CHECK(serialize_graph(parse_graph(serialize_graph(g))) == serialize_graph(g));
}

TEST_CASE("comments, blank lines and repeated edges") {
    MultiGraph g = parse_graph("c a note\n\np edge 3 3\nc more\ne 1 2\ne 2 1\n\ne 2 3\n");
    CHECK(g.n() == 3);
    CHECK(g.m() == 3);
    CHECK(g.multiplicity(0, 1) == 2);
    CHECK_FALSE(g.simple());

    MultiGraph empty = parse_graph("p edge 0 0\n");
    CHECK(empty.n() == 0);
    CHECK(empty.m() == 0);
}

TEST_CASE("malformed graph files name the offending line") {
    const auto rejects = [](const std::string& text, const std::string& needle) {
        try {
            parse_graph(text);
            FAIL_CHECK("accepted: " << text);
        } catch (const std::invalid_argument& err) {
            CHECK(std::string(err.what()).find(needle) != std::string::npos);
        }
    };
    rejects("e 1 2\n", "line 1");
    rejects("p edge 2 1\np edge 2 1\ne 1 2\n", "repeated header");
    rejects("p vertex 2 1\ne 1 2\n", "header");
    rejects("p edge 2 1 9\ne 1 2\n", "trailing");
    rejects("p edge 2 1\ne 1 3\n", "out of range");
    rejects("p edge 2 1\ne 0 1\n", "out of range");
    rejects("p edge 2 1\ne 1 1\n", "self-loop");
    rejects("p edge 2 1\ne 1 2 7\n", "trailing");
    rejects("p edge 2 2\ne 1 2\n", "promised");
    rejects("p edge 2 1\ne 1 2\ne 1 2\n", "more edges");
    rejects("p edge 2 1\nx 1 2\n", "unknown line");
    rejects("", "no header");
}

TEST_CASE("solution files round trip byte for byte") {
    SolutionFile sol;
    sol.status = "partition";
    sol.mu = Measure::Size;
    sol.p = 3;
    sol.q = 2;
    sol.clusters = {{0, 1, 2}, {3}};
    sol.stats = {{3, 2}, {1, 2}};
    sol.algorithm = "fptq";
    sol.mode = "derand-simple";
    sol.trials_used = 7;

    const std::string text = serialize_solution(sol);
    const SolutionFile back = parse_solution(text);
    CHECK(back.status == sol.status);
    CHECK(back.mu == sol.mu);
    CHECK(back.clusters == sol.clusters);
    CHECK_FALSE(back.seed.has_value());
    CHECK(serialize_solution(back) == text);

    sol.status = "cluster";
    sol.vertex = 2;
    sol.seed = 11;
    sol.clusters = {{0, 1, 2}};
    sol.stats = {{3, 2}};
    const std::string cl = serialize_solution(sol);
    CHECK(cl.find("\"vertex\": 3") != std::string::npos);  // documents are 1-based
    const SolutionFile clback = parse_solution(cl);
    CHECK(clback.vertex == 2);
    CHECK(clback.seed == uint64_t{11});
    CHECK(serialize_solution(clback) == cl);
}

TEST_CASE("solution parser rejects junk") {
    CHECK_THROWS_AS(parse_solution("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_solution("{}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_solution(R"({"format":"solution/9"})"), std::invalid_argument);

    SolutionFile sol;
    sol.status = "cluster";
    sol.mu = Measure::Size;
    sol.clusters = {{0}};
    sol.stats = {{1, 0}};
    std::string text = serialize_solution(sol);
    auto broken = [&](const std::string& from, const std::string& to) {
        std::string bad = text;
        const size_t at = bad.find(from);
        REQUIRE(at != std::string::npos);
        bad.replace(at, from.size(), to);
        CHECK_THROWS_AS(parse_solution(bad), std::invalid_argument);
    };
    broken("\"cluster\"", "\"mystery\"");
    broken("\"vertices\": [\n        1\n      ]", "\"vertices\": [0]");
    broken("\"mu\": \"size\"", "\"mu\": \"weird\"");
}

TEST_CASE("cluster run emits a file the verifier accepts in its own process") {
    const std::string graph = file_in_dir("demo.col", kDemo);
    for (const char* algo : {"brute", "fptq", "fptp"}) {
        CliRun run = run_cli("cluster --graph " + graph +
                             " --mu size --p 3 --q 2 --vertex 2 --algo " + algo);
        REQUIRE(run.code == 0);
        const SolutionFile sol = parse_solution(run.out);
        CHECK(sol.status == "cluster");
        CHECK(sol.algorithm == algo);
        REQUIRE(sol.vertex.has_value());
        CHECK(*sol.vertex == 1);
        REQUIRE(sol.clusters.size() == 1);
        CHECK(sol.clusters.front().contains(1));

        const std::string spath = file_in_dir(std::string("cl-") + algo + ".json", run.out);
        CliRun check = run_cli("verify --graph " + graph + " --solution " + spath);
        CHECK(check.code == 0);
        CHECK(check.out.find("verify/1") != std::string::npos);
        CHECK(check.out.find("\"ok\": true") != std::string::npos);
    }
}

TEST_CASE("partition runs solve, refuse, and verify") {
    const std::string graph = file_in_dir("demo2.col", kDemo);
    for (const char* algo : {"brute", "fptq", "fptp"}) {
        CliRun run =
            run_cli("partition --graph " + graph + " --mu size --p 3 --q 2 --algo " + algo);
        REQUIRE(run.code == 0);
        const SolutionFile sol = parse_solution(run.out);
        CHECK(sol.status == "partition");
        const std::string spath = file_in_dir(std::string("pa-") + algo + ".json", run.out);
        CliRun check = run_cli("verify --graph " + graph + " --solution " + spath);
        CHECK(check.code == 0);
    }

    CliRun none = run_cli("partition --graph " + graph + " --mu size --p 0 --q 2 --algo fptq");
    CHECK(none.code == 1);
    CHECK(parse_solution(none.out).status == "none");
}

TEST_CASE("same seed same bytes") {
    const std::string graph = file_in_dir("demo3.col", kDemo);
    const std::string args = "cluster --graph " + graph +
                             " --mu size --p 3 --q 2 --vertex 1 --algo fptq --mode rand "
                             "--seed 5";
    CliRun a = run_cli(args);
    CliRun b = run_cli(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const SolutionFile sol = parse_solution(a.out);
    CHECK(sol.seed == uint64_t{5});
    CHECK(sol.mode == "randomized");
}

TEST_CASE("sampling that proves nothing exits with the budget code") {
    const std::string graph = file_in_dir("demo4.col", kDemo);
    CliRun run = run_cli("cluster --graph " + graph +
                         " --mu size --p 0 --q 2 --vertex 1 --algo fptq --mode rand "
                         "--trials 3");
    CHECK(run.code == 2);
    const SolutionFile sol = parse_solution(run.out);
    CHECK(sol.status == "budget-exhausted");
    CHECK(sol.clusters.empty());

    const std::string spath = file_in_dir("nothing.json", run.out);
    CliRun check = run_cli("verify --graph " + graph + " --solution " + spath);
    CHECK(check.code == 1);
    CHECK(check.out.find("nothing to verify") != std::string::npos);
}

TEST_CASE("usage problems exit 64") {
    CHECK(run_cli("").code == 64);
    CHECK(run_cli("cluster").code == 64);
    CHECK(run_cli("no-such-command").code == 64);
    const std::string graph = file_in_dir("demo5.col", kDemo);
    CHECK(run_cli("cluster --graph " + graph + " --mu volume --p 1 --q 1 --vertex 1").code ==
          64);
    CHECK(run_cli("--help").code == 0);
}

TEST_CASE("data problems exit 65") {
    CHECK(run_cli("cluster --graph /nonexistent.col --mu size --p 1 --q 1 --vertex 1").code ==
          65);
    const std::string broken = file_in_dir("broken.col", "p edge 2 1\ne 1 9\n");
    CHECK(run_cli("partition --graph " + broken + " --mu size --p 1 --q 1").code == 65);

    const std::string graph = file_in_dir("demo6.col", kDemo);
    CHECK(run_cli("cluster --graph " + graph + " --mu size --p 3 --q 2 --vertex 9").code ==
          65);
    const std::string junk = file_in_dir("junk.json", "not a solution\n");
    CHECK(run_cli("verify --graph " + graph + " --solution " + junk).code == 65);
    // Parallel edges with a pair measure is a data error too.
    const std::string multi = file_in_dir("multi.col", "p edge 2 2\ne 1 2\ne 1 2\n");
    CHECK(run_cli("cluster --graph " + multi + " --mu nonedge --p 1 --q 1 --vertex 1 "
                  "--algo fptp")
              .code == 65);
}

TEST_CASE("verifier rejects a doctored solution") {
    const std::string graph = file_in_dir("demo7.col", kDemo);
    CliRun run = run_cli("partition --graph " + graph + " --mu size --p 3 --q 2 --algo fptq");
    REQUIRE(run.code == 0);
    std::string text = run.out;
    const std::string from = "\"mu_value\": 3";
    REQUIRE(text.find(from) != std::string::npos);
    text.replace(text.find(from), from.size(), "\"mu_value\": 2");
    const std::string spath = file_in_dir("doctored.json", text);
    CliRun check = run_cli("verify --graph " + graph + " --solution " + spath);
    CHECK(check.code == 1);
    CHECK(check.out.find("\"ok\": false") != std::string::npos);
}

TEST_CASE("separator listing agrees between search and oracle") {
    const std::string graph =
        file_in_dir("bridge.col", "p edge 5 5\ne 1 2\ne 2 3\ne 2 4\ne 3 5\ne 4 5\n");
    CliRun fast = run_cli("important-seps --graph " + graph + " --s 1 --t 5 --k 2");
    REQUIRE(fast.code == 0);
    const json fdoc = json::parse(fast.out);
    CHECK(fdoc.at("format") == "separators/1");
    CHECK(fdoc.at("count") == 2);
    REQUIRE(fdoc.at("separators").size() == 2);
    CHECK(fdoc.at("separators")[0].at("size") == 1);
    CHECK(fdoc.at("separators")[0].at("source_side") == json::array({1}));
    CHECK(fdoc.at("separators")[0].at("edges") == json::array({{1, 2, 1}}));
    CHECK(fdoc.at("separators")[1].at("source_side") == json::array({1, 2, 3, 4}));

    CliRun slow = run_cli("oracle important-seps --graph " + graph + " --s 1 --t 5 --k 2");
    REQUIRE(slow.code == 0);
    const json sdoc = json::parse(slow.out);
    REQUIRE(sdoc.at("separators").size() == fdoc.at("separators").size());
    for (size_t i = 0; i < sdoc.at("separators").size(); ++i) {
        CHECK(sdoc.at("separators")[i].at("size") == fdoc.at("separators")[i].at("size"));
        CHECK(sdoc.at("separators")[i].at("source_side") ==
              fdoc.at("separators")[i].at("source_side"));
    }

    CliRun sets = run_cli("oracle important-sets --graph " + graph + " --vertex 1 --q 1");
    REQUIRE(sets.code == 0);
    const json setsdoc = json::parse(sets.out);
    CHECK(setsdoc.at("format") == "vertex-sets/1");
    CHECK(setsdoc.at("sets") == json::array({{2, 3, 4, 5}}));
}

TEST_CASE("generated instances come back solvable") {
    const std::string gpath = work_dir() + "/planted.col";
    const std::string wpath = work_dir() + "/planted-witness.json";
    CliRun gen = run_cli("gen planted --mu size --n 12 --blocks 3 --intra 1 --inter 4 "
                         "--seed 9 --graph-out " +
                         gpath + " --witness-out " + wpath);
    REQUIRE(gen.code == 0);
    const MultiGraph g = load_graph_file(gpath);
    CHECK(g.n() == 12);
    CliRun check = run_cli("verify --graph " + gpath + " --solution " + wpath);
    CHECK(check.code == 0);

    const SolutionFile witness = parse_solution(read_text_file(wpath));
    CliRun solve = run_cli("partition --graph " + gpath + " --mu size --p " +
                           std::to_string(witness.p) + " --q " + std::to_string(witness.q) +
                           " --algo fptq");
    CHECK(solve.code == 0);
}

TEST_CASE("gadget generation encodes its budget in a comment") {
    const std::string base = file_in_dir("cycle.col", "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n");
    const std::string gpath = work_dir() + "/gadget.col";
    CliRun gen = run_cli("gen gadget --base " + base + " --k 2 --graph-out " + gpath);
    REQUIRE(gen.code == 0);
    const std::string text = read_text_file(gpath);
    CHECK(text.find("c gadget apex 5 k 2") != std::string::npos);
    const MultiGraph g = parse_graph(text);
    CHECK(g.n() == 5);
    CHECK_FALSE(g.simple());
    CHECK(g.multiplicity(0, 4) == 5);  // m + 1 parallel copies toward the apex

    // A base that is not regular is a data error.
    const std::string path3 = file_in_dir("path3.col", "p edge 3 2\ne 1 2\ne 2 3\n");
    CHECK(run_cli("gen gadget --base " + path3 + " --k 2 --graph-out -").code == 65);
}

TEST_CASE("oracle passthrough emits ordinary solution files") {
    const std::string graph = file_in_dir("demo8.col", kDemo);
    CliRun run = run_cli("oracle cluster --graph " + graph + " --mu size --p 3 --q 2 "
                         "--vertex 4");
    REQUIRE(run.code == 0);
    const SolutionFile sol = parse_solution(run.out);
    CHECK(sol.status == "cluster");
    CHECK(sol.algorithm == "brute");
    CHECK(sol.mode == "exhaustive");

    CliRun none = run_cli("oracle partition --graph " + graph + " --mu size --p 0 --q 2");
    CHECK(none.code == 1);
    CHECK(parse_solution(none.out).status == "none");
}

}  // TEST_SUITE
