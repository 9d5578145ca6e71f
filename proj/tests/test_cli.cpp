#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "uniserial/cli.hpp"

using namespace uniserial;

namespace {

struct RunOutcome {
    int rc = 0;
    std::string out, err;
};

RunOutcome run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    RunOutcome r;
    r.rc = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

} // namespace

TEST_CASE("cg prints one canonical surd per call") {
    CHECK(run({"cg", "1", "1", "1", "-1", "0", "0"}).out == "1/2*sqrt(2)\n");
    CHECK(run({"cg", "2", "2", "2", "2", "4", "4"}).out == "1\n");
    CHECK(run({"cg", "1", "1", "1", "1", "0", "0"}).out == "0\n");
    CHECK(run({"cg", "2", "0", "2", "0", "4", "0"}).out == "1/3*sqrt(6)\n");
    CHECK(run({"cg", "1", "1", "1", "-1", "0", "0"}).rc == exit_ok);

    CHECK(run({"cg", "1", "2", "3"}).rc == exit_usage);
    CHECK(run({"cg", "1", "1", "1", "x", "0", "0"}).rc == exit_usage);
    CHECK(run({}).rc == exit_usage);
    CHECK(run({"frobnicate"}).rc == exit_usage);
}

TEST_CASE("soc emits the report as stable JSON") {
    RunOutcome both = run({"soc", "--m", "1", "--left", "Z:0:1", "--right", "Z:0:1",
                           "--method", "both"});
    CHECK(both.rc == exit_ok);
    CHECK(both.out ==
          "{\"agreement\":true,\"conjectural\":false,\"left_spec\":\"Z:0:1\",\"m\":1,"
          "\"method\":\"both\",\"right_spec\":\"Z:0:1\",\"socle\":[0,1]}\n");

    RunOutcome again = run({"soc", "--m", "1", "--left", "Z:0:1", "--right", "Z:0:1",
                            "--method", "both"});
    CHECK(again.out == both.out);

    RunOutcome oracle = run({"soc", "--m", "4", "--left", "E4:1", "--right", "Z:0:1",
                             "--method", "oracle"});
    CHECK(oracle.rc == exit_ok);
    CHECK(oracle.out == "{\"left_spec\":\"E4:1\",\"m\":4,\"method\":\"oracle\","
                        "\"right_spec\":\"Z:0:1\",\"socle\":[0,4]}\n");

    RunOutcome series = run({"soc", "--m", "3", "--left", "Zd:1:1", "--right", "Zd:1:1",
                             "--method", "both", "--series"});
    CHECK(series.rc == exit_ok);
    CHECK(series.out ==
          "{\"agreement\":true,\"conjectural\":false,\"left_spec\":\"Zd:1:1\",\"m\":3,"
          "\"method\":\"both\",\"right_spec\":\"Zd:1:1\","
          "\"series\":[[0,2,4,6,8],[3,3,5,5],[0,2]],\"socle\":[0,2,4,6,8]}\n");
}

TEST_CASE("soc closed method carries the graded slices, empty levels included") {
    RunOutcome closed = run({"soc", "--m", "1", "--left", "Z:1:1", "--right", "Zd:0:1",
                             "--method", "closed", "--graded"});
    CHECK(closed.rc == exit_ok);
    CHECK(closed.out ==
          "{\"conjectural\":false,\"graded\":{\"0\":[0,2],\"1\":[],\"2\":[]},"
          "\"left_spec\":\"Z:1:1\",\"m\":1,\"method\":\"closed\","
          "\"right_spec\":\"Zd:0:1\",\"socle\":[0,2]}\n");

    RunOutcome both = run({"soc", "--m", "1", "--left", "Z:1:1", "--right", "Zd:0:1",
                           "--method", "both", "--graded", "--series"});
    CHECK(both.rc == exit_ok);
    CHECK(both.out.find("\"agreement\":true") != std::string::npos);
    CHECK(both.out.find("\"series\":[[0,2],[1,1,3],[2]]") != std::string::npos);

    RunOutcome text = run({"soc", "--m", "2", "--left", "Z:0:1", "--right", "Z:0:1",
                           "--method", "both", "--graded", "--series", "--output", "text"});
    CHECK(text.rc == exit_ok);
    CHECK(text.out == "socle: 0 2\n"
                      "graded 0: 0\n"
                      "graded 1: 2\n"
                      "graded 2: \n"
                      "series 0: 0 2\n"
                      "series 1: 2 2\n"
                      "series 2: 0 4\n"
                      "agreement: true\n");
}

TEST_CASE("soc exit codes: bad specs, graded on 3-step modules, closed scope") {
    CHECK(run({"soc", "--m", "2", "--left", "Q:1", "--right", "Z:0:1"}).rc == exit_usage);
    CHECK(run({"soc", "--left", "Z:0:1", "--right", "Z:0:1"}).rc == exit_usage);
    CHECK(run({"soc", "--m", "2", "--left", "E3:0", "--right", "Z:0:1", "--graded"}).rc ==
          exit_not_bigraded);
    CHECK(run({"soc", "--m", "2", "--left", "E3:0", "--right", "Z:0:1",
               "--method", "both"}).rc == exit_usage);
    CHECK(run({"soc", "--m", "2", "--left", "E3:0", "--right", "Z:0:1"}).rc == exit_ok);
    CHECK(run({"soc", "--m", "2", "--left", "Z:0:1", "--right", "Z:0:1",
               "--method", "guess"}).rc == exit_usage);
}

TEST_CASE("dimension cap from the environment refuses oversized tensors") {
    setenv("UNISERIAL_MAX_DIM", "10", 1);
    RunOutcome capped = run({"soc", "--m", "1", "--left", "Z:0:3", "--right", "Z:0:3"});
    CHECK(capped.rc == exit_usage);
    CHECK(capped.err.find("cap") != std::string::npos);
    setenv("UNISERIAL_MAX_DIM", "0", 1);
    CHECK(run({"soc", "--m", "1", "--left", "Z:0:3", "--right", "Z:0:3"}).rc == exit_ok);
    unsetenv("UNISERIAL_MAX_DIM");
    CHECK(run({"soc", "--m", "1", "--left", "Z:0:3", "--right", "Z:0:3"}).rc == exit_ok);
}

TEST_CASE("hom prints the dimension, bare by default") {
    CHECK(run({"hom", "--m", "2", "--from", "Z:0:1", "--to", "Z:0:1"}).out == "1\n");
    CHECK(run({"hom", "--m", "2", "--from", "Z:0:1", "--to", "Z:1:1"}).out == "0\n");
    CHECK(run({"hom", "--m", "2", "--from", "Z:0:1", "--to", "Zd:0:1",
               "--invariants", "--output", "json"}).out ==
          "{\"dim\":1,\"from\":\"Z:0:1\",\"invariants\":true,\"m\":2,\"to\":\"Zd:0:1\"}\n");
    CHECK(run({"hom", "--m", "3", "--from", "E:2:1", "--to", "Z:0:1"}).rc == exit_usage);
}

TEST_CASE("factorize round trips through both input forms") {
    RunOutcome sig = run({"factorize", "--m", "3", "--soc", "1,3,6",
                          "--soc-dual", "2,4,6,8,10,12", "--lambda", "12"});
    CHECK(sig.rc == exit_ok);
    CHECK(sig.out == "Z:1:2 ⊗ Z:2:1\n");

    RunOutcome pair = run({"factorize", "--m", "3", "--left", "Z:1:2", "--right", "Z:2:1",
                           "--output", "json"});
    CHECK(pair.rc == exit_ok);
    CHECK(pair.out ==
          "{\"case\":\"i\",\"lambda\":12,\"left\":\"Z:1:2\",\"m\":3,\"right\":\"Z:2:1\","
          "\"soc\":[1,3,6],\"soc_dual\":[2,4,6,8,10,12],"
          "\"split\":{\"a2\":[1,3],\"a2_dual\":[2,4,6,8,10,12],\"am\":[6],\"am_dual\":[]}}\n");

    RunOutcome swapped = run({"factorize", "--m", "3", "--left", "Zd:0:2",
                              "--right", "Z:1:1"});
    CHECK(swapped.rc == exit_ok);
    CHECK(swapped.out == "Z:1:1 ⊗ Zd:0:2\n");
}

TEST_CASE("factorize exit codes: ambiguity, dead ends, missing arguments") {
    RunOutcome m2 = run({"factorize", "--m", "2", "--soc", "0,2", "--soc-dual", "0,2",
                         "--lambda", "4"});
    CHECK(m2.rc == exit_ambiguous);
    CHECK(m2.out.find("m = 2") != std::string::npos);

    RunOutcome dead = run({"factorize", "--m", "3", "--soc", "1,3,7", "--soc-dual", "2,4",
                           "--lambda", "12"});
    CHECK(dead.rc == exit_no_candidate);

    CHECK(run({"factorize", "--m", "3", "--soc", "1,3"}).rc == exit_usage);
    CHECK(run({"factorize", "--m", "3", "--left", "Z:1:2"}).rc == exit_usage);
}

TEST_CASE("explore-s1 writes the sweep as CSV with summary and boundary rows") {
    RunOutcome csv = run({"explore-s1", "--m", "1", "--max", "3"});
    CHECK(csv.rc == exit_ok);

    std::vector<std::string> lines;
    std::istringstream in(csv.out);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    REQUIRE(lines.size() > 3);
    CHECK(lines[0] == "m,a,b,c,d,oracle_S1,conjecture_S1,match");

    size_t summary_at = 0;
    long data = 0, boundary = 0;
    for (size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].rfind("summary,", 0) == 0) {
            summary_at = i;
        } else if (lines[i].rfind("boundary,", 0) == 0) {
            CHECK(summary_at != 0); // boundary rows come after the summary
            ++boundary;
        } else {
            CHECK(summary_at == 0); // data rows come before it
            CHECK(lines[i].rfind("1,", 0) == 0);
            CHECK(lines[i].substr(lines[i].size() - 5) == ",true");
            ++data;
        }
    }
    REQUIRE(summary_at != 0);
    CHECK(lines[summary_at] == "summary," + std::to_string(data) + "," +
                                   std::to_string(data) + ",0");
    CHECK(boundary == 2);
    CHECK(lines[summary_at + 1] == "boundary,1,1,2,2,1,0");
    CHECK(lines[summary_at + 2] == "boundary,1,2,3,3,2,0");

    RunOutcome threaded = run({"explore-s1", "--m", "1", "--max", "3", "--jobs", "3"});
    CHECK(threaded.out == csv.out);
}

TEST_CASE("explore-s1 copies the CSV into a file on request") {
    std::string path = "cli_s1_test.csv";
    RunOutcome r = run({"explore-s1", "--m", "2", "--max", "4", "--out", path});
    CHECK(r.rc == exit_ok);
    CHECK(r.out == "explored 55 pairs: 55 match, 0 mismatch, 3 boundary -> " + path + "\n");

    std::ifstream f(path);
    REQUIRE(f.good());
    std::string first;
    std::getline(f, first);
    CHECK(first == "m,a,b,c,d,oracle_S1,conjecture_S1,match");
    f.close();
    std::remove(path.c_str());
}
