#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <string>

#include "treeforce/json_io.hpp"

using namespace tf;
using tf::io::Json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(TFC_BIN) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const Json& j) {
    std::string path = std::string("/tmp/tfc_test_") + name + ".json";
    tf::io::save_file(path, j);
    return path;
}

}  // namespace

TEST_CASE("json round trips") {
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
        std::size_t pl = rng() % 5, ql = 1 + rng() % 4;
        Point x(Word::from_value(rng() & ((1u << pl) - 1), pl),
                Word::from_value(rng() & ((1u << ql) - 1), ql));
        CHECK(tf::io::point_from(tf::io::point_json(x)) == x);
    }
    ClopenSet a(3, {Word::parse("010"), Word::parse("111")});
    CHECK(tf::io::clopen_from(tf::io::clopen_json(a)) == a);

    BlockTree t(Word::parse("1"),
                {Block(Word::parse("00"), Word::parse("10"))},
                TailRule::cycle({Block(Word::parse("01"), Word::parse("11"))}));
    CHECK(tf::io::block_tree_from(tf::io::block_tree_json(t)) == t);

    ClopenGraph g(2, {{Word::parse("00"), Word::parse("11")}});
    Json jg = tf::io::clopen_graph_json(g);
    ClopenGraph g2 = tf::io::clopen_graph_from(jg);
    CHECK(g2.depth() == 2);
    CHECK(g2.boxes() == g.boxes());

    FiniteTree ft = FiniteTree::generated_by({Word::parse("01"), Word::parse("10")});
    CHECK(tf::io::finite_tree_from(tf::io::finite_tree_json(ft)) == ft);
}

TEST_CASE("block tree json matches the documented schema") {
    BlockTree t(Word::parse("0"), {Block(Word::parse("01"), Word::parse("11"))});
    Json j = tf::io::block_tree_json(t);
    CHECK(j["stem"] == "0");
    CHECK(j["blocks"][0][0] == "01");
    CHECK(j["blocks"][0][1] == "11");
    CHECK(j["tail"]["kind"] == "free");
}

TEST_CASE("cli chromatic") {
    auto res = run_cli("chromatic --graph g1 --depth 6");
    CHECK(res.exit_code == 0);
    Json j = Json::parse(res.out);
    CHECK(j["chi"] == 2);
    CHECK(j["edges"] == 192);

    auto g0 = run_cli("chromatic --graph g0 --depth 3");
    Json j0 = Json::parse(g0.out);
    CHECK(j0["chi"] == 2);
    CHECK(j0["edges"] == 7);

    auto trivial = run_cli("chromatic --graph g0 --depth 0");
    CHECK(Json::parse(trivial.out)["chi"] == 1);
}

TEST_CASE("cli chromatic is byte-deterministic") {
    auto a = run_cli("chromatic --graph g1 --depth 5");
    auto b = run_cli("chromatic --graph g1 --depth 5");
    CHECK(a.out == b.out);
}

TEST_CASE("cli exit codes") {
    // Budget exhaustion: an odd cycle of cylinders keeps the clique bound at 2
    // while chi = 3, so the 2-coloring search runs into a tiny node budget.
    Json cyc{{"kind", "boxes"},
             {"depth", 3},
             {"boxes", Json::array({Json::array({"000", "001"}), Json::array({"001", "010"}),
                                    Json::array({"010", "011"}), Json::array({"011", "100"}),
                                    Json::array({"100", "000"})})}};
    std::string cyc_path = write_temp("cycle", cyc);
    auto budget = run_cli("chromatic --graph " + cyc_path + " --depth 3 --budget 2");
    CHECK(budget.exit_code == 2);

    // Malformed input file.
    std::string bad = "/tmp/tfc_test_bad.json";
    std::ofstream(bad) << "{\"kind\": \"boxes\", \"depth\": 2}";
    auto malformed = run_cli("chromatic --graph " + bad + " --depth 3");
    CHECK(malformed.exit_code == 1);

    // Clique tree over an empty graph: mathematically negative outcome.
    std::string empty = write_temp("emptyg", Json{{"kind", "boxes"},
                                                  {"depth", 2},
                                                  {"boxes", Json::array()}});
    auto neg = run_cli("construct clique-tree --graph " + empty + " --depth 4");
    CHECK(neg.exit_code == 3);
}

TEST_CASE("cli construct independent-tree") {
    Json g{{"kind", "boxes"},
           {"depth", 2},
           {"boxes", Json::array({Json::array({"00", "11"})})}};
    std::string path = write_temp("boxes", g);
    auto res = run_cli("construct independent-tree --graph " + path + " --depth 12");
    CHECK(res.exit_code == 0);
    Json j = Json::parse(res.out);
    CHECK(j["outcome"] == "independent-tree");
    BlockTree t = tf::io::block_tree_from(j["tree"]);
    CHECK(t.is_silver());
}

TEST_CASE("cli construct four-cycle") {
    Json g{{"kind", "boxes"},
           {"depth", 1},
           {"boxes", Json::array({Json::array({"0", "1"})})}};
    std::string path = write_temp("allcross", g);
    auto res = run_cli("construct four-cycle --graph " + path);
    CHECK(res.exit_code == 0);
    Json j = Json::parse(res.out);
    CHECK(j["points"].size() == 4);
    CHECK(j["verified"] == true);
}

TEST_CASE("cli fat check, build, ladder") {
    auto check = run_cli("fat check --split-depth 3");
    CHECK(check.exit_code == 0);
    CHECK(Json::parse(check.out)["fat"] == true);

    std::string clopen = write_temp("half", Json{{"depth", 1}, {"words", Json::array({"1"})}});
    auto build = run_cli("fat build --clopen " + clopen + " --levels 2");
    CHECK(build.exit_code == 0);
    Json jb = Json::parse(build.out);
    CHECK(jb["branches_inside"] == true);
    CHECK(jb["silver"] == true);

    auto lad = run_cli("fat ladder --levels 2");
    CHECK(lad.exit_code == 0);
    Json jl = Json::parse(lad.out);
    CHECK(jl["levels"].size() == 3);
    CHECK(jl["levels"][2].size() == 8);
}

TEST_CASE("cli depth guard") {
    auto res = run_cli("chromatic --graph g1 --depth 20");
    CHECK(res.exit_code == 1);
}

TEST_CASE("cli negative outcomes exit 3") {
    // Everything agrees with the all-cross graph: the dichotomy cannot decide.
    std::string allcross = write_temp("allcross3",
                                      Json{{"kind", "boxes"},
                                           {"depth", 1},
                                           {"boxes", Json::array({Json::array({"0", "1"})})}});
    auto undecided =
        run_cli("construct independent-tree --graph " + allcross + " --depth 8 --budget 0");
    CHECK(undecided.exit_code == 3);

    // A starved fatness probe on a tree with forced ones reports exhaustion.
    Json one_tail{{"stem", ""},
                  {"blocks", Json::array()},
                  {"tail", Json{{"kind", "cycle"},
                                {"blocks", Json::array({Json::array({"01", "11"})})}}}};
    std::string tree_path = write_temp("ones", one_tail);
    auto starved = run_cli("fat check --tree " + tree_path + " --split-depth 2 --probe 40");
    CHECK(starved.exit_code == 3);
}

TEST_CASE("cli pullback graph files") {
    Json inner{{"kind", "boxes"},
               {"depth", 2},
               {"boxes", Json::array({Json::array({"00", "11"})})}};
    Json spec{{"kind", "pullback"},
              {"map", Json{{"kind", "xor"}, {"word", "10"}}},
              {"inner", inner}};
    GraphSpec g = tf::io::graph_spec_from(spec);
    CHECK(g.kind() == GraphKind::Pullback);
    Point x = Point::parse("10", "0"), y = Point::parse("01", "0");
    // (x, y) is an edge iff their xor images hit the box [00] x [11].
    CHECK(g.edge(x, y).edge == GraphSpec::boxes(tf::io::clopen_graph_from(inner))
                                   .edge(xor_point(x, Word::parse("10")),
                                         xor_point(y, Word::parse("10")))
                                   .edge);
    CHECK(tf::io::graph_spec_json(g)["kind"] == "pullback");
}

TEST_CASE("cli dot export") {
    auto res = run_cli("chromatic --graph g1 --depth 2 --format dot");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("graph restriction {") != std::string::npos);
    CHECK(res.out.find("label=\"01\"") != std::string::npos);
}
