#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using bcc::cli::run_cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "bcc_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string file(const std::string& name) { return (scratch() / name).string(); }

void write(const std::string& name, const std::string& text) {
  std::ofstream(file(name)) << text;
}

std::string read(const std::string& name) {
  std::ifstream in(file(name));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("gen writes the figure 2 instance and a sidecar") {
  Run r = run({"gen", "copath", "--n", "5", "-o", file("copath5.graph")});
  CHECK(r.code == 0);
  CHECK(read("copath5.graph") == "c copath5\np 5 6\n0 2\n0 3\n0 4\n1 3\n1 4\n2 4\n");
  auto side = nlohmann::json::parse(read("copath5.graph.json"));
  CHECK(side["expected"]["bc"] == 2);
  CHECK(side["labels"][0] == "a");
}

TEST_CASE("random generators need a seed") {
  CHECK(run({"gen", "chordal", "--n", "8"}).code == 1);
  Run r = run({"gen", "chordal", "--n", "8", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == run({"gen", "chordal", "--n", "8", "--seed", "3"}).out);
  CHECK(run({"gen", "twomember", "--shape", "star", "--nodes", "4"}).code == 1);
  CHECK(run({"gen", "twomember", "--shape", "star", "--nodes", "4", "--seed", "1"}).code == 0);
}

TEST_CASE("cover, verify and the round trip") {
  run({"gen", "fig", "--id", "fig2", "-o", file("fig2.graph")});
  Run c = run({"cover", file("fig2.graph"), "-o", file("fig2.cover")});
  CHECK(c.code == 0);
  std::string text = read("fig2.cover");
  CHECK(text.find("c cover size 2") != std::string::npos);
  CHECK(run({"verify", file("fig2.graph"), file("fig2.cover")}).code == 0);

  // Drop the last biclique line.
  std::string cut = text.substr(0, text.rfind("L:"));
  write("fig2_cut.cover", cut);
  Run bad = run({"verify", file("fig2.graph"), file("fig2_cut.cover")});
  CHECK(bad.code != 0);
  CHECK(bad.err.find("not covered") != std::string::npos);

  Run js = run({"cover", file("fig2.graph"), "--format", "json", "-o", file("fig2.json")});
  CHECK(js.code == 0);
  auto j = nlohmann::json::parse(read("fig2.json"));
  CHECK(j["cover"]["size"] == 2);
  CHECK(j["cover"]["all_leq2_flag"] == true);
  CHECK(run({"verify", file("fig2.graph"), file("fig2.json")}).code == 0);
}

TEST_CASE("figure 3 partition verifies in partition mode") {
  run({"gen", "fig", "--id", "fig3", "-o", file("fig3.graph")});
  write("fig3.part", "L: 0 1 | R: 4 5\nL: 0 | R: 3\nL: 2 | R: 5\n");
  CHECK(run({"verify", file("fig3.graph"), file("fig3.part"), "--mode", "partition"}).code == 0);
  Run p = run({"cover", file("fig3.graph"), "--partition", "-o", file("fig3.p2")});
  CHECK(p.code == 0);
  CHECK(run({"verify", file("fig3.graph"), file("fig3.p2"), "--mode", "partition"}).code == 0);
}

TEST_CASE("copath 12 cover") {
  run({"gen", "copath", "--n", "12", "-o", file("copath12.graph")});
  Run r = run({"cover", file("copath12.graph"), "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["cover"]["size"] == 4);
}

TEST_CASE("C4 input has a chordal complement") {
  write("c4.graph", "p 4 4\n0 1\n1 2\n2 3\n0 3\n");
  Run r = run({"cover", file("c4.graph"), "-o", file("c4.cover")});
  CHECK(r.code == 0);
  CHECK(run({"verify", file("c4.graph"), file("c4.cover")}).code == 0);
  Run o = run({"oracle", "bc", file("c4.graph")});
  CHECK(o.out.rfind("bc: 1", 0) == 0);
}

TEST_CASE("non co-chordal input exits with 3") {
  write("2k2.graph", "p 4 2\n0 2\n1 3\n");
  Run r = run({"cover", file("2k2.graph")});
  CHECK(r.code == 3);
  CHECK(r.err.find("not chordal") != std::string::npos);
  CHECK(run({"tree", file("2k2.graph"), "--complement"}).code == 3);
}

TEST_CASE("parse errors exit with 1 and a line number") {
  write("broken.graph", "p 3 2\n0 1\n0 9\n");
  Run r = run({"bounds", file("broken.graph")});
  CHECK(r.code == 1);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(run({"nonsense"}).code == 1);
  CHECK(run({"cover", file("missing.graph")}).code == 1);
}

TEST_CASE("bounds reports") {
  run({"gen", "fig", "--id", "fig3", "-o", file("fig3.graph")});
  Run r = run({"bounds", file("fig3.graph"), "--json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 6);
  CHECK(j["m"] == 6);
  CHECK(j["bounds"]["log_mc"] == 2);
  CHECK(j["bounds"]["matching_num"] == 9);
  CHECK(j["bounds"]["matching_den"] == 6);
  CHECK(j["cover"]["size"] == 3);
  CHECK(j["cover"]["ranking_r"].is_number());
  CHECK(j["cover"]["ranking_optimal"].is_boolean());
  CHECK(j["oracle"]["bc"] == 3);
  CHECK(j["oracle"]["exact"] == true);
  CHECK(j["bounds"].contains("log_chi"));
  CHECK(j["bounds"].contains("omega_conflict"));
  CHECK(j["oracle"].contains("bp"));

  run({"gen", "fig", "--id", "fig1_k5", "-o", file("k5.graph")});
  auto k5 = nlohmann::json::parse(run({"bounds", file("k5.graph"), "--json"}).out);
  CHECK(k5["bounds"]["log_mc"] == 3);

  write("empty.graph", "p 3 0\n");
  auto e = nlohmann::json::parse(run({"bounds", file("empty.graph"), "--json"}).out);
  CHECK(e["bounds"]["log_mc"] == 0);
  CHECK(e["bounds"]["omega_conflict"] == 0);
  CHECK(e["bounds"]["matching_num"] == 0);
  CHECK(e["oracle"]["bc"] == 0);
  CHECK(e["cover"]["size"] == 0);

  Run text = run({"bounds", file("fig3.graph")});
  CHECK(text.out.find("lb_log_mc") != std::string::npos);
}

TEST_CASE("batch mode writes one JSON line per file") {
  fs::path dir = scratch() / "batch";
  fs::create_directories(dir);
  for (const char* id : {"fig1_c4c", "fig2", "fig3"})
    run({"gen", "fig", "--id", id, "-o", (dir / (std::string(id) + ".graph")).string()});
  Run r = run({"bounds", "--dir", dir.string()});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::vector<std::string> files;
  for (std::string line; std::getline(lines, line);)
    files.push_back(nlohmann::json::parse(line)["file"]);
  CHECK(files == std::vector<std::string>{"fig1_c4c.graph", "fig2.graph", "fig3.graph"});
}

TEST_CASE("rank, tree and oracle subcommands") {
  write("path9.tree", "t 9\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n");
  Run r = run({"rank", "--tree", file("path9.tree")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("r: 4\noptimal: yes\n", 0) == 0);
  CHECK(r.out.find("0 1 : ") != std::string::npos);

  run({"gen", "fig", "--id", "fig3", "-o", file("fig3.graph")});
  Run t = run({"tree", file("fig3.graph"), "--complement"});
  CHECK(t.code == 0);
  CHECK(t.out.find("K0: 0 1 2") != std::string::npos);
  CHECK(t.out.find("| mid:") != std::string::npos);

  Run bc = run({"oracle", "bc", file("fig3.graph")});
  CHECK(bc.code == 0);
  CHECK(bc.out.rfind("bc: 3\n", 0) == 0);
  CHECK(std::count(bc.out.begin(), bc.out.end(), 'L') == 3);

  run({"gen", "fig", "--id", "fig1_k5", "-o", file("k5.graph")});
  CHECK(run({"oracle", "omega", file("k5.graph"), "--conflict", "--rule", "induced"}).out ==
        "omega: 2\n");
  CHECK(run({"oracle", "matching", file("k5.graph")}).out == "matching: 2\n");
  CHECK(run({"oracle", "chi", file("k5.graph")}).out == "chi: 5\n");
  CHECK(run({"oracle", "cliques", file("k5.graph")}).out.rfind("cliques: 1\n", 0) == 0);
}

TEST_CASE("budget overrides") {
  run({"gen", "fig", "--id", "fig3", "-o", file("fig3.graph")});
  CHECK(run({"--budget", "cover=4", "oracle", "bc", file("fig3.graph")}).code == 4);
  CHECK(run({"--budget", "bogus=1", "oracle", "bc", file("fig3.graph")}).code == 1);
  setenv("BCC_BUDGET", "cover=4", 1);
  CHECK(run({"oracle", "bc", file("fig3.graph")}).code == 4);
  unsetenv("BCC_BUDGET");
  CHECK(run({"oracle", "bc", file("fig3.graph")}).code == 0);
}
