#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "helpers.hpp"
#include "multichrome/cli.hpp"
#include "multichrome/io.hpp"

using namespace multichrome;
using namespace testing;
using json = nlohmann::json;

namespace {

struct result {
  int code;
  std::string out;
  std::string err;
};

result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) { return read_text_file(p); }

// Every regular file below `a` exists below `b` with identical bytes.
void check_same_tree(const std::filesystem::path& a, const std::filesystem::path& b) {
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(a)) {
    const auto name = entry.path().filename();
    REQUIRE(std::filesystem::exists(b / name));
    CHECK_MESSAGE(slurp(entry.path()) == slurp(b / name), name.string());
    ++files;
  }
  CHECK(files > 0);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("generate twice with one seed gives identical files") {
    temp_dir dir("gen");
    const std::vector<std::string> base{"generate", "--kind", "fragmented_frontier", "--satellites", "4",
                                        "--satellite-size", "5", "--bridges", "2", "--seed", "17"};
    auto a = base, b = base;
    a.insert(a.end(), {"--out", (dir / "a").string()});
    b.insert(b.end(), {"--out", (dir / "b").string()});
    REQUIRE(run_cli(a).code == 0);
    REQUIRE(run_cli(b).code == 0);
    check_same_tree(dir / "a", dir / "b");
    CHECK(slurp(dir / "a" / "labels.csv").rfind("node,is_A,is_B\n", 0) == 0);
  }

  TEST_CASE("generate rejects flags of another kind") {
    temp_dir dir("genbad");
    const auto r = run_cli({"generate", "--kind", "dense_frontier", "--satellites", "3", "--out", dir.path().string()});
    CHECK(r.code == cli::invalid_input);
  }

  TEST_CASE("simulate writes traces, summary and manifest") {
    temp_dir dir("sim");
    write_text_file(dir / "g.txt", "10 11\n11 12\n12 13\n13 10\n");
    write_text_file(dir / "l.csv", "node,is_A,is_B\n10,1,0\n11,0,1\n12,0,1\n13,0,1\n");
    const auto r = run_cli({"simulate", "--edges", (dir / "g.txt").string(), "--labels", (dir / "l.csv").string(),
                            "--steps", "400", "--tau", "0.005", "--p", "0.01", "--seed", "7", "--out",
                            (dir / "out").string()});
    REQUIRE(r.code == 0);
    const auto trace = slurp(dir / "out" / "trace_0000.csv");
    CHECK(trace.rfind("t,infected_count\n0,1\n", 0) == 0);
    const auto summary = json::parse(slurp(dir / "out" / "summary.json"));
    for (const char* key : {"converts", "yield", "speed", "depth", "params", "seed"}) CHECK(summary.contains(key));
    CHECK(summary["params"]["tau"] == 0.005);
    CHECK(summary["seed"] == 7);
    const auto manifest = json::parse(slurp(dir / "out" / "manifest.json"));
    CHECK(manifest["subcommand"] == "simulate");
    CHECK(manifest["config"]["params"]["steps"] == 400);
    CHECK(manifest["inputs"].size() == 2);
    CHECK(slurp(dir / "out" / "id_map.csv") == "original_id,dense_id\n10,0\n11,1\n12,2\n13,3\n");
  }

  TEST_CASE("rerun from a manifest is byte-identical") {
    temp_dir dir("rerun");
    REQUIRE(run_cli({"generate", "--kind", "dense_frontier", "--a-size", "40", "--b-size", "60", "--inter", "0.05",
                     "--seed", "3", "--out", (dir / "net").string()})
                .code == 0);
    REQUIRE(run_cli({"simulate", "--edges", (dir / "net" / "edges.txt").string(), "--labels",
                     (dir / "net" / "labels.csv").string(), "--replicates", "4", "--seed", "5", "--threads", "1",
                     "--out", (dir / "first").string()})
                .code == 0);
    REQUIRE(run_cli({"rerun", "--manifest", (dir / "first" / "manifest.json").string(), "--threads", "3", "--out",
                     (dir / "second").string()})
                .code == 0);
    check_same_tree(dir / "first", dir / "second");

    write_text_file(dir / "net" / "labels.csv", "node,is_A,is_B\n0,1,0\n");
    const auto changed =
        run_cli({"rerun", "--manifest", (dir / "first" / "manifest.json").string(), "--out", (dir / "third").string()});
    CHECK(changed.code == cli::invalid_input);
  }

  TEST_CASE("sweep writes records and correlations") {
    temp_dir dir("sweep");
    const auto r = run_cli({"sweep", "--ensemble", "mixed", "--count", "6", "--replicates", "3", "--steps", "100",
                            "--seed", "2", "--out", dir.path().string()});
    REQUIRE(r.code == 0);
    std::istringstream in(slurp(dir / "sweep.csv"));
    CHECK(parse_sweep_csv(in).size() == 6);
    const auto rho = json::parse(slurp(dir / "correlations.json"));
    for (const char* key : {"yield_vs_overlap_with_A", "yield_vs_overlap_with_B", "yield_vs_components",
                            "yield_vs_density"})
      CHECK(rho.contains(key));
    CHECK(json::parse(slurp(dir / "specs.json")).size() == 6);
  }

  TEST_CASE("capacity echoes y(0) = V_0 for one broadcaster") {
    temp_dir dir("cap");
    write_text_file(dir / "aud.json", R"({"p":0.004,"tau":0.008,"broadcasters":[{"n":100,"m":5}]})");
    const auto r = run_cli({"capacity", "--model", (dir / "aud.json").string(), "--out", (dir / "out").string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("0,100,5,5,5\n") != std::string::npos);
    const auto cap = json::parse(slurp(dir / "out" / "capacity.json"));
    CHECK(cap["broadcasters"][0]["V"] == cap["broadcasters"][0]["y"]);
    CHECK(cap["selected_connected"] == 0);
  }

  TEST_CASE("profile scores users and drops bots from group statistics") {
    temp_dir dir("prof");
    write_text_file(dir / "p.jsonl",
                    R"({"user_id":"1","media_shares":[0,1,0,0,0],"domain_counts":{"a":1},"botscore":0.1,"group":"pro","topic_sequence":["vax","climate"]})"
                    "\n"
                    R"({"user_id":"2","media_shares":[0,0,0,0,1],"botscore":0.9,"group":"anti","topic_sequence":["vax","ai"]})"
                    "\n"
                    R"({"user_id":"3","media_shares":[0,0,1,0,0],"botscore":0.5,"group":"wavering","topic_sequence":["climate","vax"]})"
                    "\n");
    write_text_file(dir / "rt.txt", "1 3\n2 3\n3 1\n");
    write_text_file(dir / "groups.csv", "node,group\n1,pro\n2,anti\n3,wavering\n");
    const auto r = run_cli({"profile", "--profiles", (dir / "p.jsonl").string(), "--retweets",
                            (dir / "rt.txt").string(), "--groups", (dir / "groups.csv").string(), "--out",
                            (dir / "out").string()});
    REQUIRE(r.code == 0);
    const auto scores = slurp(dir / "out" / "scores.csv");
    CHECK(scores.find("2,2,,1,anti\n") != std::string::npos);
    const auto centrality = json::parse(slurp(dir / "out" / "centrality.json"));
    bool saw_anti = false;
    for (const auto& row : centrality["groups"]) saw_anti = saw_anti || row["group"] == "anti";
    CHECK_FALSE(saw_anti);
    // the bot's vax -> ai transition is not counted
    CHECK(slurp(dir / "out" / "transition_counts.csv") == "from,climate,vax\nclimate,0,1\nvax,1,0\n");
  }

  TEST_CASE("analyze writes the frontier report and table") {
    temp_dir dir("an");
    write_text_file(dir / "g.txt", "0 1\n1 2\n2 3\n");
    write_text_file(dir / "l.csv", "node,is_A,is_B\n0,1,0\n1,1,0\n2,0,1\n3,0,1\n");
    const auto r = run_cli({"analyze", "--edges", (dir / "g.txt").string(), "--labels", (dir / "l.csv").string(),
                            "--name", "Toy", "--centrality", "--out", (dir / "out").string()});
    REQUIRE(r.code == 0);
    const auto f = json::parse(slurp(dir / "out" / "frontier.json"));
    CHECK(f["frontier_size"] == 2);
    CHECK(f["overlap_with_A"] == 0.5);
    CHECK(slurp(dir / "out" / "frontier_table.md") ==
          "| Network | Frontier Size | Total Network Size |\n|---|---|---|\n| Toy | 2 | 4 |\n");
    CHECK(slurp(dir / "out" / "centrality.csv").find("1,2,1,2,2\n") != std::string::npos);
  }

  TEST_CASE("exit codes and one-line JSON errors") {
    temp_dir dir("err");
    const auto unknown = run_cli({"capacity", "--model", "m.json", "--frobnicate", "--out", dir.path().string()});
    CHECK(unknown.code == cli::usage_error);
    CHECK(json::parse(unknown.err)["exit_code"] == 2);
    CHECK(std::count(unknown.err.begin(), unknown.err.end(), '\n') == 1);

    const auto missing = run_cli({"capacity", "--model", (dir / "nope.json").string(), "--out", dir.path().string()});
    CHECK(missing.code == cli::missing_file);
    CHECK(json::parse(missing.err)["error"] == "missing_file");

    write_text_file(dir / "bad.json", R"({"p":0.1,"tau":0.2,"broadcasters":[{"n":1,"m":4}]})");
    const auto invalid = run_cli({"capacity", "--model", (dir / "bad.json").string(), "--out", dir.path().string()});
    CHECK(invalid.code == cli::invalid_input);

    write_text_file(dir / "e.txt", "0 1\nzero 2\n");
    write_text_file(dir / "l.csv", "node,is_A,is_B\n0,1,0\n");
    const auto parse = run_cli({"simulate", "--edges", (dir / "e.txt").string(), "--labels",
                                (dir / "l.csv").string(), "--out", dir.path().string()});
    CHECK(parse.code == cli::invalid_input);
    CHECK(json::parse(parse.err)["line"] == 2);

    CHECK(run_cli({}).code == cli::usage_error);
    CHECK(run_cli({"--help"}).code == cli::ok);
  }
}
