#include <fstream>
#include <sstream>

#include "decoyplace/cli.hpp"
#include "doctest.h"
#include "support.hpp"

#include "json.hpp"

using namespace decoyplace;
using namespace support;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("decoyplace_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  f << text;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> seven_as_infer(const fs::path& out) {
  return {"infer", "--rib", fixture("seven_as.rib.txt").string(), "--rels", fixture("seven_as.rels.txt").string(),
          "--prefixes", fixture("seven_as.prefixes.txt").string(), "--out", out.string()};
}

}  // namespace

TEST_CASE("cli infer on the seven-AS fixture") {
  auto dir = scratch("infer");
  auto r = run_cli(seven_as_infer(dir));
  REQUIRE(r.code == 0);
  auto text = read_file(dir / "paths.txt");
  CHECK(text.find("203.0.113.0/24|4|4 2 3 6|2|1\n") != std::string::npos);

  std::ifstream rels(fixture("seven_as.rels.txt"));
  auto g = RelationshipGraph::build(parse_relationships(rels).edges);
  std::istringstream in(text);
  auto parsed = parse_paths(in);
  CHECK(parsed.corpus.path_count() == 6);
  for (const auto& s : parsed.corpus.slices) {
    for (const auto& [o, p] : s.paths) CHECK(is_valley_free(p.hops, g));
  }
  auto stats = nlohmann::json::parse(read_file(dir / "infer_stats.json"));
  CHECK(stats.at("valley_free_violations") == 0);
  CHECK(fs::is_regular_file(dir / "manifest.json"));

  // rerun into the same directory: byte-identical outputs
  auto before = read_file(dir / "paths.txt");
  REQUIRE(run_cli(seven_as_infer(dir)).code == 0);
  CHECK(read_file(dir / "paths.txt") == before);
}

TEST_CASE("cli exit code 2 for missing inputs") {
  auto dir = scratch("missing");
  CHECK(run_cli({"infer", "--rels", fixture("seven_as.rels.txt").string(), "--prefixes",
             fixture("seven_as.prefixes.txt").string(), "--out", dir.string()})
            .code == 2);
  auto r = run_cli({"infer", "--rib", (dir / "nope.txt").string(), "--rels", fixture("seven_as.rels.txt").string(),
                "--prefixes", fixture("seven_as.prefixes.txt").string(), "--out", dir.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("nope.txt") != std::string::npos);
  CHECK(run_cli({"place", "--out", dir.string()}).code == 2);
  CHECK(run_cli({"infer", "--config", (dir / "absent.cfg").string()}).code == 2);
}

TEST_CASE("cli exit code 3 for conflicting relationships") {
  auto dir = scratch("conflict");
  write_file(dir / "bad.rels.txt", "1|2|-1\n2|1|-1\n");
  auto r = run_cli({"infer", "--rib", fixture("seven_as.rib.txt").string(), "--rels", (dir / "bad.rels.txt").string(),
                "--prefixes", fixture("seven_as.prefixes.txt").string(), "--out", dir.string()});
  CHECK(r.code == 3);
  CHECK(r.err.find("lines 1 and 2") != std::string::npos);
}

TEST_CASE("cli exit code 4 for an empty corpus") {
  auto dir = scratch("empty");
  write_file(dir / "paths.txt", "# nothing\n");
  CHECK(run_cli({"place", "--out", dir.string()}).code == 4);
  // a prefix nobody announces also yields an empty corpus
  write_file(dir / "other.prefixes.txt", "198.51.100.0/24\n");
  auto r = run_cli({"infer", "--rib", fixture("seven_as.rib.txt").string(), "--rels", fixture("seven_as.rels.txt").string(),
                "--prefixes", (dir / "other.prefixes.txt").string(), "--out", dir.string()});
  CHECK(r.code == 0);
  CHECK(run_cli({"place", "--out", dir.string()}).code == 4);
}

TEST_CASE("cli place with censor exclusion") {
  auto dir = scratch("place");
  REQUIRE(run_cli(seven_as_infer(dir)).code == 0);
  // F and C carry the most paths; both sit in a censor country
  write_file(dir / "cc.txt", "6|CN\n3|CN\n2|DE\n1|US\n");
  write_file(dir / "censors.txt", "CN\n");
  auto r = run_cli({"place", "--out", dir.string(), "--countries", (dir / "cc.txt").string(), "--censors",
                    (dir / "censors.txt").string(), "--threshold-as", "0.5"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(read_file(dir / "placement.json"));
  std::set<std::uint32_t> selected, excluded;
  for (const auto& s : j.at("selected")) selected.insert(s.at("asn").get<std::uint32_t>());
  for (const auto& e : j.at("excluded_censor")) excluded.insert(e.at("asn").get<std::uint32_t>());
  CHECK(excluded == std::set<std::uint32_t>{3, 6});
  CHECK(selected == std::set<std::uint32_t>{2});
  CHECK(j.at("threshold_reached") == false);
  CHECK(fs::is_regular_file(dir / "ranking.csv"));
  CHECK(fs::is_regular_file(dir / "cdf.csv"));
}

TEST_CASE("cli threshold validation") {
  auto dir = scratch("threshold");
  REQUIRE(run_cli(seven_as_infer(dir)).code == 0);
  CHECK(run_cli({"place", "--out", dir.string(), "--threshold-as", "0"}).code == 1);
  CHECK(run_cli({"place", "--out", dir.string(), "--threshold-as", "abc"}).code == 1);
  CHECK(run_cli({"place", "--out", dir.string(), "--threshold-as", "1"}).code == 0);
}

TEST_CASE("cli config file with flag override") {
  auto dir = scratch("config");
  write_file(dir / "run.cfg",
             "# run settings\n"
             "rib = " + fixture("seven_as.rib.txt").string() + "\n"
             "rels=" + fixture("seven_as.rels.txt").string() + "\n"
             "prefixes=" + fixture("seven_as.prefixes.txt").string() + "\n"
             "threshold-as=0.2\n"
             "out=" + (dir / "out").string() + "\n");
  REQUIRE(run_cli({"infer", "--config", (dir / "run.cfg").string()}).code == 0);
  CHECK(fs::is_regular_file(dir / "out" / "paths.txt"));
  REQUIRE(run_cli({"place", "--config", (dir / "run.cfg").string(), "--threshold-as", "1.0"}).code == 0);
  auto j = nlohmann::json::parse(read_file(dir / "out" / "placement.json"));
  CHECK(j.at("threshold") == 1.0);

  write_file(dir / "bad.cfg", "colour=blue\n");
  CHECK(run_cli({"infer", "--config", (dir / "bad.cfg").string()}).code == 1);
}

TEST_CASE("cli config resolves relative paths against its own directory") {
  auto dir = scratch("relcfg");
  fs::copy_file(fixture("seven_as.rib.txt"), dir / "f.rib.txt");
  fs::copy_file(fixture("seven_as.rels.txt"), dir / "f.rels.txt");
  fs::copy_file(fixture("seven_as.prefixes.txt"), dir / "f.prefixes.txt");
  write_file(dir / "run.cfg", "rib=f.rib.txt\nrels=f.rels.txt\nprefixes=f.prefixes.txt\n");
  CHECK(run_cli({"infer", "--config", (dir / "run.cfg").string(), "--out", (dir / "o").string()}).code == 0);
}

TEST_CASE("cli routers: exit code 5 when no trace touches the AS") {
  auto dir = scratch("routers");
  REQUIRE(run_cli({"synth", "--out", dir.string(), "--synth-ases", "40", "--synth-traces", "400", "--synth-prefixes", "3"})
              .code == 0);
  std::vector<std::string> base{"routers", "--out", dir.string(), "--traces", (dir / "synth.traces.txt").string(),
                                "--aliases", (dir / "synth.aliases.txt").string(), "--p2a",
                                (dir / "synth.p2a.txt").string()};
  auto absent = base;
  absent.insert(absent.end(), {"--asn", "4000000000"});
  CHECK(run_cli(absent).code == 5);

  auto b = generate_bundle({.seed = 1, .ases = 40, .prefixes = 3, .traces = 400});
  auto ok = base;
  ok.insert(ok.end(), {"--asn", b.traced_ases.front().str()});
  CHECK(run_cli(ok).code == 0);
  CHECK(fs::is_regular_file(dir / ("routers_" + b.traced_ases.front().str() + ".csv")));
}

TEST_CASE("cli analyze cost from --router-total") {
  auto dir = scratch("analyze");
  REQUIRE(run_cli({"synth", "--out", dir.string(), "--synth-ases", "60", "--synth-traces", "10", "--synth-prefixes", "4"})
              .code == 0);
  REQUIRE(run_cli({"infer", "--out", dir.string(), "--rib", (dir / "synth.rib.txt").string(), "--rels",
               (dir / "synth.rels.txt").string(), "--prefixes", (dir / "synth.prefixes.txt").string()})
              .code == 0);
  auto r = run_cli({"analyze", "--out", dir.string(), "--rels", (dir / "synth.rels.txt").string(), "--countries",
                (dir / "synth.countries.txt").string(), "--censors", (dir / "synth.censors.txt").string(),
                "--router-total", "11709"});
  CHECK(r.code == 0);
  auto cost = nlohmann::json::parse(read_file(dir / "cost.json"));
  CHECK(cost.at("cost_usd").get<std::uint64_t>() == 10'362'465'000ull);
  for (const char* f : {"collateral.csv", "cone_bypass.csv", "spearman.json"}) CHECK(fs::is_regular_file(dir / f));
  CHECK(run_cli({"report", "--out", dir.string()}).code == 0);
  CHECK(fs::is_regular_file(dir / "summary.json"));
}

TEST_CASE("cli usage errors") {
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({"--help"}).code == 0);
}
