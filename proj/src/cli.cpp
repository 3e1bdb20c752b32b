#include "decoyplace/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "decoyplace/analysis.hpp"
#include "decoyplace/inference.hpp"
#include "decoyplace/ingest.hpp"
#include "decoyplace/outputs.hpp"
#include "decoyplace/placement.hpp"
#include "decoyplace/routermap.hpp"
#include "decoyplace/synth.hpp"
#include "decoyplace/topology.hpp"

namespace decoyplace::cli {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

class CommandError : public std::runtime_error {
 public:
  CommandError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

const std::set<std::string> kFileKeys{"rib", "rels", "prefixes", "countries", "censors", "traces", "aliases", "p2a"};

std::uint64_t fnv1a64(std::string_view data, std::uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Flag values, optionally backed by a key=value config file. Flags win.
class Settings {
 public:
  void bind(CLI::App& app, const std::string& key, const std::string& help) {
    options_[key] = app.add_option("--" + key, flags_[key], help);
  }

  void load_config(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw CommandError(kMissingInput, "cannot open config file " + file.string());
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
      ++line_no;
      auto line = std::string(detail::trim(raw));
      if (line.empty() || line.front() == '#') continue;
      auto eq = line.find('=');
      if (eq == std::string::npos) {
        throw CommandError(kFailure, file.string() + ":" + std::to_string(line_no) + ": expected key=value");
      }
      auto key = std::string(detail::trim(std::string_view(line).substr(0, eq)));
      auto value = std::string(detail::trim(std::string_view(line).substr(eq + 1)));
      if ((!options_.contains(key) && !config_only_.contains(key)) || key == "config") {
        throw CommandError(kFailure, file.string() + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
      }
      if (kFileKeys.contains(key) && fs::path(value).is_relative()) value = (file.parent_path() / value).string();
      config_[key] = value;
    }
  }

  /// Key accepted in the config file without a matching single-value flag.
  void allow_config_key(const std::string& key) { config_only_.insert(key); }

  std::optional<std::string> get(const std::string& key) const {
    if (auto it = options_.find(key); it != options_.end() && it->second->count() > 0) return flags_.at(key);
    if (auto it = config_.find(key); it != config_.end()) return it->second;
    return std::nullopt;
  }

  double number(const std::string& key, double fallback) const {
    auto v = get(key);
    if (!v) return fallback;
    try {
      std::size_t used = 0;
      double d = std::stod(*v, &used);
      if (used != v->size()) throw std::invalid_argument(key);
      return d;
    } catch (const std::exception&) {
      throw CommandError(kFailure, "--" + key + " expects a number, got '" + *v + "'");
    }
  }

  std::uint64_t count(const std::string& key, std::uint64_t fallback) const {
    auto v = get(key);
    if (!v) return fallback;
    auto parsed = parse_count(*v);
    if (!parsed) throw CommandError(kFailure, "--" + key + " expects a non-negative integer, got '" + *v + "'");
    return *parsed;
  }

  /// Path of a required input; exit code 2 when unset or absent.
  fs::path input(const std::string& key) const {
    auto v = get(key);
    if (!v) throw CommandError(kMissingInput, "missing required input --" + key);
    if (!fs::is_regular_file(*v)) throw CommandError(kMissingInput, "input file not found: " + *v);
    return *v;
  }

  std::optional<fs::path> optional_input(const std::string& key) const {
    if (!get(key)) return std::nullopt;
    return input(key);
  }

  std::vector<std::string> keys() const {
    std::vector<std::string> out;
    for (const auto& [k, o] : options_) out.push_back(k);
    return out;
  }

 private:
  std::map<std::string, std::string> flags_;
  std::map<std::string, CLI::Option*> options_;
  std::map<std::string, std::string> config_;
  std::set<std::string> config_only_;
};

struct Context {
  Settings& settings;
  std::vector<std::string> asn_flags;
  fs::path out_dir;
  std::ostream& out;
  std::ostream& err;
  std::vector<std::string> outputs;

  fs::path path(const std::string& name) const { return out_dir / name; }

  void write(const std::string& name, const std::function<void(std::ostream&)>& fn) {
    fs::create_directories(out_dir);
    std::ofstream f(path(name), std::ios::binary);
    if (!f) throw CommandError(kFailure, "cannot write " + path(name).string());
    fn(f);
    outputs.push_back(name);
  }

  void write_json(const std::string& name, const ordered_json& j) {
    write(name, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
  }

  double threshold(const std::string& key) const {
    auto t = settings.number(key, kDefaultThreshold);
    if (!(t > 0.0 && t <= 1.0)) throw CommandError(kFailure, "--" + key + " must lie in (0, 1]");
    return t;
  }
};

template <typename Parse>
auto parse_file(const fs::path& p, Parse&& parse) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw CommandError(kMissingInput, "cannot open " + p.string());
  try {
    return parse(in);
  } catch (const InputError& e) {
    throw CommandError(kParseError, p.filename().string() + ": " + e.what());
  }
}

std::string stem_of(const fs::path& p) {
  auto name = p.filename().string();
  return name.substr(0, name.find('.'));
}

void warn_rejects(Context& ctx, const fs::path& file, const ParseStats& stats) {
  if (!stats.rejects.empty()) {
    ctx.err << "warning: " << file.filename().string() << ": " << stats.rejects.size() << " line(s) rejected (first at line "
            << stats.rejects.front().line << ": " << stats.rejects.front().reason << ")\n";
  }
}

RelationshipGraph load_graph(Context& ctx, GraphStats& gstats, ParseStats* pstats = nullptr) {
  auto file = ctx.settings.input("rels");
  auto rels = parse_file(file, [](std::istream& in) { return parse_relationships(in); });
  warn_rejects(ctx, file, rels.stats);
  if (pstats) *pstats = rels.stats;
  try {
    return RelationshipGraph::build(rels.edges, &gstats);
  } catch (const InputError& e) {
    throw CommandError(kParseError, e.what());
  }
}

CountryMap load_countries(Context& ctx) {
  CountryMap countries;
  if (auto file = ctx.settings.optional_input("countries")) {
    auto stats = parse_file(*file, [&](std::istream& in) { return parse_countries(in, countries); });
    warn_rejects(ctx, *file, stats);
  }
  if (auto file = ctx.settings.optional_input("censors")) {
    auto stats = parse_file(*file, [&](std::istream& in) { return parse_censors(in, countries); });
    warn_rejects(ctx, *file, stats);
  }
  return countries;
}

PathCorpus load_corpus(Context& ctx) {
  auto file = ctx.path("paths.txt");
  if (!fs::is_regular_file(file)) throw CommandError(kMissingInput, "paths file not found: " + file.string());
  auto parsed = parse_file(file, [](std::istream& in) { return parse_paths(in); });
  warn_rejects(ctx, file, parsed.stats);
  if (parsed.corpus.empty()) throw CommandError(kEmptyCorpus, "path corpus is empty: " + file.string());
  return std::move(parsed.corpus);
}

int cmd_infer(Context& ctx) {
  auto rib_file = ctx.settings.input("rib");
  auto prefixes_file = ctx.settings.input("prefixes");
  GraphStats gstats;
  ParseStats rel_stats;
  auto graph = load_graph(ctx, gstats, &rel_stats);
  auto rib = parse_file(rib_file, [&](std::istream& in) { return parse_rib(in, stem_of(rib_file)); });
  warn_rejects(ctx, rib_file, rib.stats);
  auto prefixes = parse_file(prefixes_file, [](std::istream& in) { return parse_prefix_list(in); });
  warn_rejects(ctx, prefixes_file, prefixes.stats);

  auto corpus = build_corpus(prefixes.targets, rib.entries, graph);
  for (const auto& w : corpus.warnings) ctx.err << "warning: " << w << '\n';

  std::size_t violations = 0;
  for (const auto& s : corpus.slices) {
    for (const auto& [origin, p] : s.paths) {
      if (!is_valley_free(p.hops, graph) || !is_loop_free(p.hops)) ++violations;
    }
  }

  ctx.write("paths.txt", [&](std::ostream& o) { write_paths(o, corpus); });
  auto stats = inference_stats_json(corpus);
  stats["valley_free_violations"] = violations;
  stats["graph"] = {{"vertices", graph.vertex_count()},
                    {"edges", graph.edge_count()},
                    {"p2c", graph.p2c_count()},
                    {"p2p", graph.p2p_count()},
                    {"self_edges_rejected", gstats.self_edges_rejected},
                    {"duplicate_edges", gstats.duplicate_edges}};
  stats["rib"] = to_json(rib.stats);
  stats["relationships"] = to_json(rel_stats);
  stats["prefix_list"] = to_json(prefixes.stats);
  ctx.write_json("infer_stats.json", stats);

  ctx.out << "infer: " << corpus.slices.size() << " prefixes, " << corpus.path_count() << " paths over "
          << graph.vertex_count() << " ASes\n";
  return violations == 0 ? kOk : kFailure;
}

int cmd_place(Context& ctx) {
  auto threshold = ctx.threshold("threshold-as");
  auto countries = load_countries(ctx);
  auto corpus = load_corpus(ctx);
  PathIndex index(corpus);
  auto table = rank_ases(index);
  auto report = find_key_ases(table, index, threshold, countries);
  std::vector<Asn> selected;
  for (const auto& s : report.selected) selected.push_back(s.asn);
  auto coverage = coverage_of(selected, index, countries);
  auto top_n = ctx.settings.count("top-n", 50);
  auto cdf = cdf_series(table, index, std::max<std::uint64_t>(1, top_n));

  ctx.write_json("placement.json", to_json(report, coverage));
  ctx.write("ranking.csv", [&](std::ostream& o) { write_ranking_csv(o, table, countries); });
  ctx.write("cdf.csv", [&](std::ostream& o) { write_cdf_csv(o, cdf); });
  ctx.write("coverage_by_country.csv", [&](std::ostream& o) { write_country_coverage_csv(o, coverage); });

  ctx.out << "place: " << report.selected.size() << " key ASes cover " << format_fraction(report.coverage)
          << " of " << report.total_paths << " paths";
  if (!report.threshold_reached) ctx.out << " (threshold unreachable)";
  ctx.out << ", " << report.excluded_censor.size() << " censor-country ASes skipped\n";
  return kOk;
}

std::vector<Asn> router_targets(Context& ctx) {
  std::vector<Asn> targets;
  std::vector<std::string> tokens = ctx.asn_flags;
  if (tokens.empty()) {
    if (auto v = ctx.settings.get("asn")) {
      std::string s = *v;
      std::replace(s.begin(), s.end(), ',', ' ');
      std::istringstream ss(s);
      for (std::string t; ss >> t;) tokens.push_back(t);
    }
  }
  for (const auto& t : tokens) {
    auto a = parse_asn(t);
    if (!a) throw CommandError(kFailure, "--asn expects AS numbers, got '" + t + "'");
    targets.push_back(*a);
  }
  if (!targets.empty()) return targets;

  auto placement = ctx.path("placement.json");
  if (!fs::is_regular_file(placement)) {
    throw CommandError(kMissingInput, "no --asn given and no placement.json in " + ctx.out_dir.string());
  }
  auto j = json::parse(slurp(placement));
  for (const auto& s : j.at("selected")) targets.push_back(Asn{s.at("asn").get<std::uint32_t>()});
  return targets;
}

int cmd_routers(Context& ctx) {
  auto threshold = ctx.threshold("threshold-router");
  auto traces_file = ctx.settings.input("traces");
  auto aliases_file = ctx.settings.input("aliases");
  auto p2a_file = ctx.settings.input("p2a");
  auto countries = load_countries(ctx);
  auto targets = router_targets(ctx);

  auto traces = parse_file(traces_file, [](std::istream& in) { return parse_traces(in); });
  warn_rejects(ctx, traces_file, traces.stats);
  auto aliases = parse_file(aliases_file, [](std::istream& in) { return parse_alias_map(in); });
  auto p2a = parse_file(p2a_file, [](std::istream& in) { return parse_prefix_to_as(in); });
  warn_rejects(ctx, p2a_file, p2a.stats);

  std::vector<AttributedTrace> attributed;
  attributed.reserve(traces.traces.size());
  for (const auto& t : traces.traces) attributed.push_back(attribute(t, p2a.map));

  std::vector<RouterPlacement> placements;
  auto per_as = ordered_json::array();
  int status = kOk;
  for (auto asn : targets) {
    std::vector<TrimmedTrace> trimmed;
    for (const auto& a : attributed) {
      if (auto t = trim_trace(a, asn)) trimmed.push_back(std::move(*t));
    }
    if (trimmed.empty()) {
      ctx.err << "error: no traces touch AS" << asn.str() << '\n';
      status = kNoTraces;
      continue;
    }
    auto census = classify_routers(asn, trimmed, aliases);
    auto placement = find_key_routers(census, threshold);
    ctx.write("routers_" + asn.str() + ".csv", [&](std::ostream& o) { write_routers_csv(o, census, placement); });
    auto j = to_json(placement);
    j["third_party_hops"] = census.third_party_hops;
    j["country"] = countries.country_label(asn);
    per_as.push_back(std::move(j));
    placements.push_back(std::move(placement));
  }
  if (placements.empty()) return status;

  auto rollup = placement_rollup(placements, countries);
  auto unit_cost = ctx.settings.count("unit-cost", kDefaultRouterCostUsd);
  ordered_json j;
  j["ases"] = std::move(per_as);
  j["total_required"] = rollup.total_required;
  j["by_country"] = rollup.by_country;
  j["unit_cost_usd"] = unit_cost;
  j["cost_usd"] = cost_estimate(rollup.total_required, unit_cost);
  ctx.write_json("placement_rollup.json", j);

  ctx.out << "routers: " << placements.size() << " ASes, " << rollup.total_required << " decoy routers required\n";
  return status;
}

int cmd_analyze(Context& ctx) {
  GraphStats gstats;
  auto graph = load_graph(ctx, gstats);
  ctx.settings.input("countries");
  auto countries = load_countries(ctx);
  auto corpus = load_corpus(ctx);
  PathIndex index(corpus);
  auto table = rank_ases(index);
  int status = kOk;

  std::vector<CollateralReport> collateral;
  for (const auto& cc : countries.censors()) {
    try {
      collateral.push_back(collateral_damage(index, countries, cc));
    } catch (const UsageError& e) {
      ctx.err << "error: collateral damage for " << cc << ": " << e.what() << '\n';
      status = kFailure;
    }
  }
  ctx.write("collateral.csv", [&](std::ostream& o) { write_collateral_csv(o, collateral); });

  std::vector<ConeBypassRow> bypass;
  auto top_n = ctx.settings.count("top-n", 10);
  for (const auto& r : table.rows) {
    if (bypass.size() >= top_n) break;
    if (graph.contains(r.asn)) bypass.push_back(cone_bypass(index, graph, r.asn));
  }
  ctx.write("cone_bypass.csv", [&](std::ostream& o) { write_cone_bypass_csv(o, bypass); });

  auto comparison = compare_frequency_and_cone(table, graph);
  if (!comparison.spearman) {
    ctx.err << "error: frequency/cone Spearman correlation is undefined for this corpus\n";
    status = kFailure;
  }
  ctx.write_json("spearman.json", to_json(comparison));

  std::optional<std::uint64_t> routers;
  if (ctx.settings.get("router-total")) {
    routers = ctx.settings.count("router-total", 0);
  } else if (auto rollup = ctx.path("placement_rollup.json"); fs::is_regular_file(rollup)) {
    routers = json::parse(slurp(rollup)).at("total_required").get<std::uint64_t>();
  }
  auto unit_cost = ctx.settings.count("unit-cost", kDefaultRouterCostUsd);
  ordered_json cost{{"unit_cost_usd", unit_cost}};
  if (routers) {
    cost["router_total"] = *routers;
    cost["cost_usd"] = cost_estimate(*routers, unit_cost);
    ctx.out << "analyze: cost estimate " << cost_estimate(*routers, unit_cost) << " USD for " << *routers
            << " routers\n";
  } else {
    cost["router_total"] = nullptr;
    cost["cost_usd"] = nullptr;
    ctx.err << "warning: no router total (run `routers` or pass --router-total); cost left undefined\n";
  }
  ctx.write_json("cost.json", cost);
  ctx.out << "analyze: " << collateral.size() << " censor countries, " << bypass.size() << " cone-bypass rows\n";
  return status;
}

int cmd_synth(Context& ctx) {
  SynthConfig cfg;
  cfg.seed = ctx.settings.count("seed", cfg.seed);
  cfg.ases = ctx.settings.count("synth-ases", cfg.ases);
  cfg.prefixes = ctx.settings.count("synth-prefixes", cfg.prefixes);
  cfg.traces = ctx.settings.count("synth-traces", cfg.traces);
  cfg.vantages = ctx.settings.count("synth-vantages", cfg.vantages);
  auto bundle = generate_bundle(cfg);
  write_bundle(bundle, ctx.out_dir);
  for (const char* suffix : {".rels.txt", ".rib.txt", ".prefixes.txt", ".countries.txt", ".censors.txt", ".traces.txt",
                             ".aliases.txt", ".p2a.txt"}) {
    ctx.outputs.push_back(std::string("synth") + suffix);
  }
  ctx.out << "synth: " << cfg.ases << " ASes, " << bundle.edges.size() << " links, " << bundle.rib.size()
          << " RIB entries, " << bundle.traces.size() << " traces in " << ctx.out_dir.string() << '\n';
  return kOk;
}

int cmd_report(Context& ctx) {
  auto load = [&](const std::string& name) -> std::optional<json> {
    auto p = ctx.path(name);
    if (!fs::is_regular_file(p)) return std::nullopt;
    return json::parse(slurp(p));
  };
  ordered_json summary;
  bool any = false;
  if (auto j = load("infer_stats.json")) {
    any = true;
    summary["inference"] = {{"prefixes", j->at("prefixes").size()},
                            {"total_paths", j->at("total_paths")},
                            {"valley_free_violations", j->at("valley_free_violations")}};
  }
  if (auto j = load("placement.json")) {
    any = true;
    summary["placement"] = {{"key_ases", j->at("selected").size()},
                            {"coverage", j->at("coverage")},
                            {"threshold", j->at("threshold")},
                            {"threshold_reached", j->at("threshold_reached")},
                            {"censor_ases_excluded", j->at("excluded_censor").size()}};
  }
  if (auto j = load("placement_rollup.json")) {
    any = true;
    summary["routers"] = {{"ases", j->at("ases").size()},
                          {"total_required", j->at("total_required")},
                          {"cost_usd", j->at("cost_usd")}};
  }
  if (auto j = load("spearman.json")) {
    any = true;
    summary["frequency_vs_cone_spearman"] = j->at("spearman");
  }
  if (auto j = load("cost.json")) {
    any = true;
    summary["cost"] = *j;
  }
  if (!any) throw CommandError(kMissingInput, "nothing to report in " + ctx.out_dir.string());
  ctx.write_json("summary.json", summary);
  ctx.out << summary.dump(2) << '\n';
  return kOk;
}

void record_manifest(Context& ctx, const std::string& command) {
  ordered_json settings = ordered_json::object();
  for (const auto& key : ctx.settings.keys()) {
    if (key == "out" || key == "config") continue;
    auto v = ctx.settings.get(key);
    if (!v) continue;
    if (kFileKeys.contains(key)) {
      fs::path p(*v);
      settings[key] = {{"file", p.filename().string()}, {"fnv1a64", hex64(fnv1a64(slurp(p)))}};
    } else {
      settings[key] = *v;
    }
  }
  if (!ctx.asn_flags.empty()) settings["asn"] = ctx.asn_flags;

  auto manifest_path = ctx.path("manifest.json");
  json manifest = json::object();
  if (fs::is_regular_file(manifest_path)) {
    try {
      manifest = json::parse(slurp(manifest_path));
    } catch (const json::exception&) {
      manifest = json::object();
    }
  }
  auto outputs = ctx.outputs;
  std::sort(outputs.begin(), outputs.end());
  manifest["commands"][command] = {{"config_hash", hex64(fnv1a64(settings.dump()))},
                                   {"settings", settings},
                                   {"outputs", outputs}};
  fs::create_directories(ctx.out_dir);
  std::ofstream f(manifest_path, std::ios::binary);
  f << manifest.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decoy-router placement toolkit: AS path inference, key AS and router selection, analyses"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Settings settings;
  settings.bind(app, "rib", "BGP RIB dump (PREFIX|AS PATH[|VANTAGE])");
  settings.bind(app, "rels", "AS relationships (ASN|ASN|-1 or 0)");
  settings.bind(app, "prefixes", "target prefixes (PREFIX[|label])");
  settings.bind(app, "countries", "AS to country map (ASN|CC)");
  settings.bind(app, "censors", "censor country codes, one per line");
  settings.bind(app, "traces", "traceroute corpus (SRC|DST|hop,hop,...)");
  settings.bind(app, "aliases", "router alias sets, one router per line");
  settings.bind(app, "p2a", "prefix to AS attribution (PREFIX|ASN)");
  settings.bind(app, "threshold-as", "path coverage threshold for key ASes (default 0.9)");
  settings.bind(app, "threshold-router", "trace coverage threshold for key routers (default 0.9)");
  settings.bind(app, "unit-cost", "cost per decoy router in USD (default 885000)");
  settings.bind(app, "router-total", "router count for the cost estimate (default: from placement_rollup.json)");
  settings.bind(app, "top-n", "rows in cdf.csv (place) or cone_bypass.csv (analyze)");
  settings.bind(app, "seed", "seed for synth (default 1)");
  settings.bind(app, "synth-ases", "synth: number of ASes (default 200)");
  settings.bind(app, "synth-prefixes", "synth: number of target prefixes (default 10)");
  settings.bind(app, "synth-traces", "synth: number of traceroutes (default 10000)");
  settings.bind(app, "synth-vantages", "synth: RIB vantage points per prefix (default 15)");
  settings.bind(app, "out", "run directory for all outputs (default ./run)");
  settings.bind(app, "config", "key=value config file; flags override it");
  std::vector<std::string> asn_flags;
  settings.allow_config_key("asn");
  app.add_option("--asn", asn_flags, "AS to map at router level (repeatable; default: placement.json selection)");

  app.add_subcommand("infer", "infer AS paths to every target prefix");
  app.add_subcommand("place", "rank ASes and select key ASes");
  app.add_subcommand("routers", "select key routers inside ASes");
  app.add_subcommand("analyze", "collateral damage, cone bypass, Spearman, cost");
  app.add_subcommand("synth", "generate a synthetic input bundle");
  app.add_subcommand("report", "aggregate run outputs into summary.json");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    auto code = app.exit(e, out, err);
    return code == 0 ? kOk : kFailure;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (auto cfg = settings.get("config")) settings.load_config(*cfg);
    Context ctx{settings, asn_flags, settings.get("out").value_or("run"), out, err, {}};
    int status = kFailure;
    if (command == "infer") status = cmd_infer(ctx);
    else if (command == "place") status = cmd_place(ctx);
    else if (command == "routers") status = cmd_routers(ctx);
    else if (command == "analyze") status = cmd_analyze(ctx);
    else if (command == "synth") status = cmd_synth(ctx);
    else if (command == "report") status = cmd_report(ctx);
    if (!ctx.outputs.empty()) record_manifest(ctx, command);
    return status;
  } catch (const CommandError& e) {
    err << "error: " << e.what() << '\n';
    return e.code();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace decoyplace::cli
