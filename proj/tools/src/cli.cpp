#include "multichrome/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "multichrome/analytic.hpp"
#include "multichrome/diffusion.hpp"
#include "multichrome/ensemble.hpp"
#include "multichrome/error.hpp"
#include "multichrome/generators.hpp"
#include "multichrome/graph.hpp"
#include "multichrome/io.hpp"
#include "multichrome/json_io.hpp"
#include "multichrome/multiplex.hpp"
#include "multichrome/profile.hpp"
#include "multichrome/rng.hpp"
#include "multichrome/sweep.hpp"

#ifndef MULTICHROME_VERSION
#define MULTICHROME_VERSION "0.0.0"
#endif

namespace multichrome::cli {
namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

// Everything a subcommand needs to leave a reproducible trail.
struct run_record {
  std::string subcommand;
  std::vector<std::string> args;  // argv without --out
  fs::path out;
  json config = json::object();
  json inputs = json::array();

  std::string read_input(const fs::path& path) {
    auto text = read_text_file(path);
    std::ostringstream hash;
    hash << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(text);
    inputs.push_back({{"path", path.string()}, {"fnv1a64", hash.str()}});
    return text;
  }

  void write(const std::string& name, const std::string& text) const { write_text_file(out / name, text); }

  void write_manifest() const {
    const json manifest = {{"tool", "multichrome"},
                           {"version", MULTICHROME_VERSION},
                           {"subcommand", subcommand},
                           {"argv", args},
                           {"config", config},
                           {"inputs", inputs}};
    write("manifest.json", manifest.dump(2) + "\n");
  }
};

template <class Writer>
std::string to_text(Writer&& writer) {
  std::ostringstream s;
  writer(s);
  return s.str();
}

struct sim_options {
  int steps = 400;
  double tau = 0.005;
  double p = 0.01;
  std::string mode = "infected_only";
  std::uint64_t seed = 0;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--steps", steps, "time steps T")->capture_default_str();
    cmd.add_option("--tau", tau, "dormancy rate")->capture_default_str();
    cmd.add_option("--p", p, "diffusion scale")->capture_default_str();
    cmd.add_option("--mode", mode, "dormancy mode: infected_only or all_nodes")->capture_default_str();
    cmd.add_option("--seed", seed, "master seed")->capture_default_str();
  }

  sim_params params() const {
    sim_params sp;
    sp.steps = steps;
    sp.dormancy_rate = tau;
    sp.diffusion_scale = p;
    sp.mode = parse_dormancy_mode(mode);
    sp.seed = seed;
    sp.validate();
    return sp;
  }
};

json params_config(const sim_params& sp) {
  return {{"steps", sp.steps},
          {"tau", sp.dormancy_rate},
          {"p", sp.diffusion_scale},
          {"mode", to_string(sp.mode)},
          {"seed", sp.seed}};
}

network_file load_inputs(run_record& rec, const fs::path& edges, const std::optional<fs::path>& labels,
                         bool directed) {
  rec.read_input(edges);
  if (labels) rec.read_input(*labels);
  return load_network(edges, labels, directed);
}

// ---- generate -------------------------------------------------------------

struct generate_options {
  std::string kind;
  std::optional<fs::path> spec_file;
  std::string id;
  std::uint64_t seed = 0;
  std::map<std::string, double> reals;
  std::map<std::string, std::int64_t> ints;
  std::vector<std::int64_t> audience;
  std::vector<std::int64_t> converts;
  std::string links = "ring";
  std::map<std::string, CLI::Option*> flags;
};

void add_generate_flags(CLI::App& cmd, generate_options& o) {
  cmd.add_option("--kind", o.kind,
                 "dense_frontier, fragmented_frontier, broadcaster_star, erdos_renyi or barabasi_albert");
  cmd.add_option("--spec", o.spec_file, "JSON spec file instead of flags");
  cmd.add_option("--id", o.id, "network id (defaults to the kind)");
  cmd.add_option("--seed", o.seed, "generator seed")->capture_default_str();
  for (const char* name : {"intra-a", "intra-b", "inter", "both-fraction", "intra-satellite", "link-probability",
                           "edge-probability", "a-fraction"})
    o.flags[name] = cmd.add_option(std::string("--") + name, o.reals[name]);
  for (const char* name : {"a-size", "b-size", "satellites", "satellite-size", "bridges", "satellite-seeds", "n",
                           "attach"})
    o.flags[name] = cmd.add_option(std::string("--") + name, o.ints[name]);
  o.flags["audience"] = cmd.add_option("--audience", o.audience, "audience sizes")->delimiter(',');
  o.flags["converts"] = cmd.add_option("--converts", o.converts, "initial converts per audience")->delimiter(',');
  o.flags["links"] = cmd.add_option("--links", o.links, "ring, path or random");
}

generator_spec spec_from_flags(const generate_options& o) {
  std::set<std::string> used;
  auto real = [&](const char* name, double& field) {
    if (o.flags.at(name)->count()) field = o.reals.at(name);
    used.insert(name);
  };
  auto integer = [&](const char* name, node_t& field) {
    if (o.flags.at(name)->count()) {
      const auto v = o.ints.at(name);
      if (v < 0 || v > INT32_MAX) throw validation_error("--" + std::string(name) + " out of range");
      field = static_cast<node_t>(v);
    }
    used.insert(name);
  };

  generator_params params;
  if (o.kind == "dense_frontier") {
    dense_frontier_spec s;
    integer("a-size", s.a_size);
    integer("b-size", s.b_size);
    real("intra-a", s.intra_a);
    real("intra-b", s.intra_b);
    real("inter", s.inter);
    real("both-fraction", s.both_fraction);
    params = s;
  } else if (o.kind == "fragmented_frontier") {
    fragmented_frontier_spec s;
    integer("a-size", s.a_size);
    real("intra-a", s.intra_a);
    integer("satellites", s.satellites);
    integer("satellite-size", s.satellite_size);
    real("intra-satellite", s.intra_satellite);
    integer("bridges", s.bridges);
    integer("satellite-seeds", s.satellite_seeds);
    params = s;
  } else if (o.kind == "broadcaster_star") {
    broadcaster_star_spec s;
    for (auto v : o.audience) s.audience.push_back(static_cast<node_t>(v));
    for (auto v : o.converts) s.converts.push_back(static_cast<node_t>(v));
    if (s.converts.empty()) s.converts.assign(s.audience.size(), 0);
    s.links = parse_weak_links(o.links);
    real("link-probability", s.link_probability);
    used.insert({"audience", "converts", "links"});
    params = s;
  } else if (o.kind == "erdos_renyi") {
    erdos_renyi_spec s;
    integer("n", s.n);
    real("edge-probability", s.p);
    real("a-fraction", s.a_fraction);
    params = s;
  } else if (o.kind == "barabasi_albert") {
    barabasi_albert_spec s;
    integer("n", s.n);
    integer("attach", s.attach);
    real("a-fraction", s.a_fraction);
    params = s;
  } else {
    throw validation_error("unknown generator kind '" + o.kind + "'");
  }
  for (const auto& [name, opt] : o.flags)
    if (opt->count() && !used.count(name))
      throw validation_error("--" + name + " does not apply to " + o.kind);
  return {o.id.empty() ? o.kind : o.id, params, o.seed};
}

void run_generate(run_record& rec, const generate_options& o) {
  generator_spec spec;
  if (o.spec_file) {
    for (const auto& [name, opt] : o.flags)
      if (opt->count()) throw validation_error("--" + name + " cannot be combined with --spec");
    spec = parse_generator_spec(rec.read_input(*o.spec_file));
  } else {
    if (o.kind.empty()) throw validation_error("either --kind or --spec is required");
    spec = spec_from_flags(o);
  }
  validate(spec);
  const auto net = generate(spec);
  rec.config = {{"spec", json::parse(generator_specs_json({spec}))[0]}};
  rec.write("edges.txt", to_text([&](std::ostream& s) { write_edge_list(s, net.g); }));
  rec.write("labels.csv", to_text([&](std::ostream& s) { write_labels_csv(s, net.labels); }));
  rec.write("spec.json", generator_specs_json({spec}));
}

// ---- simulate -------------------------------------------------------------

struct simulate_options {
  fs::path edges;
  fs::path labels;
  std::optional<fs::path> seeds;
  bool directed = false;
  int replicates = 1;
  unsigned threads = 0;
  sim_options sim;
};

void run_simulate(run_record& rec, const simulate_options& o) {
  const auto sp = o.sim.params();
  if (o.replicates < 1) throw validation_error("--replicates must be >= 1");
  const auto net = load_inputs(rec, o.edges, o.labels, o.directed);
  std::optional<std::vector<node_t>> seeds;
  if (o.seeds) {
    std::istringstream in(rec.read_input(*o.seeds));
    seeds.emplace();
    for (auto id : parse_node_list(in)) seeds->push_back(net.dense_id(id));
  }
  const auto runs = seeds ? run_replicates(net.g, net.labels, sp, o.replicates, o.threads, *seeds)
                          : run_replicates(net.g, net.labels, sp, o.replicates, o.threads);

  rec.config = {{"edges", o.edges.string()},
                {"labels", o.labels.string()},
                {"seeds", o.seeds ? json(o.seeds->string()) : json(nullptr)},
                {"directed", o.directed},
                {"replicates", o.replicates},
                {"params", params_config(sp)}};
  const int width = std::max<int>(4, static_cast<int>(std::to_string(o.replicates - 1).size()));
  for (std::size_t r = 0; r < runs.size(); ++r) {
    std::ostringstream name;
    name << "trace_" << std::setw(width) << std::setfill('0') << r << ".csv";
    rec.write(name.str(), to_text([&](std::ostream& s) { write_trace_csv(s, runs[r]); }));
  }
  rec.write("summary.json", summary_json(runs, sp));
  rec.write("id_map.csv", to_text([&](std::ostream& s) { write_id_map(s, net.original_ids); }));
}

// ---- sweep ----------------------------------------------------------------

struct sweep_options {
  std::optional<fs::path> specs;
  std::string ensemble;
  std::size_t count = 100;
  int replicates = 100;
  unsigned threads = 0;
  sim_options sim;
};

void run_sweep_command(run_record& rec, const sweep_options& o) {
  const auto sp = o.sim.params();
  if (o.replicates < 1) throw validation_error("--replicates must be >= 1");
  std::vector<generator_spec> specs;
  if (o.specs && !o.ensemble.empty()) throw validation_error("--specs and --ensemble are exclusive");
  if (o.specs) {
    specs = parse_generator_specs(rec.read_input(*o.specs));
  } else if (o.ensemble == "mixed") {
    specs = mixed_ensemble(o.count, o.sim.seed);
  } else if (o.ensemble == "community") {
    specs = community_ensemble(o.count, o.sim.seed);
  } else {
    throw validation_error(o.ensemble.empty() ? "either --specs or --ensemble is required"
                                              : "unknown ensemble '" + o.ensemble + "'");
  }
  for (const auto& s : specs) validate(s);

  const auto records = run_sweep(specs, sp, o.replicates, o.threads);
  rec.config = {{"specs", o.specs ? json(o.specs->string()) : json(nullptr)},
                {"ensemble", o.ensemble.empty() ? json(nullptr) : json(o.ensemble)},
                {"count", specs.size()},
                {"replicates", o.replicates},
                {"params", params_config(sp)}};
  rec.write("specs.json", generator_specs_json(specs));
  rec.write("sweep.csv", to_text([&](std::ostream& s) { write_sweep_csv(s, records); }));
  rec.write("correlations.json", correlations_json(correlate(records), records.size()));
}

// ---- capacity -------------------------------------------------------------

void run_capacity(run_record& rec, const fs::path& model_path, std::ostream& out) {
  const auto model = parse_audience_model(rec.read_input(model_path));
  model.validate();
  const auto text = capacity_json(model);
  rec.config = {{"model", model_path.string()}};
  rec.write("capacity.json", text);

  const auto v = carrying_capacities(model);
  out << "broadcaster,n,m,V,y\n";
  for (std::size_t i = 0; i < model.k(); ++i)
    out << i << ',' << model.broadcasters[i].audience << ',' << model.broadcasters[i].converts << ','
        << format_double(v[i]) << ',' << format_double(expected_yield_connected(i, model)) << '\n';
  if (model.k() > 0) out << "selected," << select_broadcaster(model, regime::connected) << '\n';
}

// ---- profile --------------------------------------------------------------

struct profile_options {
  fs::path profiles;
  std::optional<fs::path> slant;
  std::vector<std::string> topics;
  std::optional<fs::path> retweets;
  std::optional<fs::path> groups;
  std::optional<node_t> pivots;
  std::uint64_t seed = 0;
};

void run_profile(run_record& rec, const profile_options& o) {
  std::vector<user_profile> users;
  {
    std::istringstream in(rec.read_input(o.profiles));
    users = parse_profiles_jsonl(in);
  }
  if (o.slant) {
    std::istringstream in(rec.read_input(*o.slant));
    const auto table = parse_slant_csv(in);
    for (auto& u : users)
      if (auto shares = shares_from_domains(u.domain_counts, table)) u.shares = *shares;
  }
  rec.write("scores.csv", to_text([&](std::ostream& s) { write_scores_csv(s, users); }));

  std::vector<user_profile> humans;
  std::set<std::string> bots;
  for (const auto& u : users) {
    if (is_bot(u.botscore))
      bots.insert(u.user_id);
    else
      humans.push_back(u);
  }

  std::vector<std::string> whitelist = o.topics;
  if (whitelist.empty()) {
    std::set<std::string> seen(whitelist.begin(), whitelist.end());
    for (const auto& u : humans)
      for (const auto& t : u.topic_sequence) seen.insert(t);
    whitelist.assign(seen.begin(), seen.end());
  }
  json config = {{"profiles", o.profiles.string()},
                 {"slant", o.slant ? json(o.slant->string()) : json(nullptr)},
                 {"topics", whitelist},
                 {"bots_excluded", bots.size()}};
  if (!whitelist.empty()) {
    const auto tm = transition_matrix(humans, whitelist);
    rec.write("transitions.csv", to_text([&](std::ostream& s) { write_transitions_csv(s, tm, true); }));
    rec.write("transition_counts.csv", to_text([&](std::ostream& s) { write_transitions_csv(s, tm, false); }));
  }

  if (o.retweets) {
    if (!o.groups) throw validation_error("--retweets needs --groups");
    const auto net = load_inputs(rec, *o.retweets, std::nullopt, true);
    std::istringstream in(rec.read_input(*o.groups));
    std::vector<std::optional<user_group>> group_of(static_cast<std::size_t>(net.g.node_count()));
    for (const auto& [id, group] : parse_groups_csv(in)) {
      const auto it = std::lower_bound(net.original_ids.begin(), net.original_ids.end(), id);
      if (it == net.original_ids.end() || *it != id) continue;  // not in the retweet graph
      if (!bots.count(std::to_string(id))) group_of[it - net.original_ids.begin()] = group;
    }
    const auto report = group_centrality_report(net.g, group_of, o.pivots, o.seed);
    rec.write("centrality.json", group_centrality_json(report));
    config["retweets"] = o.retweets->string();
    config["groups"] = o.groups->string();
    config["pivots"] = o.pivots ? json(*o.pivots) : json(nullptr);
    config["seed"] = o.seed;
  }
  rec.config = config;
}

// ---- analyze --------------------------------------------------------------

struct analyze_options {
  fs::path edges;
  fs::path labels;
  bool directed = false;
  std::string name;
  bool centrality = false;
  std::optional<node_t> pivots;
  std::uint64_t seed = 0;
};

void run_analyze(run_record& rec, const analyze_options& o) {
  const auto net = load_inputs(rec, o.edges, o.labels, o.directed);
  const auto report = frontier(net.g, net.labels);
  const std::string name = o.name.empty() ? o.edges.stem().string() : o.name;
  rec.write("frontier.json", frontier_json(report, net.original_ids));
  rec.write("frontier_table.md",
            format_frontier_table({{name, report.frontier_size, report.total_network_size}}));

  const auto arena = net.g.induced(domain_mask(net.labels));
  json stats = {{"node_count", net.g.node_count()},
                {"edge_count", net.g.edge_count()},
                {"directed", net.g.directed()},
                {"domain_size", arena.node_count()},
                {"viable_candidates", viable_candidates(net.labels).size()},
                {"component_count", connected_components(arena).count}};
  stats["density"] = arena.node_count() >= 2 ? json(density(arena)) : json(nullptr);
  rec.write("network.json", stats.dump(2) + "\n");
  rec.write("id_map.csv", to_text([&](std::ostream& s) { write_id_map(s, net.original_ids); }));

  if (o.centrality) {
    const auto c = centrality(net.g, o.pivots, o.seed);
    rec.write("centrality.csv", to_text([&](std::ostream& s) {
                s << "node,betweenness,core_number,in_degree,out_degree\n";
                for (node_t v = 0; v < net.g.node_count(); ++v)
                  s << net.original_ids[v] << ',' << format_double(c.betweenness[v]) << ',' << c.core_number[v]
                    << ',' << c.in_degree[v] << ',' << c.out_degree[v] << '\n';
              }));
  }
  rec.config = {{"edges", o.edges.string()},
                {"labels", o.labels.string()},
                {"directed", o.directed},
                {"name", name},
                {"centrality", o.centrality},
                {"pivots", o.pivots ? json(*o.pivots) : json(nullptr)},
                {"seed", o.seed}};
}

// ---- rerun ----------------------------------------------------------------

std::vector<std::string> replay_args(const fs::path& manifest_path, const std::optional<unsigned>& threads) {
  const auto manifest = json::parse(read_text_file(manifest_path), nullptr, false);
  if (manifest.is_discarded() || !manifest.is_object() || !manifest.contains("argv"))
    throw validation_error("'" + manifest_path.string() + "' is not a manifest");
  if (manifest.value("version", "") != MULTICHROME_VERSION)
    throw validation_error("manifest was written by version " + manifest.value("version", "?") +
                           ", this is " + MULTICHROME_VERSION);
  for (const auto& input : manifest.at("inputs")) {
    const fs::path path = input.at("path").get<std::string>();
    std::ostringstream hash;
    hash << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(read_text_file(path));
    if (hash.str() != input.at("fnv1a64").get<std::string>())
      throw validation_error("input '" + path.string() + "' changed since the manifest was written");
  }
  auto args = manifest.at("argv").get<std::vector<std::string>>();
  if (threads) {
    args.push_back("--threads");
    args.push_back(std::to_string(*threads));
  }
  return args;
}

// Splits off `--out DIR` / `--out=DIR` so the manifest records only what
// determines the outputs.
std::vector<std::string> without_out(const std::vector<std::string>& args) {
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--out") {
      ++i;
      continue;
    }
    if (args[i].rfind("--out=", 0) == 0) continue;
    kept.push_back(args[i]);
  }
  return kept;
}

// Also strips --threads: outputs never depend on it.
std::vector<std::string> reproducible_args(const std::vector<std::string>& args) {
  std::vector<std::string> kept;
  const auto no_out = without_out(args);
  for (std::size_t i = 0; i < no_out.size(); ++i) {
    if (no_out[i] == "--threads") {
      ++i;
      continue;
    }
    if (no_out[i].rfind("--threads=", 0) == 0) continue;
    kept.push_back(no_out[i]);
  }
  return kept;
}

void report(std::ostream& err, const std::string& kind, const std::string& message, int code,
            std::optional<std::size_t> line = std::nullopt) {
  json j = {{"error", kind}, {"message", message}, {"exit_code", code}};
  if (line) j["line"] = *line;
  err << j.dump() << '\n';
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const file_error& e) {
    report(err, "missing_file", e.what(), missing_file);
    return missing_file;
  } catch (const parse_error& e) {
    report(err, "parse", e.what(), invalid_input, e.line() ? std::optional(e.line()) : std::nullopt);
    return invalid_input;
  } catch (const validation_error& e) {
    report(err, "validation", e.what(), invalid_input);
    return invalid_input;
  } catch (const domain_error& e) {
    report(err, "domain", e.what(), invalid_input);
    return invalid_input;
  } catch (const std::exception& e) {
    report(err, "internal", e.what(), failure);
    return failure;
  }
}

namespace {

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiplex contagion simulator and intervention-targeting toolkit", "multichrome"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(MULTICHROME_VERSION));

  run_record rec;
  unsigned threads = 0;
  auto add_common = [&](CLI::App* cmd, bool with_threads) {
    cmd->add_option("--out", rec.out, "output directory")->required();
    if (with_threads) cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
  };

  generate_options gen;
  auto* generate_cmd = app.add_subcommand("generate", "generate a synthetic multiplex network");
  add_generate_flags(*generate_cmd, gen);
  add_common(generate_cmd, false);

  simulate_options sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "run the diffusion model on a network");
  simulate_cmd->add_option("--edges", sim.edges, "edge list")->required();
  simulate_cmd->add_option("--labels", sim.labels, "label CSV (node,is_A,is_B)")->required();
  simulate_cmd->add_option("--seeds", sim.seeds, "node ids to seed instead of the A set");
  simulate_cmd->add_flag("--directed", sim.directed, "edges are directed");
  simulate_cmd->add_option("--replicates", sim.replicates)->capture_default_str();
  sim.sim.add_to(*simulate_cmd);
  add_common(simulate_cmd, true);

  sweep_options sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "yield against topology over an ensemble of networks");
  sweep_cmd->add_option("--specs", sw.specs, "JSON array of generator specs");
  sweep_cmd->add_option("--ensemble", sw.ensemble, "built-in ensemble: mixed or community");
  sweep_cmd->add_option("--count", sw.count, "ensemble size")->capture_default_str();
  sweep_cmd->add_option("--replicates", sw.replicates)->capture_default_str();
  sw.sim.add_to(*sweep_cmd);
  add_common(sweep_cmd, true);

  fs::path model_path;
  auto* capacity_cmd = app.add_subcommand("capacity", "carrying capacities of a broadcaster-audience model");
  capacity_cmd->add_option("--model", model_path, "audience model JSON")->required();
  add_common(capacity_cmd, false);

  profile_options prof;
  auto* profile_cmd = app.add_subcommand("profile", "score users and summarize topic transitions");
  profile_cmd->add_option("--profiles", prof.profiles, "JSONL user profiles")->required();
  profile_cmd->add_option("--slant", prof.slant, "domain,slant CSV used to recompute media shares");
  profile_cmd->add_option("--topics", prof.topics, "topic whitelist")->delimiter(',');
  profile_cmd->add_option("--retweets", prof.retweets, "directed retweet edge list (a b: a retweets b)");
  profile_cmd->add_option("--groups", prof.groups, "node,group CSV for the retweet graph");
  profile_cmd->add_option("--pivots", prof.pivots, "sampled betweenness pivots");
  profile_cmd->add_option("--seed", prof.seed)->capture_default_str();
  add_common(profile_cmd, false);

  analyze_options an;
  auto* analyze_cmd = app.add_subcommand("analyze", "frontier and topology statistics of a network");
  analyze_cmd->add_option("--edges", an.edges, "edge list")->required();
  analyze_cmd->add_option("--labels", an.labels, "label CSV")->required();
  analyze_cmd->add_flag("--directed", an.directed);
  analyze_cmd->add_option("--name", an.name, "row label in frontier_table.md");
  analyze_cmd->add_flag("--centrality", an.centrality, "also write per-node centrality.csv");
  analyze_cmd->add_option("--pivots", an.pivots, "sampled betweenness pivots");
  analyze_cmd->add_option("--seed", an.seed)->capture_default_str();
  add_common(analyze_cmd, false);

  fs::path manifest_path;
  std::optional<unsigned> rerun_threads;
  fs::path rerun_out;
  auto* rerun_cmd = app.add_subcommand("rerun", "repeat the run recorded in a manifest");
  rerun_cmd->add_option("--manifest", manifest_path)->required();
  rerun_cmd->add_option("--out", rerun_out, "output directory")->required();
  rerun_cmd->add_option("--threads", rerun_threads);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::CallForVersion&) {
    out << MULTICHROME_VERSION << '\n';
    return ok;
  } catch (const CLI::ParseError& e) {
    report(err, "usage", e.what(), usage_error);
    return usage_error;
  }

  if (rerun_cmd->parsed()) {
    auto replay = replay_args(manifest_path, rerun_threads);
    replay.push_back("--out");
    replay.push_back(rerun_out.string());
    return dispatch(replay, out, err);
  }

  rec.args = reproducible_args(args);
  auto* chosen = app.get_subcommands().front();
  rec.subcommand = chosen->get_name();
  sim.threads = threads;
  sw.threads = threads;

  if (chosen == generate_cmd)
    run_generate(rec, gen);
  else if (chosen == simulate_cmd)
    run_simulate(rec, sim);
  else if (chosen == sweep_cmd)
    run_sweep_command(rec, sw);
  else if (chosen == capacity_cmd)
    run_capacity(rec, model_path, out);
  else if (chosen == profile_cmd)
    run_profile(rec, prof);
  else if (chosen == analyze_cmd)
    run_analyze(rec, an);
  rec.write_manifest();
  return ok;
}

}  // namespace
}  // namespace multichrome::cli
