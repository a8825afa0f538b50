#include "multichrome/json_io.hpp"

#include <istream>
#include <set>

#include "json.hpp"
#include "multichrome/error.hpp"

namespace multichrome {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, std::size_t line = 0) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what(), line);
  }
}

template <class T>
T field(const json& obj, const char* key) {
  if (!obj.contains(key)) throw validation_error(std::string("missing field '") + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw validation_error(std::string("field '") + key + "' has the wrong type");
  }
}

template <class T>
void maybe(const json& obj, const char* key, T& out) {
  if (obj.contains(key)) out = field<T>(obj, key);
}

void reject_unknown(const json& obj, std::initializer_list<const char*> known) {
  const std::set<std::string> allowed(known.begin(), known.end());
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) throw validation_error("unknown field '" + key + "'");
}

json params_json(const sim_params& p) {
  return {{"steps", p.steps},
          {"tau", p.dormancy_rate},
          {"p", p.diffusion_scale},
          {"dormancy_mode", std::string(to_string(p.mode))}};
}

json optional_number(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

}  // namespace

generator_spec parse_generator_spec(const std::string& text) {
  const json obj = parse_json(text);
  if (!obj.is_object()) throw validation_error("generator spec must be a JSON object");
  generator_spec spec;
  spec.id = obj.value("id", std::string());
  spec.seed = obj.value("seed", std::uint64_t{0});
  const auto kind = field<std::string>(obj, "kind");

  if (kind == "dense_frontier") {
    reject_unknown(obj, {"id", "kind", "seed", "a_size", "b_size", "intra_a", "intra_b", "inter", "both_fraction"});
    dense_frontier_spec s;
    maybe(obj, "a_size", s.a_size);
    maybe(obj, "b_size", s.b_size);
    maybe(obj, "intra_a", s.intra_a);
    maybe(obj, "intra_b", s.intra_b);
    maybe(obj, "inter", s.inter);
    maybe(obj, "both_fraction", s.both_fraction);
    spec.params = s;
  } else if (kind == "fragmented_frontier") {
    reject_unknown(obj, {"id", "kind", "seed", "a_size", "intra_a", "satellites", "satellite_size",
                         "intra_satellite", "bridges", "satellite_seeds"});
    fragmented_frontier_spec s;
    maybe(obj, "a_size", s.a_size);
    maybe(obj, "intra_a", s.intra_a);
    maybe(obj, "satellites", s.satellites);
    maybe(obj, "satellite_size", s.satellite_size);
    maybe(obj, "intra_satellite", s.intra_satellite);
    maybe(obj, "bridges", s.bridges);
    maybe(obj, "satellite_seeds", s.satellite_seeds);
    spec.params = s;
  } else if (kind == "broadcaster_star") {
    reject_unknown(obj, {"id", "kind", "seed", "audience", "converts", "links", "link_probability"});
    broadcaster_star_spec s;
    s.audience = field<std::vector<node_t>>(obj, "audience");
    s.converts = field<std::vector<node_t>>(obj, "converts");
    if (obj.contains("links")) s.links = parse_weak_links(field<std::string>(obj, "links"));
    maybe(obj, "link_probability", s.link_probability);
    spec.params = s;
  } else if (kind == "erdos_renyi") {
    reject_unknown(obj, {"id", "kind", "seed", "n", "p", "a_fraction"});
    erdos_renyi_spec s;
    maybe(obj, "n", s.n);
    maybe(obj, "p", s.p);
    maybe(obj, "a_fraction", s.a_fraction);
    spec.params = s;
  } else if (kind == "barabasi_albert") {
    reject_unknown(obj, {"id", "kind", "seed", "n", "attach", "a_fraction"});
    barabasi_albert_spec s;
    maybe(obj, "n", s.n);
    maybe(obj, "attach", s.attach);
    maybe(obj, "a_fraction", s.a_fraction);
    spec.params = s;
  } else {
    throw validation_error("unknown generator kind '" + kind + "'");
  }
  validate(spec);
  return spec;
}

std::vector<generator_spec> parse_generator_specs(const std::string& text) {
  json doc = parse_json(text);
  if (doc.is_object() && doc.contains("specs")) doc = doc.at("specs");
  if (!doc.is_array()) throw validation_error("expected an array of generator specs");
  std::vector<generator_spec> specs;
  for (const auto& item : doc) specs.push_back(parse_generator_spec(item.dump()));
  return specs;
}

std::string generator_specs_json(const std::vector<generator_spec>& specs) {
  json arr = json::array();
  for (const auto& spec : specs) {
    json obj = {{"id", spec.id}, {"kind", std::string(kind_name(spec.params))}, {"seed", spec.seed}};
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, dense_frontier_spec>) {
            obj.update({{"a_size", s.a_size}, {"b_size", s.b_size}, {"intra_a", s.intra_a},
                        {"intra_b", s.intra_b}, {"inter", s.inter}, {"both_fraction", s.both_fraction}});
          } else if constexpr (std::is_same_v<T, fragmented_frontier_spec>) {
            obj.update({{"a_size", s.a_size}, {"intra_a", s.intra_a}, {"satellites", s.satellites},
                        {"satellite_size", s.satellite_size}, {"intra_satellite", s.intra_satellite},
                        {"bridges", s.bridges}, {"satellite_seeds", s.satellite_seeds}});
          } else if constexpr (std::is_same_v<T, broadcaster_star_spec>) {
            obj.update({{"audience", s.audience}, {"converts", s.converts},
                        {"links", std::string(to_string(s.links))}, {"link_probability", s.link_probability}});
          } else if constexpr (std::is_same_v<T, erdos_renyi_spec>) {
            obj.update({{"n", s.n}, {"p", s.p}, {"a_fraction", s.a_fraction}});
          } else {
            obj.update({{"n", s.n}, {"attach", s.attach}, {"a_fraction", s.a_fraction}});
          }
        },
        spec.params);
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

audience_model parse_audience_model(const std::string& text) {
  const json obj = parse_json(text);
  if (!obj.is_object()) throw validation_error("audience model must be a JSON object");
  audience_model model;
  model.p = field<double>(obj, "p");
  model.tau = field<double>(obj, "tau");
  if (!obj.contains("broadcasters") || !obj.at("broadcasters").is_array())
    throw validation_error("missing 'broadcasters' array");
  for (const auto& b : obj.at("broadcasters"))
    model.broadcasters.push_back({field<std::int64_t>(b, "n"), field<std::int64_t>(b, "m")});
  model.validate();
  return model;
}

std::vector<user_profile> parse_profiles_jsonl(std::istream& in) {
  std::vector<user_profile> profiles;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const json obj = parse_json(line, lineno);
    try {
      user_profile p;
      p.user_id = field<std::string>(obj, "user_id");
      const auto shares = field<std::vector<double>>(obj, "media_shares");
      if (shares.size() != 5) throw validation_error("media_shares must have 5 entries");
      std::copy(shares.begin(), shares.end(), p.shares.begin());
      maybe(obj, "domain_counts", p.domain_counts);
      p.botscore = field<double>(obj, "botscore");
      p.group = parse_user_group(field<std::string>(obj, "group"));
      maybe(obj, "topic_sequence", p.topic_sequence);
      ideology_score(p.shares);
      is_bot(p.botscore);
      for (const auto& [domain, count] : p.domain_counts)
        if (count <= 0) throw validation_error("domain counts must be positive");
      profiles.push_back(std::move(p));
    } catch (const validation_error& e) {
      throw parse_error(e.what(), lineno);
    }
  }
  return profiles;
}

std::string frontier_json(const frontier_report& report, std::span<const std::uint64_t> ids) {
  json nodes = json::array();
  for (node_t v : report.frontier_nodes)
    nodes.push_back(ids.empty() ? static_cast<std::uint64_t>(v) : ids[v]);
  const json obj = {{"frontier_nodes", nodes},
                    {"frontier_size", report.frontier_size},
                    {"total_network_size", report.total_network_size},
                    {"overlap_with_A", report.overlap_with_A},
                    {"overlap_with_B", report.overlap_with_B},
                    {"metadata", {{"frontier_counting", "both_sides"}}}};
  return obj.dump(2) + "\n";
}

std::string summary_json(const std::vector<sim_trace>& runs, const sim_params& params) {
  json per_run = json::array();
  double converts = 0, yield = 0, speed = 0, depth = 0;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const auto& t = runs[r];
    per_run.push_back({{"replicate", r},
                       {"seed", t.seed},
                       {"converts", t.converts},
                       {"yield", t.yield},
                       {"speed", t.speed},
                       {"depth", t.depth}});
    converts += static_cast<double>(t.converts);
    yield += t.yield;
    speed += t.speed;
    depth += static_cast<double>(t.depth);
  }
  const double n = runs.empty() ? 1.0 : static_cast<double>(runs.size());
  const json obj = {{"converts", converts / n}, {"yield", yield / n}, {"speed", speed / n},
                    {"depth", depth / n},       {"params", params_json(params)},
                    {"seed", params.seed},      {"replicates", runs.size()},
                    {"runs", per_run}};
  return obj.dump(2) + "\n";
}

std::string correlations_json(const sweep_correlations& rho, std::size_t specs) {
  const json obj = {{"statistic", "spearman"},
                    {"specs", specs},
                    {"yield_vs_overlap_with_A", optional_number(rho.overlap_with_A)},
                    {"yield_vs_overlap_with_B", optional_number(rho.overlap_with_B)},
                    {"yield_vs_components", optional_number(rho.components)},
                    {"yield_vs_density", optional_number(rho.density)}};
  return obj.dump(2) + "\n";
}

sweep_correlations parse_correlations_json(const std::string& text) {
  const json obj = parse_json(text);
  auto get = [&](const char* key) -> std::optional<double> {
    if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
    return field<double>(obj, key);
  };
  return {get("yield_vs_overlap_with_A"), get("yield_vs_overlap_with_B"), get("yield_vs_components"),
          get("yield_vs_density")};
}

std::string capacity_json(const audience_model& model) {
  const auto v = carrying_capacities(model);
  json rows = json::array();
  for (std::size_t i = 0; i < model.k(); ++i) {
    const auto& b = model.broadcasters[i];
    const auto uncapped = branching_capacity(model.p, model.tau, static_cast<double>(b.converts));
    rows.push_back({{"broadcaster", i},
                    {"n", b.audience},
                    {"m", b.converts},
                    {"saturated", uncapped.is_full()},
                    {"V", v[i]},
                    {"y", expected_yield_connected(i, model)}});
  }
  const json obj = {{"p", model.p},
                    {"tau", model.tau},
                    {"broadcasters", rows},
                    {"selected_disconnected", select_broadcaster(model, regime::disconnected)},
                    {"selected_connected", select_broadcaster(model, regime::connected)}};
  return obj.dump(2) + "\n";
}

std::string group_centrality_json(const group_centrality& report) {
  json rows = json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"group", std::string(to_string(r.group))},
                    {"members", r.members},
                    {"betweenness", r.betweenness},
                    {"core_number", r.core_number},
                    {"in_degree", r.in_degree},
                    {"out_degree", r.out_degree}});
  const json obj = {{"groups", rows},
                    {"warnings", report.warnings},
                    {"metadata", {{"betweenness", "unnormalized"}}}};
  return obj.dump(2) + "\n";
}

}  // namespace multichrome
