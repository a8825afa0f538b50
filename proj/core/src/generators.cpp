#include "multichrome/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "multichrome/error.hpp"
#include "multichrome/rng.hpp"

namespace multichrome {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw validation_error(what);
}

void require_probability(double p, const char* name) {
  require(p >= 0.0 && p <= 1.0, std::string(name) + " must lie in [0, 1]");
}

void require_size(node_t n, const char* name) {
  require(n >= 1, std::string(name) + " must be >= 1");
}

// Number of failures before the next success of a Bernoulli(p) sequence.
std::uint64_t geometric_skip(rng_t& rng, double log_q) {
  const double u = 1.0 - uniform01(rng);  // (0, 1]
  const double skip = std::floor(std::log(u) / log_q);
  return skip >= 1.8e19 ? UINT64_MAX : static_cast<std::uint64_t>(skip);
}

// G(n, p) on nodes [first, first + n) by geometric skipping over pairs.
void random_pairs(rng_t& rng, node_t first, node_t n, double p, std::vector<edge>& out) {
  if (p <= 0.0 || n < 2) return;
  const auto total = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
  if (p >= 1.0) {
    for (node_t i = 0; i < n; ++i)
      for (node_t j = i + 1; j < n; ++j) out.push_back({first + i, first + j});
    return;
  }
  const double log_q = std::log1p(-p);
  // Pair index k enumerates (i, j), j < i, row by row.
  std::uint64_t k = geometric_skip(rng, log_q);
  node_t i = 1;
  std::uint64_t row_start = 0;
  while (k < total) {
    while (k >= row_start + static_cast<std::uint64_t>(i)) {
      row_start += static_cast<std::uint64_t>(i);
      ++i;
    }
    out.push_back({first + static_cast<node_t>(k - row_start), first + i});
    const auto skip = geometric_skip(rng, log_q);
    if (skip >= total - k) break;
    k += skip + 1;
  }
}

// Bipartite G(a, b, p) between [first_a, first_a + a) and [first_b, first_b + b).
void random_bipartite(rng_t& rng, node_t first_a, node_t a, node_t first_b, node_t b, double p,
                      std::vector<edge>& out) {
  if (p <= 0.0) return;
  const auto total = static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b);
  if (p >= 1.0) {
    for (node_t i = 0; i < a; ++i)
      for (node_t j = 0; j < b; ++j) out.push_back({first_a + i, first_b + j});
    return;
  }
  const double log_q = std::log1p(-p);
  std::uint64_t k = geometric_skip(rng, log_q);
  while (k < total) {
    out.push_back({first_a + static_cast<node_t>(k / static_cast<std::uint64_t>(b)),
                   first_b + static_cast<node_t>(k % static_cast<std::uint64_t>(b))});
    const auto skip = geometric_skip(rng, log_q);
    if (skip >= total - k) break;
    k += skip + 1;
  }
}

// Uniform random recursive tree: node i attaches to a uniform earlier node.
void random_tree(rng_t& rng, node_t first, node_t n, std::vector<edge>& out) {
  for (node_t i = 1; i < n; ++i)
    out.push_back({first + static_cast<node_t>(uniform_index(rng, static_cast<std::uint64_t>(i))),
                   first + i});
}

void clique(node_t first, node_t n, std::vector<edge>& out) {
  for (node_t i = 0; i < n; ++i)
    for (node_t j = i + 1; j < n; ++j) out.push_back({first + i, first + j});
}

// Exactly round(fraction * n) uniformly chosen nodes become A, the rest B.
contagion_labeling random_split(rng_t& rng, node_t n, double fraction) {
  contagion_labeling labels(n);
  const auto a = static_cast<node_t>(std::llround(fraction * n));
  std::vector<node_t> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (node_t i = 0; i < a; ++i) {
    const auto j = i + static_cast<node_t>(uniform_index(rng, static_cast<std::uint64_t>(n - i)));
    std::swap(order[i], order[j]);
    labels.is_A[order[i]] = 1;
  }
  for (node_t v = 0; v < n; ++v) labels.is_B[v] = labels.is_A[v] ? 0 : 1;
  return labels;
}

generated_network make(const dense_frontier_spec& s, rng_t& rng) {
  std::vector<edge> edges;
  random_pairs(rng, 0, s.a_size, s.intra_a, edges);
  random_pairs(rng, s.a_size, s.b_size, s.intra_b, edges);
  random_bipartite(rng, 0, s.a_size, s.a_size, s.b_size, s.inter, edges);

  const node_t n = s.a_size + s.b_size;
  contagion_labeling labels(n);
  for (node_t v = 0; v < s.a_size; ++v) labels.is_A[v] = 1;
  for (node_t v = s.a_size; v < n; ++v) labels.is_B[v] = 1;
  const auto both = static_cast<node_t>(std::llround(s.both_fraction * s.b_size));
  for (node_t v = s.a_size; v < s.a_size + both; ++v) labels.is_A[v] = 1;
  return {graph::from_edges(edges, false, n), std::move(labels)};
}

generated_network make(const fragmented_frontier_spec& s, rng_t& rng) {
  std::vector<edge> edges;
  random_tree(rng, 0, s.a_size, edges);
  random_pairs(rng, 0, s.a_size, s.intra_a, edges);

  const node_t n = s.a_size + s.satellites * s.satellite_size;
  contagion_labeling labels(n);
  for (node_t v = 0; v < s.a_size; ++v) labels.is_A[v] = 1;

  const auto grid = static_cast<std::uint64_t>(s.a_size) * static_cast<std::uint64_t>(s.satellite_size);
  std::vector<std::uint64_t> picked;
  for (node_t k = 0; k < s.satellites; ++k) {
    const node_t first = s.a_size + k * s.satellite_size;
    random_tree(rng, first, s.satellite_size, edges);
    random_pairs(rng, first, s.satellite_size, s.intra_satellite, edges);

    // Distinct (A node, satellite node) pairs by rejection over the grid.
    picked.clear();
    while (picked.size() < static_cast<std::size_t>(s.bridges)) {
      const auto cell = uniform_index(rng, grid);
      if (std::find(picked.begin(), picked.end(), cell) != picked.end()) continue;
      picked.push_back(cell);
      edges.push_back({static_cast<node_t>(cell / static_cast<std::uint64_t>(s.satellite_size)),
                       first + static_cast<node_t>(cell % static_cast<std::uint64_t>(s.satellite_size))});
    }
    for (node_t v = first; v < first + s.satellite_size; ++v) labels.is_B[v] = 1;
    for (node_t v = first; v < first + s.satellite_seeds; ++v) labels.is_A[v] = 1;
  }
  return {graph::from_edges(edges, false, n), std::move(labels)};
}

generated_network make(const broadcaster_star_spec& s, rng_t& rng) {
  const auto k = static_cast<node_t>(s.audience.size());
  std::vector<edge> edges;
  switch (s.links) {
    case weak_links::ring:
      for (node_t i = 0; i < k && k > 1; ++i) edges.push_back({i, (i + 1) % k});
      break;
    case weak_links::path:
      for (node_t i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
      break;
    case weak_links::random:
      random_pairs(rng, 0, k, s.link_probability, edges);
      break;
  }

  const node_t n = k + std::accumulate(s.audience.begin(), s.audience.end(), node_t{0});
  contagion_labeling labels(n);
  std::fill(labels.is_B.begin(), labels.is_B.end(), std::uint8_t{1});
  node_t first = k;
  for (node_t i = 0; i < k; ++i) {
    const node_t size = s.audience[i];
    clique(first, size, edges);
    for (node_t v = first; v < first + size; ++v) edges.push_back({i, v});
    for (node_t v = first; v < first + s.converts[i]; ++v) labels.is_A[v] = 1;
    first += size;
  }
  return {graph::from_edges(edges, false, n), std::move(labels)};
}

generated_network make(const erdos_renyi_spec& s, rng_t& rng) {
  std::vector<edge> edges;
  random_pairs(rng, 0, s.n, s.p, edges);
  auto g = graph::from_edges(edges, false, s.n);
  return {std::move(g), random_split(rng, s.n, s.a_fraction)};
}

generated_network make(const barabasi_albert_spec& s, rng_t& rng) {
  // Seed clique on attach + 1 nodes, then each node joins `attach` distinct
  // targets drawn proportionally to degree via the endpoint list.
  std::vector<edge> edges;
  const node_t core = std::min(s.n, s.attach + 1);
  clique(0, core, edges);
  std::vector<node_t> endpoints;
  for (const auto& e : edges) {
    endpoints.push_back(e.src);
    endpoints.push_back(e.dst);
  }
  std::vector<node_t> targets;
  for (node_t v = core; v < s.n; ++v) {
    targets.clear();
    while (targets.size() < static_cast<std::size_t>(s.attach)) {
      const node_t t = endpoints[uniform_index(rng, endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (node_t t : targets) {
      edges.push_back({t, v});
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  auto g = graph::from_edges(edges, false, s.n);
  return {std::move(g), random_split(rng, s.n, s.a_fraction)};
}

}  // namespace

std::string_view kind_name(const generator_params& params) noexcept {
  return std::visit(overloaded{
                        [](const dense_frontier_spec&) { return std::string_view("dense_frontier"); },
                        [](const fragmented_frontier_spec&) { return std::string_view("fragmented_frontier"); },
                        [](const broadcaster_star_spec&) { return std::string_view("broadcaster_star"); },
                        [](const erdos_renyi_spec&) { return std::string_view("erdos_renyi"); },
                        [](const barabasi_albert_spec&) { return std::string_view("barabasi_albert"); },
                    },
                    params);
}

std::string_view to_string(weak_links links) noexcept {
  switch (links) {
    case weak_links::ring: return "ring";
    case weak_links::path: return "path";
    case weak_links::random: return "random";
  }
  return "ring";
}

weak_links parse_weak_links(std::string_view name) {
  if (name == "ring") return weak_links::ring;
  if (name == "path") return weak_links::path;
  if (name == "random") return weak_links::random;
  throw validation_error("unknown weak link layout '" + std::string(name) + "'");
}

void validate(const generator_spec& spec) {
  std::visit(overloaded{
                 [](const dense_frontier_spec& s) {
                   require_size(s.a_size, "a_size");
                   require_size(s.b_size, "b_size");
                   require_probability(s.intra_a, "intra_a");
                   require_probability(s.intra_b, "intra_b");
                   require_probability(s.inter, "inter");
                   require_probability(s.both_fraction, "both_fraction");
                 },
                 [](const fragmented_frontier_spec& s) {
                   require_size(s.a_size, "a_size");
                   require_size(s.satellites, "satellites");
                   require_size(s.satellite_size, "satellite_size");
                   require_probability(s.intra_a, "intra_a");
                   require_probability(s.intra_satellite, "intra_satellite");
                   require(s.bridges >= 0, "bridges must be >= 0");
                   require(static_cast<std::int64_t>(s.bridges) <=
                               static_cast<std::int64_t>(s.a_size) * s.satellite_size,
                           "bridges exceed the possible A-satellite pairs");
                   require(s.satellite_seeds >= 0 && s.satellite_seeds <= s.satellite_size,
                           "satellite_seeds must lie in [0, satellite_size]");
                 },
                 [](const broadcaster_star_spec& s) {
                   require(!s.audience.empty(), "at least one broadcaster is required");
                   require(s.audience.size() == s.converts.size(),
                           "audience and converts must have the same length");
                   for (std::size_t i = 0; i < s.audience.size(); ++i) {
                     require(s.audience[i] >= 1, "audience sizes must be >= 1");
                     require(s.converts[i] >= 0 && s.converts[i] <= s.audience[i],
                             "broadcaster " + std::to_string(i) + ": converts exceed audience size");
                   }
                   require_probability(s.link_probability, "link_probability");
                 },
                 [](const erdos_renyi_spec& s) {
                   require_size(s.n, "n");
                   require_probability(s.p, "p");
                   require_probability(s.a_fraction, "a_fraction");
                 },
                 [](const barabasi_albert_spec& s) {
                   require_size(s.n, "n");
                   require(s.attach >= 1 && s.attach < s.n, "attach must lie in [1, n)");
                   require_probability(s.a_fraction, "a_fraction");
                 },
             },
             spec.params);
}

generated_network generate(const generator_spec& spec) {
  validate(spec);
  rng_t rng(spec.seed);
  return std::visit([&](const auto& s) { return make(s, rng); }, spec.params);
}

}  // namespace multichrome
