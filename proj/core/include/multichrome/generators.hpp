#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "multichrome/graph.hpp"
#include "multichrome/multiplex.hpp"

namespace multichrome {

// Synthetic multiplex networks. Node ids are laid out block by block in the
// order the fields are declared; every generator is a pure function of its
// spec and seed.

/// Two stochastic blocks: A (nodes [0, a_size)) and B (the next b_size nodes).
/// `both_fraction` of the B block is additionally A-labeled.
struct dense_frontier_spec {
  node_t a_size = 500;
  node_t b_size = 500;
  double intra_a = 0.02;
  double intra_b = 0.02;
  double inter = 0.005;
  double both_fraction = 0.0;
};

/// One A block plus `satellites` B clusters. Every block is a uniform random
/// recursive tree with extra G(n, p) edges, so each is connected. Each
/// satellite gets exactly `bridges` distinct edges to A-block nodes, and its
/// first `satellite_seeds` members are also A-labeled.
struct fragmented_frontier_spec {
  node_t a_size = 500;
  double intra_a = 0.02;
  node_t satellites = 10;
  node_t satellite_size = 20;
  double intra_satellite = 0.1;
  node_t bridges = 1;
  node_t satellite_seeds = 0;
};

enum class weak_links { ring, path, random };

/// Broadcasters [0, k) joined by weak links, each with its own audience
/// clique; broadcaster i is adjacent to all of audience i. Everything is
/// B-labeled and the first converts[i] members of audience i are also A.
struct broadcaster_star_spec {
  std::vector<node_t> audience;
  std::vector<node_t> converts;
  weak_links links = weak_links::ring;
  double link_probability = 0.0;  // for weak_links::random
};

/// Baselines: A-labeled on exactly round(a_fraction * n) uniformly chosen
/// nodes, B-labeled on the rest.
struct erdos_renyi_spec {
  node_t n = 1000;
  double p = 0.01;
  double a_fraction = 0.5;
};

struct barabasi_albert_spec {
  node_t n = 1000;
  node_t attach = 3;
  double a_fraction = 0.5;
};

using generator_params = std::variant<dense_frontier_spec, fragmented_frontier_spec,
                                      broadcaster_star_spec, erdos_renyi_spec, barabasi_albert_spec>;

struct generator_spec {
  std::string id;
  generator_params params;
  std::uint64_t seed = 0;
};

struct generated_network {
  graph g;
  contagion_labeling labels;
};

std::string_view kind_name(const generator_params& params) noexcept;
std::string_view to_string(weak_links links) noexcept;
weak_links parse_weak_links(std::string_view name);

/// Throws validation_error on out-of-range probabilities, empty blocks or
/// inconsistent sizes such as converts[i] > audience[i].
void validate(const generator_spec& spec);

generated_network generate(const generator_spec& spec);

}  // namespace multichrome
