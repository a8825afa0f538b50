#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace multichrome {

using node_t = std::int32_t;

struct edge {
  node_t src;
  node_t dst;
  friend bool operator==(const edge&, const edge&) = default;
  friend auto operator<=>(const edge&, const edge&) = default;
};

/// Immutable adjacency in compressed sparse row form.
///
/// Undirected graphs store each edge in both rows. Directed graphs keep a
/// second CSR of in-neighbors so that "who points at v" is as cheap as
/// "whom does v point at". Rows are sorted, duplicate-free and never contain
/// the row's own node.
class graph {
 public:
  graph() = default;

  /// Builds from an edge list. Self-loops and duplicates are dropped. The node
  /// count is max(id) + 1, or `node_count` when that is larger.
  static graph from_edges(std::span<const edge> edges, bool directed, node_t node_count = 0);

  node_t node_count() const noexcept { return static_cast<node_t>(offsets_.size()) - 1; }
  /// Distinct edges; an undirected edge counts once.
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool directed() const noexcept { return directed_; }
  bool empty() const noexcept { return node_count() == 0; }

  /// Out-neighbors (all neighbors when undirected).
  std::span<const node_t> neighbors(node_t v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::span<const node_t> in_neighbors(node_t v) const noexcept {
    if (!directed_) return neighbors(v);
    return {in_targets_.data() + in_offsets_[v], in_targets_.data() + in_offsets_[v + 1]};
  }

  /// Out-degree for directed graphs, degree for undirected ones.
  std::size_t degree(node_t v) const noexcept {
    return static_cast<std::size_t>(offsets_[v + 1] - offsets_[v]);
  }
  std::size_t in_degree(node_t v) const noexcept {
    if (!directed_) return degree(v);
    return static_cast<std::size_t>(in_offsets_[v + 1] - in_offsets_[v]);
  }
  std::vector<std::size_t> degrees() const;

  bool has_edge(node_t src, node_t dst) const noexcept;

  /// Canonical sorted edge list (src < dst for undirected graphs).
  std::vector<edge> edges() const;

  /// Same nodes, direction dropped; identity for undirected graphs.
  graph as_undirected() const;

  /// Subgraph induced by nodes with keep[v] != 0, renumbered densely in
  /// increasing order. `kept` receives the new-to-old map.
  graph induced(std::span<const std::uint8_t> keep, std::vector<node_t>* kept = nullptr) const;

 private:
  bool directed_ = false;
  std::size_t edge_count_ = 0;
  std::vector<std::int64_t> offsets_{0};
  std::vector<node_t> targets_;
  std::vector<std::int64_t> in_offsets_{0};
  std::vector<node_t> in_targets_;
};

/// In-memory constructor used throughout; ids are taken as given.
graph build_graph(std::span<const edge> edges, bool directed);

struct components {
  node_t count = 0;
  /// Component of each node, numbered in order of each component's smallest node.
  std::vector<node_t> labels;
};

/// Weak connectivity for directed graphs.
components connected_components(const graph& g);

/// |E| / (N(N-1)) directed, 2|E| / (N(N-1)) undirected. Throws domain_error for N < 2.
double density(const graph& g);

/// Unnormalized shortest-path betweenness (Brandes). Undirected graphs count
/// each unordered pair once. With `sample_pivots`, only that many sources
/// (drawn without replacement from `seed`) are accumulated and the sum is
/// scaled by N / pivots; a pivot count >= N runs the exact algorithm.
std::vector<double> betweenness(const graph& g, std::optional<node_t> sample_pivots = std::nullopt,
                                std::uint64_t seed = 0);

/// k-core numbers of the undirected view (Batagelj-Zaversnik peeling).
std::vector<node_t> core_numbers(const graph& g);

struct centrality_report {
  std::vector<double> betweenness;
  std::vector<node_t> core_number;
  std::vector<std::size_t> in_degree;
  std::vector<std::size_t> out_degree;
};

centrality_report centrality(const graph& g, std::optional<node_t> sample_pivots = std::nullopt,
                             std::uint64_t seed = 0);

}  // namespace multichrome
