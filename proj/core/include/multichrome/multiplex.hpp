#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "multichrome/graph.hpp"

namespace multichrome {

/// Per-node membership in the primary contagion A and the secondary topic B.
/// A node may belong to both.
struct contagion_labeling {
  std::vector<std::uint8_t> is_A;
  std::vector<std::uint8_t> is_B;

  contagion_labeling() = default;
  explicit contagion_labeling(node_t n)
      : is_A(static_cast<std::size_t>(n), 0), is_B(static_cast<std::size_t>(n), 0) {}

  node_t size() const noexcept { return static_cast<node_t>(is_A.size()); }
  bool in_domain(node_t v) const noexcept { return is_A[v] || is_B[v]; }
  std::size_t count_A() const noexcept;
  std::size_t count_B() const noexcept;
  /// Throws validation_error unless both flag vectors have n entries.
  void check_size(node_t n) const;
  /// Same nodes with the roles of A and B exchanged.
  contagion_labeling swapped() const { return {is_B, is_A}; }

 private:
  contagion_labeling(std::vector<std::uint8_t> a, std::vector<std::uint8_t> b)
      : is_A(std::move(a)), is_B(std::move(b)) {}
};

/// Interface between the A and B communities. A node is on the frontier when
/// it is B-labeled with an edge to an A-labeled node, or A-labeled with an
/// edge to a B-labeled node; edge direction is ignored. Both sides of the
/// interface are counted.
struct frontier_report {
  std::vector<node_t> frontier_nodes;
  std::size_t frontier_size = 0;
  std::size_t total_network_size = 0;  // |A u B|
  double overlap_with_A = 0.0;         // |frontier n A| / |A|
  double overlap_with_B = 0.0;         // |frontier n B| / |B|
};

/// Throws domain_error when A or B is empty.
frontier_report frontier(const graph& g, const contagion_labeling& labels);

/// Nodes of A u B that are not A-labeled: the population conversion yield is
/// measured against.
std::vector<node_t> viable_candidates(const contagion_labeling& labels);

/// Mask of A u B, the arena diffusion runs on.
std::vector<std::uint8_t> domain_mask(const contagion_labeling& labels);

/// One row of a frontier/size table in the layout
///   | Name | 6,009 | 8,394 |
/// with thousands separators. `parse_frontier_table` and
/// `format_frontier_table` round-trip byte for byte.
struct frontier_table_row {
  std::string network;
  std::size_t frontier_size = 0;
  std::size_t total_network_size = 0;
};

std::string format_frontier_table(const std::vector<frontier_table_row>& rows);
std::vector<frontier_table_row> parse_frontier_table(const std::string& text);

}  // namespace multichrome
