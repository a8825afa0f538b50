#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "multichrome/diffusion.hpp"
#include "multichrome/graph.hpp"
#include "multichrome/multiplex.hpp"
#include "multichrome/profile.hpp"
#include "multichrome/sweep.hpp"

namespace multichrome {

// Plain-text formats. Edge lists hold one `src dst` pair per line, separated
// by whitespace or a comma; `#` starts a comment. Node ids in files are
// arbitrary non-negative integers and are compacted to dense ids on load in
// increasing order of the original id.

struct raw_edge {
  std::uint64_t src;
  std::uint64_t dst;
};

struct label_row {
  std::uint64_t node;
  bool is_A;
  bool is_B;
};

/// Throws parse_error carrying the offending line number.
std::vector<raw_edge> parse_edge_list(std::istream& in);
/// CSV with header `node,is_A,is_B` and 0/1 flags.
std::vector<label_row> parse_labels_csv(std::istream& in);
/// One node id per line (`#` comments allowed).
std::vector<std::uint64_t> parse_node_list(std::istream& in);

struct network_file {
  graph g;
  contagion_labeling labels;
  /// original_ids[dense] = id as written in the input files.
  std::vector<std::uint64_t> original_ids;

  /// Dense id of an original id; throws validation_error when unknown.
  node_t dense_id(std::uint64_t original) const;
};

/// Reads an edge list and optional label CSV. Nodes that appear only in the
/// label file become isolated nodes; nodes without a label row are unlabeled.
network_file load_network(const std::filesystem::path& edges,
                          const std::optional<std::filesystem::path>& labels, bool directed);

/// Opens for reading; throws file_error when the file is missing.
std::ifstream open_input(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
/// Creates parent directories; throws file_error on failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Shortest decimal form that round-trips.
std::string format_double(double x);

/// Edge list in canonical order. Ids are written through `ids` when given.
void write_edge_list(std::ostream& out, const graph& g, std::span<const std::uint64_t> ids = {});
void write_labels_csv(std::ostream& out, const contagion_labeling& labels,
                      std::span<const std::uint64_t> ids = {});
/// `original_id,dense_id`
void write_id_map(std::ostream& out, std::span<const std::uint64_t> ids);
/// `t,infected_count`
void write_trace_csv(std::ostream& out, const sim_trace& trace);
/// `spec_id,overlap_with_A,overlap_with_B,component_count,density,mean_yield,yield_stddev`
void write_sweep_csv(std::ostream& out, const std::vector<sweep_record>& records);
std::vector<sweep_record> parse_sweep_csv(std::istream& in);
/// `user_id,ideology,entropy,is_bot,group`; undefined scores are left blank.
void write_scores_csv(std::ostream& out, std::span<const user_profile> profiles);
/// Square matrix with a `from` column followed by one column per label.
void write_transitions_csv(std::ostream& out, const topic_transitions& tm, bool probabilities);
/// `domain,slant` rows.
std::map<std::string, int> parse_slant_csv(std::istream& in);
/// `node,group` rows; node ids are original ids.
std::vector<std::pair<std::uint64_t, user_group>> parse_groups_csv(std::istream& in);

}  // namespace multichrome
