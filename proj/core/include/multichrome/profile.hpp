#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "multichrome/graph.hpp"

namespace multichrome {

enum class user_group { pro, anti, wavering, unlabeled };

std::string_view to_string(user_group g) noexcept;
user_group parse_user_group(std::string_view name);

/// Shares of shared links by outlet slant: left, left-center, center,
/// right-center, right.
using media_shares = std::array<double, 5>;

struct user_profile {
  std::string user_id;
  media_shares shares{};
  std::map<std::string, std::int64_t> domain_counts;
  double botscore = 0.0;
  user_group group = user_group::unlabeled;
  std::vector<std::string> topic_sequence;
};

/// Dot product of the shares with (-2, -1, 0, 1, 2); negative is left.
/// Throws validation_error for negative shares or a sum off 1 by more than 1e-9.
double ideology_score(const media_shares& shares);

/// Shannon entropy (natural log) of the domain count distribution, with
/// 0 log 0 = 0. Throws domain_error when no domain has a positive count.
double source_entropy(const std::map<std::string, std::int64_t>& domain_counts);

/// botscore strictly above 0.5. Throws validation_error outside [0, 1].
bool is_bot(double botscore);

/// Slant index (0 = left ... 4 = right) for "left", "left-center", "center",
/// "right-center", "right"; "center-left"/"center-right" are accepted too.
int parse_slant(std::string_view name);

/// Shares computed from domain counts through a domain -> slant table.
/// Domains missing from the table are ignored; empty when none is rated.
std::optional<media_shares> shares_from_domains(const std::map<std::string, std::int64_t>& domain_counts,
                                                const std::map<std::string, int>& slant_of_domain);

struct topic_transitions {
  std::vector<std::string> labels;
  std::vector<std::vector<std::int64_t>> counts;      // counts[from][to]
  std::vector<std::vector<double>> probabilities;     // row-normalized counts
  std::vector<std::uint8_t> empty_row;                // rows with no outgoing pair
};

/// Counts consecutive (a -> b) topic pairs over every user's sequence after
/// dropping topics outside the whitelist. Labels follow whitelist order.
/// Throws validation_error for an empty whitelist.
topic_transitions transition_matrix(std::span<const user_profile> profiles,
                                    std::span<const std::string> whitelist);

struct group_centrality_row {
  user_group group = user_group::unlabeled;
  std::size_t members = 0;
  double betweenness = 0.0;
  double core_number = 0.0;
  double in_degree = 0.0;
  double out_degree = 0.0;
};

struct group_centrality {
  std::vector<group_centrality_row> rows;  // in user_group order, empty groups omitted
  std::vector<std::string> warnings;
};

/// Per-group means of betweenness, core number, in-degree and out-degree.
/// Edges read a -> b as "a retweets b". Nodes without a group are skipped.
group_centrality group_centrality_report(const graph& g,
                                         std::span<const std::optional<user_group>> groups,
                                         std::optional<node_t> sample_pivots = std::nullopt,
                                         std::uint64_t seed = 0);

}  // namespace multichrome
