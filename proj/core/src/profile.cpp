#include "multichrome/profile.hpp"

#include <cmath>
#include <unordered_map>

#include "multichrome/error.hpp"

namespace multichrome {

std::string_view to_string(user_group g) noexcept {
  switch (g) {
    case user_group::pro: return "pro";
    case user_group::anti: return "anti";
    case user_group::wavering: return "wavering";
    case user_group::unlabeled: return "unlabeled";
  }
  return "unlabeled";
}

user_group parse_user_group(std::string_view name) {
  if (name == "pro") return user_group::pro;
  if (name == "anti") return user_group::anti;
  if (name == "wavering") return user_group::wavering;
  if (name == "unlabeled") return user_group::unlabeled;
  throw validation_error("unknown group '" + std::string(name) + "'");
}

double ideology_score(const media_shares& shares) {
  static constexpr std::array<double, 5> weights{-2.0, -1.0, 0.0, 1.0, 2.0};
  double total = 0.0;
  double score = 0.0;
  for (std::size_t i = 0; i < shares.size(); ++i) {
    if (!(shares[i] >= 0.0)) throw validation_error("media shares must be non-negative");
    total += shares[i];
    score += shares[i] * weights[i];
  }
  if (std::abs(total - 1.0) > 1e-9) throw validation_error("media shares must sum to 1");
  return score;
}

double source_entropy(const std::map<std::string, std::int64_t>& domain_counts) {
  std::int64_t total = 0;
  for (const auto& [domain, count] : domain_counts) {
    if (count < 0) throw validation_error("negative count for domain '" + domain + "'");
    total += count;
  }
  if (total == 0) throw domain_error("entropy of an empty domain distribution");
  double h = 0.0;
  for (const auto& [domain, count] : domain_counts) {
    if (count == 0) continue;
    const double p = static_cast<double>(count) / static_cast<double>(total);
    h -= p * std::log(p);
  }
  return h;
}

bool is_bot(double botscore) {
  if (!(botscore >= 0.0 && botscore <= 1.0)) throw validation_error("botscore must lie in [0, 1]");
  return botscore > 0.5;
}

int parse_slant(std::string_view name) {
  if (name == "left") return 0;
  if (name == "left-center" || name == "center-left") return 1;
  if (name == "center") return 2;
  if (name == "right-center" || name == "center-right") return 3;
  if (name == "right") return 4;
  throw validation_error("unknown slant '" + std::string(name) + "'");
}

std::optional<media_shares> shares_from_domains(const std::map<std::string, std::int64_t>& domain_counts,
                                                const std::map<std::string, int>& slant_of_domain) {
  media_shares shares{};
  double rated = 0.0;
  for (const auto& [domain, count] : domain_counts) {
    const auto it = slant_of_domain.find(domain);
    if (it == slant_of_domain.end() || count <= 0) continue;
    shares[static_cast<std::size_t>(it->second)] += static_cast<double>(count);
    rated += static_cast<double>(count);
  }
  if (rated == 0.0) return std::nullopt;
  for (auto& s : shares) s /= rated;
  return shares;
}

topic_transitions transition_matrix(std::span<const user_profile> profiles,
                                    std::span<const std::string> whitelist) {
  if (whitelist.empty()) throw validation_error("topic whitelist is empty");
  topic_transitions tm;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& topic : whitelist)
    if (index.emplace(topic, tm.labels.size()).second) tm.labels.push_back(topic);

  const std::size_t k = tm.labels.size();
  tm.counts.assign(k, std::vector<std::int64_t>(k, 0));
  for (const auto& user : profiles) {
    std::optional<std::size_t> prev;
    for (const auto& topic : user.topic_sequence) {
      const auto it = index.find(topic);
      if (it == index.end()) continue;
      if (prev) ++tm.counts[*prev][it->second];
      prev = it->second;
    }
  }

  tm.probabilities.assign(k, std::vector<double>(k, 0.0));
  tm.empty_row.assign(k, 0);
  for (std::size_t a = 0; a < k; ++a) {
    std::int64_t row = 0;
    for (auto c : tm.counts[a]) row += c;
    if (row == 0) {
      tm.empty_row[a] = 1;
      continue;
    }
    for (std::size_t b = 0; b < k; ++b)
      tm.probabilities[a][b] = static_cast<double>(tm.counts[a][b]) / static_cast<double>(row);
  }
  return tm;
}

group_centrality group_centrality_report(const graph& g,
                                         std::span<const std::optional<user_group>> groups,
                                         std::optional<node_t> sample_pivots, std::uint64_t seed) {
  if (groups.size() != static_cast<std::size_t>(g.node_count()))
    throw validation_error("group labels must cover every node");
  const auto c = centrality(g, sample_pivots, seed);

  constexpr std::array all{user_group::pro, user_group::anti, user_group::wavering,
                           user_group::unlabeled};
  group_centrality report;
  for (const auto grp : all) {
    group_centrality_row row;
    row.group = grp;
    for (node_t v = 0; v < g.node_count(); ++v) {
      if (groups[v] != grp) continue;
      ++row.members;
      row.betweenness += c.betweenness[v];
      row.core_number += c.core_number[v];
      row.in_degree += static_cast<double>(c.in_degree[v]);
      row.out_degree += static_cast<double>(c.out_degree[v]);
    }
    if (row.members == 0) {
      report.warnings.push_back("group '" + std::string(to_string(grp)) + "' has no members");
      continue;
    }
    const auto n = static_cast<double>(row.members);
    row.betweenness /= n;
    row.core_number /= n;
    row.in_degree /= n;
    row.out_degree /= n;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace multichrome
