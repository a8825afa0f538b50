#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "multichrome/analytic.hpp"
#include "multichrome/diffusion.hpp"
#include "multichrome/generators.hpp"
#include "multichrome/multiplex.hpp"
#include "multichrome/profile.hpp"
#include "multichrome/sweep.hpp"

namespace multichrome {

// JSON documents exchanged with the command line tool and plotting scripts.
// All functions take and return text so the JSON library stays private.

/// Flat object: {"id", "kind", "seed", <kind-specific fields>}. Unknown keys
/// are rejected.
generator_spec parse_generator_spec(const std::string& text);
/// A JSON array of specs, or an object with a "specs" array.
std::vector<generator_spec> parse_generator_specs(const std::string& text);
std::string generator_specs_json(const std::vector<generator_spec>& specs);

/// {"p": .., "tau": .., "broadcasters": [{"n": .., "m": ..}, ...]}
audience_model parse_audience_model(const std::string& text);

/// One profile per line with fields user_id, media_shares, domain_counts,
/// botscore, group, topic_sequence. Throws parse_error with the line number.
std::vector<user_profile> parse_profiles_jsonl(std::istream& in);

/// The five frontier_report fields plus a "metadata" object. Node ids go
/// through `ids` when given.
std::string frontier_json(const frontier_report& report, std::span<const std::uint64_t> ids = {});

/// Mean converts/yield/speed/depth over the runs, the parameters, the master
/// seed and one entry per run.
std::string summary_json(const std::vector<sim_trace>& runs, const sim_params& params);

std::string correlations_json(const sweep_correlations& rho, std::size_t specs);
sweep_correlations parse_correlations_json(const std::string& text);

/// V_i and y(i) per broadcaster plus the selection for both regimes.
std::string capacity_json(const audience_model& model);

std::string group_centrality_json(const group_centrality& report);

}  // namespace multichrome
