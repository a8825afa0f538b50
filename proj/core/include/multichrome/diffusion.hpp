#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "multichrome/graph.hpp"
#include "multichrome/multiplex.hpp"
#include "multichrome/rng.hpp"

namespace multichrome {

enum class dormancy_mode {
  infected_only,  ///< only viable spreaders can go dormant
  all_nodes,      ///< every node draws each step, infected or not
};

std::string_view to_string(dormancy_mode m) noexcept;
/// Throws validation_error on an unknown name.
dormancy_mode parse_dormancy_mode(std::string_view name);

struct sim_params {
  int steps = 400;
  double dormancy_rate = 0.005;   // tau
  double diffusion_scale = 0.01;  // p
  dormancy_mode mode = dormancy_mode::infected_only;
  std::uint64_t seed = 0;

  void validate() const;
};

struct sim_state {
  std::vector<std::uint8_t> infected;
  std::vector<std::uint8_t> dormant;
  std::vector<std::uint8_t> viable;  // infected && !dormant
};

struct sim_trace {
  /// infected_count[t] for t = 0..steps; entry 0 is the seed count.
  std::vector<std::int64_t> infected_count;
  sim_state final_state;
  std::int64_t converts = 0;
  /// converts / number of domain nodes not infected at t = 0.
  double yield = 0.0;
  /// First t whose converts reach half the final converts; 0 when nothing converts.
  int speed = 0;
  std::int64_t depth = 0;
  std::uint64_t seed = 0;
};

/// Called after every step with the step index and the state at its end,
/// indexed by original node id.
using step_observer = std::function<void(int, const sim_state&)>;

/// Stochastic conversion spreading with dormancy over the subgraph induced
/// by A u B. Every step, in order:
///   1. each eligible node goes dormant with probability tau, permanently;
///   2. viable = infected and not dormant;
///   3. for each node, count its viable (out-)neighbors;
///   4. each uninfected node i with deg(i) > 0 becomes infected with
///      probability p * viable_neighbors(i) / deg(i), using the viable set
///      fixed in step 2.
/// Seeds default to the A-labeled nodes. Throws domain_error("no seeds")
/// when the seed set is empty.
sim_trace simulate(const graph& g, const contagion_labeling& labels, const sim_params& params,
                   std::optional<std::span<const node_t>> seeds = std::nullopt,
                   const step_observer& observer = {});

/// Seed of replicate r under master seed `master`.
constexpr std::uint64_t replicate_seed(std::uint64_t master, std::uint64_t r) noexcept {
  return derive_seed(master, "replicate", r);
}

/// Independent replicates; replicate r runs with replicate_seed(params.seed, r)
/// so the output does not depend on `threads`.
std::vector<sim_trace> run_replicates(const graph& g, const contagion_labeling& labels,
                                      const sim_params& params, int replicates,
                                      unsigned threads = 0,
                                      std::optional<std::span<const node_t>> seeds = std::nullopt);

}  // namespace multichrome
