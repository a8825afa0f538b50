#include "multichrome/diffusion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "multichrome/error.hpp"
#include "multichrome/parallel.hpp"
#include "multichrome/rng.hpp"

namespace multichrome {

std::string_view to_string(dormancy_mode m) noexcept {
  return m == dormancy_mode::all_nodes ? "all_nodes" : "infected_only";
}

dormancy_mode parse_dormancy_mode(std::string_view name) {
  if (name == "infected_only") return dormancy_mode::infected_only;
  if (name == "all_nodes") return dormancy_mode::all_nodes;
  throw validation_error("unknown dormancy mode '" + std::string(name) + "'");
}

void sim_params::validate() const {
  if (steps < 1) throw validation_error("steps must be >= 1");
  if (!(dormancy_rate >= 0.0 && dormancy_rate <= 1.0))
    throw validation_error("dormancy rate must lie in [0, 1]");
  if (!(diffusion_scale >= 0.0 && diffusion_scale <= 1.0))
    throw validation_error("diffusion scale must lie in [0, 1]");
}

namespace {

class engine {
 public:
  engine(const graph& arena, const sim_params& params)
      : g_(arena),
        params_(params),
        rng_(params.seed),
        infected_(static_cast<std::size_t>(arena.node_count()), 0),
        dormant_(infected_.size(), 0),
        viable_count_(infected_.size(), 0) {}

  void seed(std::span<const node_t> local_seeds) {
    for (node_t v : local_seeds) {
      if (infected_[v]) continue;
      infected_[v] = 1;
      ++infected_total_;
    }
    for (node_t v = 0; v < g_.node_count(); ++v) {
      if (infected_[v])
        make_viable(v);
      else if (g_.degree(v) > 0)
        susceptible_.push_back(v);
    }
  }

  std::int64_t infected_total() const noexcept { return infected_total_; }

  // One synchronous step. Returns false once no further infection can occur.
  bool step() {
    draw_dormancy();

    fresh_.clear();
    const double p = params_.diffusion_scale;
    std::size_t keep = 0;
    for (node_t v : susceptible_) {
      const auto exposed = viable_count_[v];
      if (exposed > 0 &&
          uniform01(rng_) < p * static_cast<double>(exposed) / static_cast<double>(g_.degree(v))) {
        fresh_.push_back(v);
      } else {
        susceptible_[keep++] = v;
      }
    }
    susceptible_.resize(keep);

    for (node_t v : fresh_) {
      infected_[v] = 1;
      ++infected_total_;
      if (!dormant_[v]) make_viable(v);
    }
    return !active_.empty() && !susceptible_.empty();
  }

  // Dormancy over `remaining` further steps once infection has stopped: each
  // eligible node falls dormant by the end with probability 1 - (1 - tau)^remaining.
  void finish_dormancy(int remaining) {
    const double tau = params_.dormancy_rate;
    if (remaining <= 0 || tau <= 0.0) return;
    const double q = 1.0 - std::pow(1.0 - tau, remaining);
    for (node_t v = 0; v < g_.node_count(); ++v)
      if (eligible(v) && uniform01(rng_) < q) dormant_[v] = 1;
  }

  sim_state local_state() const {
    sim_state s{infected_, dormant_, std::vector<std::uint8_t>(infected_.size())};
    for (std::size_t v = 0; v < s.viable.size(); ++v) s.viable[v] = infected_[v] && !dormant_[v];
    return s;
  }

 private:
  bool eligible(node_t v) const noexcept {
    if (dormant_[v]) return false;
    return params_.mode == dormancy_mode::all_nodes || infected_[v];
  }

  void make_viable(node_t v) {
    active_.push_back(v);
    for (node_t u : g_.in_neighbors(v)) ++viable_count_[u];
  }

  void retire(node_t v) {
    for (node_t u : g_.in_neighbors(v)) --viable_count_[u];
  }

  void draw_dormancy() {
    const double tau = params_.dormancy_rate;
    if (tau <= 0.0) return;
    if (params_.mode == dormancy_mode::all_nodes) {
      for (node_t v = 0; v < g_.node_count(); ++v) {
        if (!dormant_[v] && uniform01(rng_) < tau) {
          dormant_[v] = 1;
          if (infected_[v]) retire(v);
        }
      }
      std::erase_if(active_, [this](node_t v) { return dormant_[v] != 0; });
      return;
    }
    std::size_t keep = 0;
    for (node_t v : active_) {
      if (uniform01(rng_) < tau) {
        dormant_[v] = 1;
        retire(v);
      } else {
        active_[keep++] = v;
      }
    }
    active_.resize(keep);
  }

  const graph& g_;
  const sim_params& params_;
  rng_t rng_;
  std::vector<std::uint8_t> infected_;
  std::vector<std::uint8_t> dormant_;
  std::vector<std::int32_t> viable_count_;
  std::vector<node_t> active_;       // viable nodes
  std::vector<node_t> susceptible_;  // uninfected, degree > 0
  std::vector<node_t> fresh_;
  std::int64_t infected_total_ = 0;
};

sim_state to_global(const sim_state& local, const std::vector<node_t>& to_original, node_t n) {
  sim_state out{std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0),
                std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0),
                std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0)};
  for (std::size_t v = 0; v < to_original.size(); ++v) {
    const node_t o = to_original[v];
    out.infected[o] = local.infected[v];
    out.dormant[o] = local.dormant[v];
    out.viable[o] = local.viable[v];
  }
  return out;
}

}  // namespace

sim_trace simulate(const graph& g, const contagion_labeling& labels, const sim_params& params,
                   std::optional<std::span<const node_t>> seeds, const step_observer& observer) {
  params.validate();
  labels.check_size(g.node_count());

  const auto mask = domain_mask(labels);
  std::vector<node_t> to_original;
  const graph arena = g.induced(mask, &to_original);
  std::vector<node_t> to_local(static_cast<std::size_t>(g.node_count()), -1);
  for (std::size_t v = 0; v < to_original.size(); ++v)
    to_local[to_original[v]] = static_cast<node_t>(v);

  std::vector<node_t> local_seeds;
  if (seeds) {
    for (node_t s : *seeds) {
      if (s < 0 || s >= g.node_count() || to_local[s] < 0)
        throw validation_error("seed node " + std::to_string(s) + " is outside the A u B domain");
      local_seeds.push_back(to_local[s]);
    }
  } else {
    for (node_t v = 0; v < g.node_count(); ++v)
      if (labels.is_A[v]) local_seeds.push_back(to_local[v]);
  }
  if (local_seeds.empty()) throw domain_error("no seeds");

  engine sim(arena, params);
  sim.seed(local_seeds);

  sim_trace trace;
  trace.seed = params.seed;
  trace.infected_count.reserve(static_cast<std::size_t>(params.steps) + 1);
  trace.infected_count.push_back(sim.infected_total());

  int t = 1;
  for (; t <= params.steps; ++t) {
    const bool live = sim.step();
    trace.infected_count.push_back(sim.infected_total());
    if (observer) observer(t, to_global(sim.local_state(), to_original, g.node_count()));
    if (!live) break;
  }
  if (t < params.steps) {
    // Infection has stopped; the count series is flat from here on.
    if (observer) {
      for (++t; t <= params.steps; ++t) {
        sim.finish_dormancy(1);
        trace.infected_count.push_back(sim.infected_total());
        observer(t, to_global(sim.local_state(), to_original, g.node_count()));
      }
    } else {
      sim.finish_dormancy(params.steps - t);
      trace.infected_count.resize(static_cast<std::size_t>(params.steps) + 1,
                                  trace.infected_count.back());
    }
  }

  trace.final_state = to_global(sim.local_state(), to_original, g.node_count());
  const std::int64_t initial = trace.infected_count.front();
  const std::int64_t candidates = static_cast<std::int64_t>(arena.node_count()) - initial;
  trace.converts = trace.infected_count.back() - initial;
  trace.depth = trace.converts;
  trace.yield = candidates > 0 ? static_cast<double>(trace.converts) / static_cast<double>(candidates) : 0.0;
  if (trace.converts > 0) {
    for (std::size_t i = 0; i < trace.infected_count.size(); ++i) {
      if (2 * (trace.infected_count[i] - initial) >= trace.converts) {
        trace.speed = static_cast<int>(i);
        break;
      }
    }
  }
  return trace;
}

std::vector<sim_trace> run_replicates(const graph& g, const contagion_labeling& labels,
                                      const sim_params& params, int replicates, unsigned threads,
                                      std::optional<std::span<const node_t>> seeds) {
  if (replicates < 1) throw validation_error("replicates must be >= 1");
  params.validate();
  std::vector<sim_trace> out(static_cast<std::size_t>(replicates));
  parallel_for(out.size(), threads, [&](std::size_t r) {
    sim_params local = params;
    local.seed = replicate_seed(params.seed, r);
    out[r] = simulate(g, labels, local, seeds);
  });
  return out;
}

}  // namespace multichrome
