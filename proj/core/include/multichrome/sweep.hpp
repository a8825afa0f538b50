#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "multichrome/diffusion.hpp"
#include "multichrome/generators.hpp"

namespace multichrome {

struct sweep_record {
  std::string spec_id;
  double overlap_with_A = 0.0;
  double overlap_with_B = 0.0;
  node_t component_count = 0;
  double density = 0.0;
  double mean_yield = 0.0;
  double yield_stddev = 0.0;  // sample standard deviation over replicates
};

/// Generates every spec, measures frontier overlap, component count (on the
/// A u B arena) and density, then runs `replicates` simulations. The master
/// seed of spec s is sweep_seed(params.seed, s.seed), so a record depends only
/// on its own spec and never on the order of `specs` or on `threads`.
std::vector<sweep_record> run_sweep(const std::vector<generator_spec>& specs,
                                    const sim_params& params, int replicates, unsigned threads = 0);

constexpr std::uint64_t sweep_seed(std::uint64_t master, std::uint64_t spec_seed) noexcept {
  return derive_seed(master, "sweep", spec_seed);
}

/// Spearman rank correlation with average ranks for ties. Throws
/// domain_error on length mismatch, fewer than 3 points or a constant series.
double spearman(std::span<const double> x, std::span<const double> y);

/// Average (1-based) ranks, ties sharing the mean of their positions.
std::vector<double> average_ranks(std::span<const double> x);

/// Spearman coefficient of mean yield against each covariate; empty when the
/// coefficient is undefined (e.g. a constant column).
struct sweep_correlations {
  std::optional<double> overlap_with_A;
  std::optional<double> overlap_with_B;
  std::optional<double> components;
  std::optional<double> density;
};

sweep_correlations correlate(const std::vector<sweep_record>& records);

}  // namespace multichrome
