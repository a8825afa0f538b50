#include "multichrome/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "multichrome/error.hpp"
#include "multichrome/parallel.hpp"

namespace multichrome {

std::vector<sweep_record> run_sweep(const std::vector<generator_spec>& specs,
                                    const sim_params& params, int replicates, unsigned threads) {
  if (replicates < 1) throw validation_error("replicates must be >= 1");
  params.validate();
  for (const auto& s : specs) validate(s);

  std::vector<sweep_record> out(specs.size());
  parallel_for(specs.size(), threads, [&](std::size_t i) {
    const auto& spec = specs[i];
    const auto net = generate(spec);
    const auto report = frontier(net.g, net.labels);
    const auto arena = net.g.induced(domain_mask(net.labels));

    sweep_record rec;
    rec.spec_id = spec.id;
    rec.overlap_with_A = report.overlap_with_A;
    rec.overlap_with_B = report.overlap_with_B;
    rec.component_count = connected_components(arena).count;
    rec.density = density(net.g);

    sim_params local = params;
    local.seed = sweep_seed(params.seed, spec.seed);
    // Replicates run serially here; parallelism is across specs.
    const auto traces = run_replicates(net.g, net.labels, local, replicates, 1);
    double sum = 0.0;
    for (const auto& t : traces) sum += t.yield;
    rec.mean_yield = sum / replicates;
    double ss = 0.0;
    for (const auto& t : traces) ss += (t.yield - rec.mean_yield) * (t.yield - rec.mean_yield);
    rec.yield_stddev = replicates > 1 ? std::sqrt(ss / (replicates - 1)) : 0.0;
    out[i] = std::move(rec);
  });
  return out;
}

std::vector<double> average_ranks(std::span<const double> x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return x[a] < x[b]; });
  std::vector<double> ranks(x.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && x[order[j + 1]] == x[order[i]]) ++j;
    const double shared = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
    i = j + 1;
  }
  return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw domain_error("spearman: series lengths differ");
  if (x.size() < 3) throw domain_error("spearman: need at least 3 points");
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  // Pearson correlation of the ranks; exact under ties.
  const double n = static_cast<double>(x.size());
  const double mean = (n + 1.0) / 2.0;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mean) * (ry[i] - mean);
    sxx += (rx[i] - mean) * (rx[i] - mean);
    syy += (ry[i] - mean) * (ry[i] - mean);
  }
  if (sxx == 0.0 || syy == 0.0) throw domain_error("spearman: constant series");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

sweep_correlations correlate(const std::vector<sweep_record>& records) {
  std::vector<double> yield, ova, ovb, comp, dens;
  for (const auto& r : records) {
    yield.push_back(r.mean_yield);
    ova.push_back(r.overlap_with_A);
    ovb.push_back(r.overlap_with_B);
    comp.push_back(static_cast<double>(r.component_count));
    dens.push_back(r.density);
  }
  auto rho = [&](const std::vector<double>& x) -> std::optional<double> {
    try {
      return spearman(yield, x);
    } catch (const domain_error&) {
      return std::nullopt;
    }
  };
  return {rho(ova), rho(ovb), rho(comp), rho(dens)};
}

}  // namespace multichrome
