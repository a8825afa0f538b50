// Acceptance suite. Prints one PASS/FAIL line per criterion; arguments select
// criteria by name. Exit status is nonzero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "multichrome/analytic.hpp"
#include "multichrome/diffusion.hpp"
#include "multichrome/ensemble.hpp"
#include "multichrome/generators.hpp"
#include "multichrome/graph.hpp"
#include "multichrome/multiplex.hpp"
#include "multichrome/profile.hpp"
#include "multichrome/sweep.hpp"
#include "oracles.hpp"

using namespace multichrome;

namespace {

struct outcome {
  bool pass = false;
  std::string detail;
};

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

std::string fmt(double x, int digits = 4) {
  std::ostringstream s;
  s.precision(digits);
  s << x;
  return s.str();
}

outcome full_diffusion() {
  const auto start = clock_type::now();
  erdos_renyi_spec er;
  er.n = 1000;
  er.p = 0.01;
  er.a_fraction = 0.05;
  const auto net = generate({"full", er, 1});
  if (connected_components(net.g).count != 1) return {false, "generated graph is not connected"};

  sim_params params;
  params.steps = 20000;
  params.dormancy_rate = 0.0;
  params.diffusion_scale = 0.01;
  params.seed = 1;
  const auto runs = run_replicates(net.g, net.labels, params, 100);
  const auto candidates = static_cast<std::int64_t>(viable_candidates(net.labels).size());
  int complete = 0;
  int slowest = 0;
  for (const auto& t : runs) {
    if (t.converts == candidates) ++complete;
    const auto it = std::find(t.infected_count.begin(), t.infected_count.end(), t.infected_count.back());
    slowest = std::max(slowest, static_cast<int>(it - t.infected_count.begin()));
  }
  const double elapsed = seconds_since(start);
  return {complete == 100 && elapsed < 60.0,
          std::to_string(complete) + "/100 replicates fully converted " + std::to_string(candidates) +
              " candidates, slowest at t=" + std::to_string(slowest) + ", " + fmt(elapsed, 3) + " s"};
}

outcome branching_closed_form() {
  const auto start = clock_type::now();
  struct point {
    double p, tau;
    std::int64_t m;
  };
  const std::vector<point> grid{{0.004, 0.008, 50}, {0.005, 0.01, 10}, {0.002, 0.01, 100}};
  bool ok = true;
  std::string detail;
  std::uint64_t seed = 1;
  for (const auto& g : grid) {
    const double expected = g.p * static_cast<double>(g.m) / (g.tau - g.p);
    const auto est = branching_oracle(g.p, g.tau, g.m, 1'000'000, seed++);
    const double rel = std::abs(est.mean - expected) / expected;
    ok = ok && rel <= 0.03;
    detail += "(" + fmt(g.p) + "," + fmt(g.tau) + "," + std::to_string(g.m) + "): " + fmt(est.mean, 6) +
              " vs " + fmt(expected, 6) + " rel " + fmt(rel, 2) + "; ";
  }
  const double elapsed = seconds_since(start);
  return {ok && elapsed < 30.0, detail + fmt(elapsed, 3) + " s"};
}

outcome targeting_dominance() {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> k_dist(1, 12), n_dist(1, 2000);
  int agree = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    audience_model model;
    model.tau = 0.001 + 0.2 * unit(rng);
    model.p = std::min(0.999, model.tau * 1.5 * unit(rng));
    const int k = k_dist(rng);
    for (int i = 0; i < k; ++i) {
      const std::int64_t n = n_dist(rng);
      const std::int64_t m = std::uniform_int_distribution<std::int64_t>(0, n)(rng);
      model.broadcasters.push_back({n, m});
    }
    // independent argmax of y(i) computed from the definition
    const auto v = carrying_capacities(model);
    double total = 0.0;
    for (double x : v) total += x;
    std::size_t best = 0;
    double best_y = -1.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const double y = v[i] + model.p * (total - v[i]);
      if (y > best_y) {
        best_y = y;
        best = i;
      }
    }
    const auto best_v = static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
    if (best == best_v && select_broadcaster(model, regime::connected) == best) ++agree;
  }
  return {agree == 1000, std::to_string(agree) + "/1000 models agree"};
}

outcome sign_reproduction() {
  const auto start = clock_type::now();
  const auto specs = mixed_ensemble(100, 2024);
  sim_params params;
  params.steps = 400;
  params.dormancy_rate = 0.005;
  params.diffusion_scale = 0.01;
  params.seed = 7;
  const auto records = run_sweep(specs, params, 100);
  const auto rho = correlate(records);
  const double elapsed = seconds_since(start);

  bool ok = elapsed < 600.0;
  std::string detail;
  auto check = [&](const char* name, const std::optional<double>& r, int sign) {
    const bool good = r && *r * sign > 0 && std::abs(*r) >= 0.2;
    ok = ok && good;
    detail += std::string(name) + "=" + (r ? fmt(*r, 3) : std::string("undefined")) + (good ? "" : "(x)") + " ";
  };
  check("overlap_with_A", rho.overlap_with_A, +1);
  check("overlap_with_B", rho.overlap_with_B, -1);
  check("components", rho.components, +1);
  check("density", rho.density, -1);
  return {ok, detail + fmt(elapsed, 3) + " s"};
}

outcome yield_band() {
  const auto specs = community_ensemble(10, 2024);
  sim_params params;
  params.steps = 400;
  params.dormancy_rate = 0.005;
  params.diffusion_scale = 0.01;
  params.seed = 7;
  bool ok = true;
  double lo = 1.0, hi = 0.0, total = 0.0;
  for (const auto& s : specs) {
    const auto net = generate(s);
    ok = ok && connected_components(net.g).count == 1;
  }
  const auto records = run_sweep(specs, params, 20);
  for (const auto& r : records) {
    lo = std::min(lo, r.mean_yield);
    hi = std::max(hi, r.mean_yield);
    total += r.mean_yield;
    ok = ok && r.mean_yield >= 0.6 && r.mean_yield <= 0.95;
  }
  return {ok, std::to_string(records.size()) + " connected networks, mean yield " +
                  fmt(total / static_cast<double>(records.size()), 3) + " (range " + fmt(lo, 3) + " to " +
                  fmt(hi, 3) + ")"};
}

outcome bimodality() {
  broadcaster_star_spec star;
  star.audience = {300, 50, 50};
  star.converts = {1, 0, 0};
  star.links = weak_links::ring;
  const auto net = generate({"bimodal", star, 5});
  sim_params params;
  params.steps = 3000;
  params.dormancy_rate = 0.005;
  params.diffusion_scale = 0.01;
  params.seed = 99;
  const auto runs = run_replicates(net.g, net.labels, params, 500);
  std::vector<double> x;
  for (const auto& t : runs) x.push_back(static_cast<double>(t.converts));
  std::sort(x.begin(), x.end());

  // exact two-cluster split of sorted data minimizing within-cluster squared error
  std::vector<double> prefix(x.size() + 1, 0.0), prefix2(x.size() + 1, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    prefix[i + 1] = prefix[i] + x[i];
    prefix2[i + 1] = prefix2[i] + x[i] * x[i];
  }
  auto sse = [&](std::size_t a, std::size_t b) {
    const double n = static_cast<double>(b - a), s = prefix[b] - prefix[a];
    return prefix2[b] - prefix2[a] - s * s / n;
  };
  std::size_t cut = 1;
  double best = INFINITY;
  for (std::size_t c = 2; c + 2 <= x.size(); ++c) {
    const double e = sse(0, c) + sse(c, x.size());
    if (e < best) {
      best = e;
      cut = c;
    }
  }
  auto mode = [&](std::size_t a, std::size_t b) {
    const double n = static_cast<double>(b - a);
    const double mean = (prefix[b] - prefix[a]) / n;
    return std::pair{mean, std::sqrt(sse(a, b) / (n - 1))};
  };
  const auto [m0, sd0] = mode(0, cut);
  const auto [m1, sd1] = mode(cut, x.size());
  const double separation = m1 - m0;
  const double spread = std::max(sd0, sd1);
  return {separation > 4.0 * spread, "modes " + fmt(m0, 4) + " (n=" + std::to_string(cut) + ", sd " + fmt(sd0, 3) +
                                         ") and " + fmt(m1, 4) + " (n=" + std::to_string(x.size() - cut) +
                                         ", sd " + fmt(sd1, 3) + "), separation/sd " + fmt(separation / spread, 3)};
}

outcome scoring_units() {
  bool ok = true;
  std::string failures;
  auto expect = [&](bool cond, const char* what) {
    if (!cond) failures += std::string(what) + " ";
    ok = ok && cond;
  };
  expect(ideology_score({1, 0, 0, 0, 0}) == -2.0, "ideology(left)");
  expect(std::abs(ideology_score({0.2, 0.2, 0.2, 0.2, 0.2})) <= 1e-12, "ideology(uniform)");
  expect(source_entropy({{"a.com", 7}}) == 0.0, "entropy(single)");
  expect(std::abs(source_entropy({{"a", 3}, {"b", 3}, {"c", 3}, {"d", 3}}) - std::log(4.0)) <= 1e-12,
         "entropy(uniform-4)");
  expect(!is_bot(0.5), "bot(0.5)");
  expect(is_bot(std::nextafter(0.5, 1.0)), "bot(0.5+)");
  return {ok, ok ? "ideology, entropy and bot threshold" : failures};
}

outcome oracle_equivalence() {
  // fixture suite: structured graphs plus seeded random graphs, N <= 64
  std::vector<graph> fixtures{testing::path_graph(2),     testing::path_graph(17),
                              testing::star_graph(10),    testing::complete_graph(12),
                              testing::complete_graph(64), testing::make({}, false, 5)};
  for (bool directed : {false, true})
    for (node_t n : {3, 8, 16, 33, 64})
      for (double p : {0.03, 0.1, 0.3})
        for (std::uint64_t seed = 0; seed < 4; ++seed)
          fixtures.push_back(testing::random_graph(n, p, directed, seed * 7919 + static_cast<std::uint64_t>(n)));
  std::size_t matched = 0;
  for (const auto& g : fixtures) {
    const auto fast = betweenness(g);
    const auto slow = testing::brute_force_betweenness(g);
    bool same = fast.size() == slow.size();
    for (std::size_t v = 0; same && v < fast.size(); ++v)
      same = std::abs(fast[v] - slow[v]) <= 1e-9 * std::max(1.0, std::abs(slow[v]));
    if (same) ++matched;
  }

  const testing::complete_graph_chain chain{10, 0.3};
  const int steps = 4;
  const auto g = testing::complete_graph(10);
  contagion_labeling labels(10);
  labels.is_A[0] = 1;
  for (node_t v = 1; v < 10; ++v) labels.is_B[v] = 1;
  sim_params params;
  params.steps = steps;
  params.dormancy_rate = 0.0;
  params.diffusion_scale = chain.p;
  params.seed = 10;
  const auto runs = run_replicates(g, labels, params, 100'000);
  double mean = 0.0;
  for (const auto& t : runs) mean += static_cast<double>(t.infected_count.back());
  mean /= static_cast<double>(runs.size());
  const double expected = chain.mean_infected(steps);
  const double rel = std::abs(mean - expected) / expected;

  return {matched == fixtures.size() && rel <= 0.01,
          "betweenness " + std::to_string(matched) + "/" + std::to_string(fixtures.size()) +
              " graphs; K_10 mean final size " + fmt(mean, 6) + " vs chain " + fmt(expected, 6) + " rel " +
              fmt(rel, 2)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<outcome()>>> criteria{
      {"full_diffusion", full_diffusion},         {"branching_closed_form", branching_closed_form},
      {"targeting_dominance", targeting_dominance}, {"sign_reproduction", sign_reproduction},
      {"yield_band", yield_band},                 {"bimodality", bimodality},
      {"scoring_units", scoring_units},           {"oracle_equivalence", oracle_equivalence},
  };
  std::vector<std::string> selected(argv + 1, argv + argc);
  for (const auto& name : selected)
    if (std::none_of(criteria.begin(), criteria.end(), [&](const auto& c) { return c.first == name; })) {
      std::fprintf(stderr, "unknown criterion '%s'\n", name.c_str());
      return 2;
    }

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), name) == selected.end()) continue;
    outcome r;
    try {
      r = check();
    } catch (const std::exception& e) {
      r = {false, std::string("error: ") + e.what()};
    }
    std::printf("%s %s: %s\n", r.pass ? "PASS" : "FAIL", name.c_str(), r.detail.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
