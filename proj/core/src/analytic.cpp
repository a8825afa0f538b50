#include "multichrome/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "multichrome/error.hpp"
#include "multichrome/parallel.hpp"
#include "multichrome/rng.hpp"

namespace multichrome {

double capacity::value() const {
  if (full_) throw domain_error("capacity is saturated");
  return value_;
}

capacity branching_capacity(double p, double tau, double m) {
  if (m < 0) throw validation_error("seed count must be >= 0");
  if (m == 0 || p == 0) return capacity::finite(0.0);
  if (p >= tau) return capacity::full();
  return capacity::finite(p * m / (tau - p));
}

double audience_capacity(std::int64_t n, std::int64_t m, double p, double tau) {
  if (m < 0 || n < 0) throw validation_error("audience and converts must be >= 0");
  if (m > n) throw validation_error("converts (" + std::to_string(m) + ") exceed audience size (" +
                                    std::to_string(n) + ")");
  return branching_capacity(p, tau, static_cast<double>(m)).clamp(static_cast<double>(n));
}

void audience_model::validate() const {
  if (!(p >= 0.0 && p <= 1.0)) throw validation_error("p must lie in [0, 1]");
  if (!(tau >= 0.0 && tau <= 1.0)) throw validation_error("tau must lie in [0, 1]");
  for (std::size_t i = 0; i < broadcasters.size(); ++i) {
    const auto& b = broadcasters[i];
    if (b.audience < 0 || b.converts < 0 || b.converts > b.audience)
      throw validation_error("broadcaster " + std::to_string(i) + ": need 0 <= m <= n");
  }
}

std::vector<double> carrying_capacities(const audience_model& model) {
  model.validate();
  std::vector<double> v;
  v.reserve(model.k());
  for (const auto& b : model.broadcasters)
    v.push_back(audience_capacity(b.audience, b.converts, model.p, model.tau));
  return v;
}

double expected_yield_connected(std::size_t i, const audience_model& model) {
  if (i >= model.k())
    throw domain_error("broadcaster index " + std::to_string(i) + " out of range for k = " +
                       std::to_string(model.k()));
  const auto v = carrying_capacities(model);
  double others = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (j != i) others += v[j];
  return v[i] + model.p * others;
}

std::size_t select_broadcaster(const audience_model& model, regime) {
  if (model.k() == 0) throw domain_error("no broadcasters");
  const auto v = carrying_capacities(model);
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[best]) best = i;
  return best;
}

namespace {

// Steps survived up to and including the dormancy step: Geometric(tau) on {1, 2, ...}.
std::int64_t lifetime(rng_t& rng, double log_stay) {
  if (log_stay == -INFINITY) return 1;
  const double u = 1.0 - uniform01(rng);
  return 1 + static_cast<std::int64_t>(std::floor(std::log(u) / log_stay));
}

// Binomial(trials, p) by inversion of the cumulative mass function.
std::int64_t binomial(rng_t& rng, std::int64_t trials, double p) {
  const double q0 = std::exp(static_cast<double>(trials) * std::log1p(-p));
  if (q0 <= 0.0) {
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < trials; ++i) hits += bernoulli(rng, p) ? 1 : 0;
    return hits;
  }
  const double odds = p / (1.0 - p);
  double u = uniform01(rng);
  double mass = q0;
  std::int64_t k = 0;
  while (u >= mass && k < trials) {
    u -= mass;
    mass *= odds * static_cast<double>(trials - k) / static_cast<double>(k + 1);
    ++k;
  }
  return k;
}

}  // namespace

oracle_estimate branching_oracle(double p, double tau, std::int64_t m, std::uint64_t runs,
                                 std::uint64_t seed, unsigned threads) {
  if (!(p >= 0.0 && p <= 1.0) || !(tau >= 0.0 && tau <= 1.0))
    throw validation_error("p and tau must lie in [0, 1]");
  if (m < 0) throw validation_error("seed count must be >= 0");
  if (runs == 0) throw validation_error("runs must be >= 1");
  if (p > 0.0 && p >= tau) throw domain_error("branching oracle needs p < tau to terminate");

  constexpr std::uint64_t chunk = 4096;
  const std::uint64_t chunks = (runs + chunk - 1) / chunk;
  std::vector<double> sum(chunks, 0.0);
  std::vector<double> sum_sq(chunks, 0.0);
  const double log_stay = tau >= 1.0 ? -INFINITY : std::log1p(-tau);

  parallel_for(chunks, threads, [&](std::size_t c) {
    rng_t rng(derive_seed(seed, "branching", c));
    const std::uint64_t begin = c * chunk;
    const std::uint64_t end = std::min(runs, begin + chunk);
    for (std::uint64_t r = begin; r < end; ++r) {
      std::int64_t pending = m;
      std::int64_t total = 0;
      while (pending > 0 && p > 0.0) {
        --pending;
        const std::int64_t born = binomial(rng, lifetime(rng, log_stay), p);
        total += born;
        pending += born;
      }
      const auto x = static_cast<double>(total);
      sum[c] += x;
      sum_sq[c] += x * x;
    }
  });

  double s = 0.0;
  double s2 = 0.0;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    s += sum[c];
    s2 += sum_sq[c];
  }
  const auto n = static_cast<double>(runs);
  oracle_estimate est;
  est.runs = runs;
  est.mean = s / n;
  const double var = runs > 1 ? std::max(0.0, (s2 - n * est.mean * est.mean) / (n - 1)) : 0.0;
  est.standard_error = std::sqrt(var / n);
  return est;
}

}  // namespace multichrome
