#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace testing {

// Infected-count chain for one seed on K_n with tau = 0: from k infected,
// each of the n - k others converts independently with probability
// p * k / (n - 1), so the next state is k + Binomial(n - k, p k / (n - 1)).
struct complete_graph_chain {
  int n;
  double p;

  double transition(int k, int j) const {
    if (j < k) return 0.0;
    const int trials = n - k;
    const int hits = j - k;
    const double q = p * k / (n - 1);
    return std::exp(std::lgamma(trials + 1.0) - std::lgamma(hits + 1.0) - std::lgamma(trials - hits + 1.0)) *
           std::pow(q, hits) * std::pow(1.0 - q, trials - hits);
  }

  // Distribution over k = 0..n after `steps` steps from a single seed.
  std::vector<double> distribution(int steps) const {
    std::vector<double> pi(static_cast<std::size_t>(n) + 1, 0.0);
    pi[1] = 1.0;
    for (int t = 0; t < steps; ++t) {
      std::vector<double> next(pi.size(), 0.0);
      for (int k = 1; k <= n; ++k)
        for (int j = k; j <= n; ++j) next[j] += pi[k] * transition(k, j);
      pi = next;
    }
    return pi;
  }

  double mean_infected(int steps) const {
    const auto pi = distribution(steps);
    double m = 0.0;
    for (int k = 0; k <= n; ++k) m += k * pi[k];
    return m;
  }

  // Expected number of steps until all n are infected, by backward solution
  // of E_k = (1 + sum_{j>k} P_kj E_j) / (1 - P_kk).
  double mean_time_to_full() const {
    std::vector<double> e(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = n - 1; k >= 1; --k) {
      double acc = 1.0;
      for (int j = k + 1; j <= n; ++j) acc += transition(k, j) * e[j];
      e[k] = acc / (1.0 - transition(k, k));
    }
    return e[1];
  }
};

// Mean and standard error of a sample.
struct sample_stats {
  double mean = 0.0;
  double standard_error = 0.0;
};

template <class Range>
sample_stats summarize(const Range& xs) {
  double s = 0.0, s2 = 0.0, n = 0.0;
  for (double x : xs) {
    s += x;
    s2 += x * x;
    n += 1.0;
  }
  sample_stats out;
  out.mean = s / n;
  out.standard_error = n > 1 ? std::sqrt(std::max(0.0, (s2 - n * out.mean * out.mean) / (n - 1)) / n) : 0.0;
  return out;
}

}  // namespace testing
