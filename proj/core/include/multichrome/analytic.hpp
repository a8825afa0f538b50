#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace multichrome {

/// Expected cumulative conversions seeded by m active converts in an
/// unbounded, fully connected audience, or saturation when spreading
/// outpaces dormancy.
class capacity {
 public:
  static capacity full() noexcept { return capacity(true, 0.0); }
  static capacity finite(double v) noexcept { return capacity(false, v); }

  bool is_full() const noexcept { return full_; }
  /// Throws domain_error when saturated.
  double value() const;
  /// min(limit, value), with saturation mapping to limit.
  double clamp(double limit) const noexcept { return full_ ? limit : (value_ < limit ? value_ : limit); }

  friend bool operator==(const capacity&, const capacity&) = default;

 private:
  capacity(bool full, double v) noexcept : full_(full), value_(v) {}
  bool full_;
  double value_;
};

/// Sum of p*m*(1 + p - tau)^j over j >= 0: p*m / (tau - p) for p < tau,
/// saturated for p >= tau. No seeds (m = 0) or no spreading (p = 0) gives 0.
capacity branching_capacity(double p, double tau, double m);

/// min(n, branching_capacity(p, tau, m)). Throws validation_error for m > n.
double audience_capacity(std::int64_t n, std::int64_t m, double p, double tau);

struct broadcaster {
  std::int64_t audience = 0;  // n_i
  std::int64_t converts = 0;  // m_i
};

struct audience_model {
  std::vector<broadcaster> broadcasters;
  double p = 0.0;
  double tau = 0.0;

  std::size_t k() const noexcept { return broadcasters.size(); }
  void validate() const;
};

/// V_i for every broadcaster.
std::vector<double> carrying_capacities(const audience_model& model);

/// y(i) = V_i + p * sum_{j != i} V_j. Throws domain_error when i >= k.
double expected_yield_connected(std::size_t i, const audience_model& model);

enum class regime { disconnected, connected };

/// Broadcaster to seed. Both regimes pick the largest V_i because
/// y(i) = (1 - p) V_i + p sum_j V_j is increasing in V_i for p < 1; ties go
/// to the lowest index.
std::size_t select_broadcaster(const audience_model& model, regime r);

struct oracle_estimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::uint64_t runs = 0;
};

/// Monte Carlo estimate of the total number of new converts produced by m
/// independent active individuals. Every step each active individual
/// independently converts one newcomer with probability p and goes dormant
/// with probability tau; newcomers become active in turn and there is no
/// audience cap. Requires p < tau (or p = 0) so that runs terminate.
/// Results depend only on `seed`, not on `threads`.
oracle_estimate branching_oracle(double p, double tau, std::int64_t m, std::uint64_t runs,
                                 std::uint64_t seed, unsigned threads = 0);

}  // namespace multichrome
