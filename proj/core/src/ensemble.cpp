#include "multichrome/ensemble.hpp"

#include <algorithm>
#include <string>

#include "multichrome/rng.hpp"

namespace multichrome {
namespace {

node_t draw_int(rng_t& rng, node_t lo, node_t hi) {
  return lo + static_cast<node_t>(uniform_index(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

double draw_real(rng_t& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

generator_spec monochrome(rng_t& rng, std::size_t i) {
  dense_frontier_spec s;
  s.a_size = draw_int(rng, 200, 1500);
  s.b_size = draw_int(rng, 200, 400);
  s.intra_a = 0.05;
  s.intra_b = draw_real(rng, 0.05, 0.4);
  // expected number of A neighbours per B node
  const double contact = draw_real(rng, 0.5, 4.0);
  s.inter = std::min(1.0, contact / s.a_size);
  return {"mono_" + std::to_string(i), s, rng()};
}

generator_spec multichrome_spec(rng_t& rng, std::size_t i) {
  static constexpr double intra[] = {0.0, 0.1, 0.2};
  fragmented_frontier_spec s;
  s.bridges = draw_int(rng, 0, 3);
  s.satellite_seeds = draw_int(rng, s.bridges > 0 ? 0 : 1, 2);
  s.a_size = draw_int(rng, 100, 400);
  s.intra_a = 0.05;
  s.satellites = draw_int(rng, 20, 100);
  s.satellite_size = draw_int(rng, 3, 12);
  s.intra_satellite = intra[uniform_index(rng, 3)];
  return {"multi_" + std::to_string(i), s, rng()};
}

}  // namespace

std::vector<generator_spec> mixed_ensemble(std::size_t count, std::uint64_t seed) {
  rng_t rng(derive_seed(seed, "mixed_ensemble"));
  std::vector<generator_spec> specs;
  specs.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    specs.push_back(i % 2 == 0 ? monochrome(rng, i) : multichrome_spec(rng, i));
  return specs;
}

std::vector<generator_spec> community_ensemble(std::size_t count, std::uint64_t seed) {
  rng_t rng(derive_seed(seed, "community_ensemble"));
  std::vector<generator_spec> specs;
  specs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    dense_frontier_spec s;
    const node_t total = draw_int(rng, 6000, 10000);
    s.a_size = static_cast<node_t>(total * draw_real(rng, 0.3, 0.5));
    s.b_size = total - s.a_size;
    s.intra_a = draw_real(rng, 4.0, 12.0) / s.a_size;
    s.intra_b = draw_real(rng, 4.0, 12.0) / s.b_size;
    s.inter = draw_real(rng, 4.0, 12.0) / s.a_size;
    specs.push_back({"community_" + std::to_string(i), s, rng()});
  }
  return specs;
}

}  // namespace multichrome
