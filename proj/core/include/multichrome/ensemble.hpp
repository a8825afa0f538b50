#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "multichrome/generators.hpp"

namespace multichrome {

/// Alternates two archetypes with randomly drawn parameters. Even indices are
/// monochrome: one dense B block wired directly into a large A community.
/// Odd indices are multichrome: many small, sparse B niches that hang off the
/// A community by a few bridges or carry their own A members (in which case
/// bridgeless niches become separate components). Spec ids are `mono_<i>` and
/// `multi_<i>`; the result is a pure function of (count, seed).
std::vector<generator_spec> mixed_ensemble(std::size_t count, std::uint64_t seed);

/// Connected two-community networks of 6,000 to 10,000 nodes where every B
/// node sees several A neighbours, sized like the empirical co-hashtag graphs.
std::vector<generator_spec> community_ensemble(std::size_t count, std::uint64_t seed);

}  // namespace multichrome
