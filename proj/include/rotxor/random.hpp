#pragma once

#include <cstdint>
#include <random>

#include "rotxor/key_schedule.hpp"
#include "rotxor/state_matrix.hpp"

namespace rotxor {

/// Generator for trial `index` of a seeded run. Each trial gets its own
/// stream so trials can run in any order and still reproduce.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index);

/// Uniform integer in [0, bound), bound > 0. Rejection sampling over raw
/// generator output, so results do not depend on the standard library.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

StateMatrix random_state(std::mt19937_64& rng);
KeyMatrix random_key(std::mt19937_64& rng);

}  // namespace rotxor
