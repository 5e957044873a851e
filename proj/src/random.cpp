#include "rotxor/random.hpp"

namespace rotxor {

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

StateMatrix random_state(std::mt19937_64& rng) {
  StateMatrix s;
  for (std::size_t i = 0; i < kBlockBytes; i += 8) {
    std::uint64_t word = rng();
    for (std::size_t k = 0; k < 8; ++k, word >>= 8) s[i + k] = static_cast<std::uint8_t>(word);
  }
  return s;
}

KeyMatrix random_key(std::mt19937_64& rng) {
  KeyMatrix::Digits digits{};
  for (std::size_t i = 0; i < kBlockBytes; i += 16) {
    std::uint64_t word = rng();
    for (std::size_t k = 0; k < 16; ++k, word >>= 3) digits[i + k] = static_cast<std::uint8_t>(word & 7u);
  }
  return KeyMatrix(digits);
}

}  // namespace rotxor
