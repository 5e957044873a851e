#include "rotxor/state_matrix.hpp"

#include <bit>

namespace rotxor {

std::size_t hamming_distance(const StateMatrix& a, const StateMatrix& b) noexcept {
  std::size_t bits = 0;
  for (std::size_t i = 0; i < kBlockBytes; ++i) {
    bits += static_cast<std::size_t>(std::popcount(static_cast<std::uint8_t>(a[i] ^ b[i])));
  }
  return bits;
}

}  // namespace rotxor
