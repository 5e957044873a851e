#include "rotxor/cipher.hpp"

namespace rotxor {

StateMatrix rotate_layer_encrypt(const StateMatrix& state, const KeyMatrix& key) noexcept {
  StateMatrix out;
  for (std::size_t i = 0; i < kBlockBytes; ++i) out[i] = rotate_octet_right(state[i], key[i]);
  return out;
}

StateMatrix rotate_layer_decrypt(const StateMatrix& state, const KeyMatrix& key) noexcept {
  StateMatrix out;
  for (std::size_t i = 0; i < kBlockBytes; ++i) out[i] = rotate_octet_left(state[i], key[i]);
  return out;
}

StateMatrix neighbor_sum(const StateMatrix& state, std::size_t distance) noexcept {
  StateMatrix out;
  for (std::size_t i = 0; i < kGridSize; ++i) {
    const std::size_t up = (i + kGridSize - distance % kGridSize) % kGridSize;
    const std::size_t down = (i + distance) % kGridSize;
    for (std::size_t j = 0; j < kGridSize; ++j) {
      const std::size_t left = (j + kGridSize - distance % kGridSize) % kGridSize;
      const std::size_t right = (j + distance) % kGridSize;
      out(i, j) = static_cast<std::uint8_t>(state(up, j) ^ state(down, j) ^ state(i, left) ^
                                            state(i, right));
    }
  }
  return out;
}

StateMatrix xor_layer_encrypt(const StateMatrix& state) noexcept {
  return state ^ neighbor_sum(state, 1);
}

StateMatrix xor_layer_decrypt(const StateMatrix& state) noexcept {
  StateMatrix out = state;
  for (std::size_t distance : {1u, 2u, 4u}) out ^= neighbor_sum(out, distance);
  return out;
}

StateMatrix encrypt_block(const StateMatrix& state, const KeyMatrix& session_key) noexcept {
  StateMatrix out = state;
  for (int m = 1; m <= static_cast<int>(kRounds); ++m) {
    out = xor_layer_encrypt(rotate_layer_encrypt(out, derive_round_key(session_key, RoundIndex(m))));
  }
  return out;
}

StateMatrix decrypt_block(const StateMatrix& state, const KeyMatrix& session_key) noexcept {
  StateMatrix out = state;
  for (int m = static_cast<int>(kRounds); m >= 1; --m) {
    out = rotate_layer_decrypt(xor_layer_decrypt(out), derive_round_key(session_key, RoundIndex(m)));
  }
  return out;
}

}  // namespace rotxor
