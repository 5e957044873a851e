#pragma once

#include <bit>
#include <cassert>
#include <cstdint>

#include "rotxor/key_schedule.hpp"
#include "rotxor/state_matrix.hpp"

namespace rotxor {

constexpr std::uint8_t rotate_octet_right(std::uint8_t b, unsigned r) noexcept {
  assert(r < 8);
  return std::rotr(b, static_cast<int>(r));
}

constexpr std::uint8_t rotate_octet_left(std::uint8_t b, unsigned r) noexcept {
  assert(r < 8);
  return std::rotl(b, static_cast<int>(r));
}

/// Right-rotates every cell by the matching key digit.
StateMatrix rotate_layer_encrypt(const StateMatrix& state, const KeyMatrix& key) noexcept;

/// Left-rotates every cell by the matching key digit.
StateMatrix rotate_layer_decrypt(const StateMatrix& state, const KeyMatrix& key) noexcept;

/// XOR of every cell with itself and its four toroidal neighbours. All
/// outputs are computed from the input state (no in-place propagation).
StateMatrix xor_layer_encrypt(const StateMatrix& state) noexcept;

/// Inverse of xor_layer_encrypt.
///
/// Writing the XOR layer as I + N over GF(2), where N sums the four unit
/// cyclic shifts, N^8 = 0 on the 8x8 torus and so
///   (I + N)^-1 = (I + N)(I + N^2)(I + N^4).
/// N^(2^k) is again a plus-shaped stencil with arm length 2^k, which is what
/// this applies three times.
StateMatrix xor_layer_decrypt(const StateMatrix& state) noexcept;

/// XOR of the four cells at distance `distance` along the row and column
/// (the action of N^distance for distance a power of two).
StateMatrix neighbor_sum(const StateMatrix& state, std::size_t distance) noexcept;

/// Eight rounds; round m right-rotates by derive_round_key(session_key, m)
/// and then applies the XOR layer.
StateMatrix encrypt_block(const StateMatrix& state, const KeyMatrix& session_key) noexcept;

/// Exact inverse of encrypt_block for the same session key.
StateMatrix decrypt_block(const StateMatrix& state, const KeyMatrix& session_key) noexcept;

}  // namespace rotxor
