#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rotxor/state_matrix.hpp"

namespace rotxor {

inline constexpr std::size_t kRounds = 8;

/// 8x8 grid of key digits in 0..7. Used for the master key, the per-block
/// session keys and the per-round sub-keys.
class KeyMatrix {
 public:
  using Digits = std::array<std::uint8_t, kBlockBytes>;

  constexpr KeyMatrix() noexcept : digits_{} {}

  // Throws DigitError if any entry is above 7.
  explicit KeyMatrix(const Digits& digits);

  static constexpr KeyMatrix filled(std::uint8_t digit) {
    KeyMatrix k;
    if (digit > 7) throw std::out_of_range("key digit must be in 0..7");
    k.digits_.fill(digit);
    return k;
  }

  constexpr std::uint8_t operator()(std::size_t row, std::size_t col) const noexcept {
    return digits_[row * kGridSize + col];
  }
  constexpr std::uint8_t operator[](std::size_t index) const noexcept { return digits_[index]; }

  constexpr const Digits& digits() const noexcept { return digits_; }

  // Every digit the same (includes the all-zero key, under which every
  // rotation layer is the identity).
  bool is_weak() const noexcept;

  /// 64 row-major characters '0'..'7'.
  std::string to_string() const;

  friend constexpr bool operator==(const KeyMatrix&, const KeyMatrix&) = default;

 private:
  Digits digits_;
};

/// Round number m in 1..8.
class RoundIndex {
 public:
  constexpr explicit RoundIndex(int m) : m_(m) {
    if (m < 1 || m > static_cast<int>(kRounds)) throw std::out_of_range("round index must be in 1..8");
  }
  constexpr int value() const noexcept { return m_; }

 private:
  int m_;
};

/// Data block number n >= 1.
class BlockIndex {
 public:
  constexpr explicit BlockIndex(std::size_t n) : n_(n) {
    if (n < 1) throw std::out_of_range("block index must be >= 1");
  }
  constexpr std::size_t value() const noexcept { return n_; }

 private:
  std::size_t n_;
};

/// Reads a master key from exactly 64 characters '0'..'7', row-major.
/// Throws LengthError or DigitError.
KeyMatrix parse_master_key(std::string_view text);

/// Reads key-file contents: the 64 digits with an optional trailing newline.
KeyMatrix parse_key_file(std::string_view contents);

/// Sub-key for round m: columns of the session key shifted right by m-1,
/// out(i, j) = session(i, (j - m + 1) mod 8).
KeyMatrix derive_round_key(const KeyMatrix& session_key, RoundIndex m) noexcept;

/// Session key chaining: out(i, j) = (prev(i, j) + prev(i, (j + 1) mod 8)) mod 8.
KeyMatrix next_session_key(const KeyMatrix& prev) noexcept;

/// Applies next_session_key n-1 times; block 1 uses the master key itself.
KeyMatrix session_key_for_block(const KeyMatrix& master, BlockIndex n) noexcept;

/// Session keys for blocks 1..count, computed incrementally (count-1 chain steps).
std::vector<KeyMatrix> session_keys(const KeyMatrix& master, std::size_t count);

}  // namespace rotxor
