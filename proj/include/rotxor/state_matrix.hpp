#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace rotxor {

inline constexpr std::size_t kGridSize = 8;
inline constexpr std::size_t kBlockBytes = kGridSize * kGridSize;
inline constexpr std::size_t kBlockBits = kBlockBytes * 8;

/// One 64-byte block as an 8x8 grid of octets, row-major.
class StateMatrix {
 public:
  using Cells = std::array<std::uint8_t, kBlockBytes>;

  constexpr StateMatrix() noexcept : cells_{} {}
  constexpr explicit StateMatrix(const Cells& cells) noexcept : cells_(cells) {}

  static StateMatrix from_bytes(std::span<const std::uint8_t, kBlockBytes> bytes) noexcept {
    StateMatrix s;
    std::copy(bytes.begin(), bytes.end(), s.cells_.begin());
    return s;
  }

  static constexpr StateMatrix filled(std::uint8_t value) noexcept {
    StateMatrix s;
    s.cells_.fill(value);
    return s;
  }

  constexpr std::uint8_t& operator()(std::size_t row, std::size_t col) noexcept {
    return cells_[row * kGridSize + col];
  }
  constexpr std::uint8_t operator()(std::size_t row, std::size_t col) const noexcept {
    return cells_[row * kGridSize + col];
  }

  constexpr std::uint8_t& operator[](std::size_t index) noexcept { return cells_[index]; }
  constexpr std::uint8_t operator[](std::size_t index) const noexcept { return cells_[index]; }

  constexpr const Cells& cells() const noexcept { return cells_; }
  std::span<const std::uint8_t, kBlockBytes> bytes() const noexcept { return cells_; }

  // Bit addressing used by the analysis code: bit index 8*cell + b, b = 0 is the LSB.
  constexpr bool bit(std::size_t index) const noexcept {
    return (cells_[index / 8] >> (index % 8)) & 1u;
  }
  constexpr void flip_bit(std::size_t index) noexcept {
    cells_[index / 8] ^= static_cast<std::uint8_t>(1u << (index % 8));
  }

  constexpr StateMatrix& operator^=(const StateMatrix& other) noexcept {
    for (std::size_t i = 0; i < kBlockBytes; ++i) cells_[i] ^= other.cells_[i];
    return *this;
  }
  friend constexpr StateMatrix operator^(StateMatrix a, const StateMatrix& b) noexcept {
    a ^= b;
    return a;
  }

  friend constexpr bool operator==(const StateMatrix&, const StateMatrix&) = default;

 private:
  Cells cells_;
};

/// Number of differing bits between two states.
std::size_t hamming_distance(const StateMatrix& a, const StateMatrix& b) noexcept;

}  // namespace rotxor
