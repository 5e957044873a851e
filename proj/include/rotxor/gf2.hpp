#pragma once

#include <bitset>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace rotxor::gf2 {

template <std::size_t N>
using BitVector = std::bitset<N>;

/// Dense square matrix over GF(2), one bitset per row.
template <std::size_t N>
class BitMatrix {
 public:
  using Row = std::bitset<N>;

  BitMatrix() : rows_(N) {}

  static BitMatrix identity() {
    BitMatrix m;
    for (std::size_t i = 0; i < N; ++i) m.rows_[i].set(i);
    return m;
  }

  static constexpr std::size_t size() noexcept { return N; }

  bool operator()(std::size_t row, std::size_t col) const { return rows_[row][col]; }
  void set(std::size_t row, std::size_t col, bool value = true) { rows_[row].set(col, value); }

  const Row& row(std::size_t r) const { return rows_[r]; }
  Row& row(std::size_t r) { return rows_[r]; }

  BitVector<N> column(std::size_t c) const {
    BitVector<N> out;
    for (std::size_t r = 0; r < N; ++r) out.set(r, rows_[r][c]);
    return out;
  }

  void set_column(std::size_t c, const BitVector<N>& values) {
    for (std::size_t r = 0; r < N; ++r) rows_[r].set(c, values[r]);
  }

  std::size_t column_weight(std::size_t c) const {
    std::size_t w = 0;
    for (std::size_t r = 0; r < N; ++r) w += rows_[r][c];
    return w;
  }

  std::size_t weight() const {
    std::size_t w = 0;
    for (const auto& r : rows_) w += r.count();
    return w;
  }

  BitVector<N> operator*(const BitVector<N>& x) const {
    BitVector<N> y;
    for (std::size_t r = 0; r < N; ++r) y.set(r, (rows_[r] & x).count() & 1u);
    return y;
  }

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix c;
    for (std::size_t r = 0; r < N; ++r) {
      for (std::size_t k = 0; k < N; ++k) {
        if (a.rows_[r][k]) c.rows_[r] ^= b.rows_[k];
      }
    }
    return c;
  }

  BitMatrix& operator+=(const BitMatrix& other) {
    for (std::size_t r = 0; r < N; ++r) rows_[r] ^= other.rows_[r];
    return *this;
  }
  friend BitMatrix operator+(BitMatrix a, const BitMatrix& b) { return a += b; }

  BitMatrix transpose() const {
    BitMatrix t;
    for (std::size_t r = 0; r < N; ++r) {
      for (std::size_t c = 0; c < N; ++c) {
        if (rows_[r][c]) t.rows_[c].set(r);
      }
    }
    return t;
  }

  BitMatrix power(std::size_t exponent) const {
    BitMatrix result = identity();
    BitMatrix base = *this;
    while (exponent > 0) {
      if (exponent & 1u) result = result * base;
      base = base * base;
      exponent >>= 1;
    }
    return result;
  }

  std::size_t rank() const {
    auto work = rows_;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < N && rank < N; ++col) {
      std::size_t pivot = rank;
      while (pivot < N && !work[pivot][col]) ++pivot;
      if (pivot == N) continue;
      std::swap(work[rank], work[pivot]);
      for (std::size_t r = rank + 1; r < N; ++r) {
        if (work[r][col]) work[r] ^= work[rank];
      }
      ++rank;
    }
    return rank;
  }

  bool is_nonsingular() const { return rank() == N; }

  /// Gauss-Jordan inverse; nullopt if singular.
  std::optional<BitMatrix> inverse() const {
    auto work = rows_;
    BitMatrix inv = identity();
    for (std::size_t col = 0; col < N; ++col) {
      std::size_t pivot = col;
      while (pivot < N && !work[pivot][col]) ++pivot;
      if (pivot == N) return std::nullopt;
      std::swap(work[col], work[pivot]);
      std::swap(inv.rows_[col], inv.rows_[pivot]);
      for (std::size_t r = 0; r < N; ++r) {
        if (r != col && work[r][col]) {
          work[r] ^= work[col];
          inv.rows_[r] ^= inv.rows_[col];
        }
      }
    }
    return inv;
  }

  /// Solves A x = b by elimination on the augmented system; nullopt if A is singular.
  std::optional<BitVector<N>> solve(const BitVector<N>& b) const {
    auto work = rows_;
    BitVector<N> rhs = b;
    for (std::size_t col = 0; col < N; ++col) {
      std::size_t pivot = col;
      while (pivot < N && !work[pivot][col]) ++pivot;
      if (pivot == N) return std::nullopt;
      if (pivot != col) {
        std::swap(work[col], work[pivot]);
        const bool t = rhs[col];
        rhs.set(col, rhs[pivot]);
        rhs.set(pivot, t);
      }
      for (std::size_t r = 0; r < N; ++r) {
        if (r != col && work[r][col]) {
          work[r] ^= work[col];
          if (rhs[col]) rhs.flip(r);
        }
      }
    }
    return rhs;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::vector<Row> rows_;
};

}  // namespace rotxor::gf2
