#include "rotxor/key_schedule.hpp"

#include <algorithm>

#include "rotxor/errors.hpp"

namespace rotxor {

KeyMatrix::KeyMatrix(const Digits& digits) : digits_(digits) {
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] > 7) throw DigitError(i);
  }
}

bool KeyMatrix::is_weak() const noexcept {
  return std::all_of(digits_.begin(), digits_.end(),
                     [this](std::uint8_t d) { return d == digits_[0]; });
}

std::string KeyMatrix::to_string() const {
  std::string text(kBlockBytes, '0');
  for (std::size_t i = 0; i < kBlockBytes; ++i) text[i] = static_cast<char>('0' + digits_[i]);
  return text;
}

KeyMatrix parse_master_key(std::string_view text) {
  if (text.size() != kBlockBytes) throw LengthError(kBlockBytes, text.size());
  KeyMatrix::Digits digits{};
  for (std::size_t i = 0; i < kBlockBytes; ++i) {
    const char c = text[i];
    if (c < '0' || c > '7') throw DigitError(i);
    digits[i] = static_cast<std::uint8_t>(c - '0');
  }
  return KeyMatrix(digits);
}

KeyMatrix parse_key_file(std::string_view contents) {
  if (contents.ends_with("\r\n")) {
    contents.remove_suffix(2);
  } else if (contents.ends_with('\n')) {
    contents.remove_suffix(1);
  }
  return parse_master_key(contents);
}

KeyMatrix derive_round_key(const KeyMatrix& session_key, RoundIndex m) noexcept {
  const std::size_t shift = static_cast<std::size_t>(m.value() - 1);
  KeyMatrix::Digits out{};
  for (std::size_t i = 0; i < kGridSize; ++i) {
    for (std::size_t j = 0; j < kGridSize; ++j) {
      out[i * kGridSize + j] = session_key(i, (j + kGridSize - shift) % kGridSize);
    }
  }
  return KeyMatrix(out);
}

KeyMatrix next_session_key(const KeyMatrix& prev) noexcept {
  KeyMatrix::Digits out{};
  for (std::size_t i = 0; i < kGridSize; ++i) {
    for (std::size_t j = 0; j < kGridSize; ++j) {
      out[i * kGridSize + j] =
          static_cast<std::uint8_t>((prev(i, j) + prev(i, (j + 1) % kGridSize)) % 8);
    }
  }
  return KeyMatrix(out);
}

KeyMatrix session_key_for_block(const KeyMatrix& master, BlockIndex n) noexcept {
  KeyMatrix key = master;
  for (std::size_t step = 1; step < n.value(); ++step) key = next_session_key(key);
  return key;
}

std::vector<KeyMatrix> session_keys(const KeyMatrix& master, std::size_t count) {
  std::vector<KeyMatrix> keys;
  keys.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    keys.push_back(n == 0 ? master : next_session_key(keys.back()));
  }
  return keys;
}

}  // namespace rotxor
