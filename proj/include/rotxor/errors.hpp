#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rotxor {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Key text had the wrong number of characters.
class LengthError : public Error {
 public:
  LengthError(std::size_t expected, std::size_t actual)
      : Error("key must be " + std::to_string(expected) + " digits, got " +
              std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}

  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

// Key text contained a character outside '0'..'7'.
class DigitError : public Error {
 public:
  explicit DigitError(std::size_t position)
      : Error("invalid key digit at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// The "###" sentinel was not found where it must be. Usually a wrong key.
class PaddingError : public Error {
 public:
  using Error::Error;
};

class BlockSizeError : public Error {
 public:
  using Error::Error;
};

// Malformed hex/base64 input; position is the offending input offset.
class DecodeError : public Error {
 public:
  DecodeError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class SingularMapError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace rotxor
