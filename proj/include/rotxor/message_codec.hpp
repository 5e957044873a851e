#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "rotxor/key_schedule.hpp"
#include "rotxor/state_matrix.hpp"

namespace rotxor {

using Bytes = std::vector<std::uint8_t>;

/// Random source for padding filler. Owned by the caller.
using FillerRng = std::mt19937_64;

inline constexpr std::uint8_t kSentinel = 0x23;  // '#'
inline constexpr std::size_t kSentinelLength = 3;

/// Message followed by "###" and random filler, a positive multiple of 64 bytes.
struct PaddedMessage {
  Bytes bytes;
};

struct CipherStream {
  std::vector<StateMatrix> blocks;

  std::size_t count() const noexcept { return blocks.size(); }
  friend bool operator==(const CipherStream&, const CipherStream&) = default;
};

enum class Encoding { raw, hex, base64 };

/// Parses "raw", "hex" or "base64".
Encoding parse_encoding(std::string_view name);

/// Number of 64-byte blocks a message of `length` bytes pads to.
constexpr std::size_t padded_block_count(std::size_t length) noexcept {
  return (length + kSentinelLength + kBlockBytes - 1) / kBlockBytes;
}

/// Appends "###" unconditionally, then filler drawn from printable ASCII
/// (0x20..0x7E) other than '#' up to the next multiple of 64.
PaddedMessage pad_message(std::span<const std::uint8_t> message, FillerRng& filler);

/// Scans back from the end over filler, requires "###", and returns
/// everything before it. Throws BlockSizeError or PaddingError.
Bytes unpad_message(std::span<const std::uint8_t> padded);

/// Pads, splits row-major into blocks and encrypts block n under the n-th
/// session key.
CipherStream encrypt_message(std::span<const std::uint8_t> message, const KeyMatrix& master,
                             FillerRng& filler);

/// Throws PaddingError on a wrong key or corrupted stream.
Bytes decrypt_message(const CipherStream& stream, const KeyMatrix& master);

/// Splits bytes into blocks; throws BlockSizeError unless the length is a
/// positive multiple of 64.
CipherStream stream_from_bytes(std::span<const std::uint8_t> bytes);
Bytes stream_to_bytes(const CipherStream& stream);

/// raw: identity. hex: lowercase, two digits per octet. base64: standard
/// alphabet with '=' padding.
Bytes encode_stream(const CipherStream& stream, Encoding encoding);

/// Inverse of encode_stream. A single trailing newline is tolerated for the
/// text encodings. Throws DecodeError or BlockSizeError.
CipherStream decode_stream(std::span<const std::uint8_t> encoded, Encoding encoding);

}  // namespace rotxor
