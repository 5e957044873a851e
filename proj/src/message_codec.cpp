#include "rotxor/message_codec.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "rotxor/cipher.hpp"
#include "rotxor/errors.hpp"

namespace rotxor {

namespace {

constexpr std::string_view kHexDigits = "0123456789abcdef";
constexpr std::string_view kBase64Alphabet =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

// Printable ASCII without '#'.
constexpr std::array<std::uint8_t, 94> make_filler_alphabet() {
  std::array<std::uint8_t, 94> alphabet{};
  std::size_t n = 0;
  for (unsigned c = 0x20; c <= 0x7E; ++c) {
    if (c != kSentinel) alphabet[n++] = static_cast<std::uint8_t>(c);
  }
  return alphabet;
}

constexpr auto kFillerAlphabet = make_filler_alphabet();

std::uint8_t draw_filler(FillerRng& rng) {
  constexpr std::uint64_t n = kFillerAlphabet.size();
  constexpr std::uint64_t limit = FillerRng::max() - FillerRng::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return kFillerAlphabet[x % n];
}

int hex_value(std::uint8_t c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

int base64_value(std::uint8_t c) {
  const auto pos = kBase64Alphabet.find(static_cast<char>(c));
  return pos == std::string_view::npos ? -1 : static_cast<int>(pos);
}

std::span<const std::uint8_t> strip_trailing_newline(std::span<const std::uint8_t> in) {
  if (!in.empty() && in.back() == '\n') in = in.first(in.size() - 1);
  if (!in.empty() && in.back() == '\r') in = in.first(in.size() - 1);
  return in;
}

Bytes hex_encode(std::span<const std::uint8_t> in) {
  Bytes out;
  out.reserve(in.size() * 2);
  for (std::uint8_t b : in) {
    out.push_back(static_cast<std::uint8_t>(kHexDigits[b >> 4]));
    out.push_back(static_cast<std::uint8_t>(kHexDigits[b & 0x0F]));
  }
  return out;
}

Bytes hex_decode(std::span<const std::uint8_t> in) {
  if (in.size() % 2 != 0) throw DecodeError("odd-length hex input", in.size());
  Bytes out;
  out.reserve(in.size() / 2);
  for (std::size_t i = 0; i < in.size(); i += 2) {
    const int hi = hex_value(in[i]);
    if (hi < 0) throw DecodeError("invalid hex digit", i);
    const int lo = hex_value(in[i + 1]);
    if (lo < 0) throw DecodeError("invalid hex digit", i + 1);
    out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
  }
  return out;
}

Bytes base64_encode(std::span<const std::uint8_t> in) {
  Bytes out;
  out.reserve((in.size() + 2) / 3 * 4);
  std::size_t i = 0;
  for (; i + 3 <= in.size(); i += 3) {
    const std::uint32_t v = (std::uint32_t{in[i]} << 16) | (std::uint32_t{in[i + 1]} << 8) | in[i + 2];
    for (int shift = 18; shift >= 0; shift -= 6) {
      out.push_back(static_cast<std::uint8_t>(kBase64Alphabet[(v >> shift) & 0x3F]));
    }
  }
  const std::size_t rest = in.size() - i;
  if (rest > 0) {
    std::uint32_t v = std::uint32_t{in[i]} << 16;
    if (rest == 2) v |= std::uint32_t{in[i + 1]} << 8;
    out.push_back(static_cast<std::uint8_t>(kBase64Alphabet[(v >> 18) & 0x3F]));
    out.push_back(static_cast<std::uint8_t>(kBase64Alphabet[(v >> 12) & 0x3F]));
    out.push_back(rest == 2 ? static_cast<std::uint8_t>(kBase64Alphabet[(v >> 6) & 0x3F]) : '=');
    out.push_back('=');
  }
  return out;
}

Bytes base64_decode(std::span<const std::uint8_t> in) {
  if (in.size() % 4 != 0) throw DecodeError("base64 length not a multiple of 4", in.size());
  Bytes out;
  out.reserve(in.size() / 4 * 3);
  for (std::size_t i = 0; i < in.size(); i += 4) {
    const bool last = i + 4 == in.size();
    std::uint32_t v = 0;
    int pad = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      const std::uint8_t c = in[i + k];
      if (c == '=' && last && k >= 2) {
        ++pad;
        v <<= 6;
        continue;
      }
      const int d = base64_value(c);
      if (d < 0 || pad > 0) throw DecodeError("invalid base64 character", i + k);
      v = (v << 6) | static_cast<std::uint32_t>(d);
    }
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    if (pad < 2) out.push_back(static_cast<std::uint8_t>(v >> 8));
    if (pad < 1) out.push_back(static_cast<std::uint8_t>(v));
  }
  return out;
}

}  // namespace

Encoding parse_encoding(std::string_view name) {
  if (name == "raw") return Encoding::raw;
  if (name == "hex") return Encoding::hex;
  if (name == "base64") return Encoding::base64;
  throw std::invalid_argument("unknown encoding: " + std::string(name));
}

PaddedMessage pad_message(std::span<const std::uint8_t> message, FillerRng& filler) {
  const std::size_t total = padded_block_count(message.size()) * kBlockBytes;
  PaddedMessage padded;
  padded.bytes.reserve(total);
  padded.bytes.assign(message.begin(), message.end());
  padded.bytes.insert(padded.bytes.end(), kSentinelLength, kSentinel);
  while (padded.bytes.size() < total) padded.bytes.push_back(draw_filler(filler));
  return padded;
}

Bytes unpad_message(std::span<const std::uint8_t> padded) {
  if (padded.empty() || padded.size() % kBlockBytes != 0) {
    throw BlockSizeError("padded message length " + std::to_string(padded.size()) +
                         " is not a positive multiple of 64");
  }
  // Filler never exceeds 63 octets, so the last '#' sits within the final 64.
  const std::size_t scan_floor = padded.size() - kBlockBytes;
  std::size_t end = padded.size();
  while (end > scan_floor && padded[end - 1] != kSentinel) --end;
  if (end == scan_floor || padded[end - 1] != kSentinel) {
    throw PaddingError("padding sentinel not found in final block");
  }
  if (end < kSentinelLength || padded[end - 2] != kSentinel || padded[end - 3] != kSentinel) {
    throw PaddingError("incomplete padding sentinel");
  }
  return Bytes(padded.begin(), padded.begin() + static_cast<std::ptrdiff_t>(end - kSentinelLength));
}

CipherStream stream_from_bytes(std::span<const std::uint8_t> bytes) {
  if (bytes.empty() || bytes.size() % kBlockBytes != 0) {
    throw BlockSizeError("cipher stream length " + std::to_string(bytes.size()) +
                         " is not a positive multiple of 64");
  }
  CipherStream stream;
  stream.blocks.reserve(bytes.size() / kBlockBytes);
  for (std::size_t off = 0; off < bytes.size(); off += kBlockBytes) {
    stream.blocks.push_back(StateMatrix::from_bytes(bytes.subspan(off).first<kBlockBytes>()));
  }
  return stream;
}

Bytes stream_to_bytes(const CipherStream& stream) {
  Bytes out;
  out.reserve(stream.count() * kBlockBytes);
  for (const auto& block : stream.blocks) out.insert(out.end(), block.bytes().begin(), block.bytes().end());
  return out;
}

CipherStream encrypt_message(std::span<const std::uint8_t> message, const KeyMatrix& master,
                             FillerRng& filler) {
  const PaddedMessage padded = pad_message(message, filler);
  CipherStream stream = stream_from_bytes(padded.bytes);
  const auto keys = session_keys(master, stream.count());
  for (std::size_t n = 0; n < stream.count(); ++n) {
    stream.blocks[n] = encrypt_block(stream.blocks[n], keys[n]);
  }
  return stream;
}

Bytes decrypt_message(const CipherStream& stream, const KeyMatrix& master) {
  if (stream.count() == 0) throw BlockSizeError("empty cipher stream");
  const auto keys = session_keys(master, stream.count());
  Bytes plain;
  plain.reserve(stream.count() * kBlockBytes);
  for (std::size_t n = 0; n < stream.count(); ++n) {
    const StateMatrix block = decrypt_block(stream.blocks[n], keys[n]);
    plain.insert(plain.end(), block.bytes().begin(), block.bytes().end());
  }
  return unpad_message(plain);
}

Bytes encode_stream(const CipherStream& stream, Encoding encoding) {
  Bytes raw = stream_to_bytes(stream);
  switch (encoding) {
    case Encoding::raw:
      return raw;
    case Encoding::hex:
      return hex_encode(raw);
    case Encoding::base64:
      return base64_encode(raw);
  }
  return raw;
}

CipherStream decode_stream(std::span<const std::uint8_t> encoded, Encoding encoding) {
  switch (encoding) {
    case Encoding::raw:
      return stream_from_bytes(encoded);
    case Encoding::hex:
      return stream_from_bytes(hex_decode(strip_trailing_newline(encoded)));
    case Encoding::base64:
      return stream_from_bytes(base64_decode(strip_trailing_newline(encoded)));
  }
  return stream_from_bytes(encoded);
}

}  // namespace rotxor
