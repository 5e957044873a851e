#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rotxor/gf2.hpp"
#include "rotxor/key_schedule.hpp"
#include "rotxor/state_matrix.hpp"

namespace rotxor {

using BlockFunction = std::function<StateMatrix(const StateMatrix&)>;

/// The cipher under one session key as a 512x512 matrix over GF(2).
/// Column c is the image of the state with only bit c set (bit c is bit
/// c % 8 of cell c / 8).
using LinearMap512 = gf2::BitMatrix<kBlockBits>;
using StateBits = gf2::BitVector<kBlockBits>;

StateBits to_bits(const StateMatrix& state);
StateMatrix from_bits(const StateBits& bits);

StateMatrix apply(const LinearMap512& map, const StateMatrix& state);

// ---------------------------------------------------------------------------
// Linearity

struct LinearityResult {
  bool holds = true;
  std::size_t trials = 0;
  // First failing (x, y) pair; x == y == 0 flags E(0) != 0.
  std::optional<std::pair<StateMatrix, StateMatrix>> counterexample;
};

/// Checks f(0) = 0 and f(x ^ y) = f(x) ^ f(y) on `trials` random pairs.
LinearityResult linearity_check(const BlockFunction& f, std::size_t trials, std::uint64_t seed);
LinearityResult linearity_check(const KeyMatrix& session_key, std::size_t trials, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Chosen-plaintext map recovery

/// Queries `oracle` on the 512 basis states. Throws SingularMapError if the
/// result is not invertible.
LinearMap512 recover_linear_map(const BlockFunction& oracle);

/// Solves map * x = ciphertext without the key. Throws SingularMapError.
StateMatrix kpa_decrypt(const LinearMap512& map, const StateMatrix& ciphertext_block);

// ---------------------------------------------------------------------------
// Avalanche

struct AvalancheReport {
  std::string kind;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t flipped_bits_total = 0;
  double flipped_ratio_mean = 0.0;
  double flipped_ratio_min = 0.0;
  double flipped_ratio_max = 0.0;
  double flipped_ratio_stddev = 0.0;
  // Plaintext reports only: every trial's difference was reproduced from a
  // second, unrelated state (expected for a linear cipher).
  std::optional<bool> content_independent;

  friend bool operator==(const AvalancheReport&, const AvalancheReport&) = default;
};

/// Random state and random plaintext bit per trial.
AvalancheReport avalanche_plaintext(const KeyMatrix& session_key, std::size_t trials, std::uint64_t seed);

/// One trial per plaintext bit position 0..511, each on its own random state.
AvalancheReport avalanche_plaintext_sweep(const KeyMatrix& session_key, std::uint64_t seed);

/// Random state and one key digit changed to a different random digit per trial.
AvalancheReport avalanche_key(const KeyMatrix& master, std::size_t trials, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Repeated content across blocks

struct RepeatedBlockReport {
  std::size_t block_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> collisions;  // 1-based block numbers
  // First block whose session key is all zero (every later block then uses
  // the zero key too). The chaining map is nilpotent mod 8, so this is at
  // most 17 for every master key.
  std::size_t first_zero_session_block = 0;

  bool all_distinct() const noexcept { return collisions.empty(); }
};

/// First block number n with session_key_for_block(master, n) all zero.
std::size_t first_zero_session_block(const KeyMatrix& master);

/// Encrypts `content` as blocks 1..block_count and lists colliding pairs.
RepeatedBlockReport repeated_block_report(const KeyMatrix& master, const StateMatrix& content,
                                          std::size_t block_count);

// ---------------------------------------------------------------------------
// Timing

inline constexpr double kDefaultNoiseThreshold = 0.20;

struct TimingReport {
  std::size_t blocks_timed = 0;
  double mean_ns = 0.0;
  double stddev_ns = 0.0;
  double min_ns = 0.0;
  double max_ns = 0.0;
  double mean_ns_zero = 0.0;
  double mean_ns_uniform = 0.0;
  double mean_ns_random = 0.0;
  // (largest class mean - smallest) / smallest
  double class_spread = 0.0;
  double noise_threshold = kDefaultNoiseThreshold;

  bool data_independent() const noexcept { return class_spread < noise_threshold; }
};

/// Times encrypt_block on `block_count` blocks of each content class
/// (all-zero, uniform, random), interleaved. block_count >= 100.
TimingReport bench_throughput(std::size_t block_count, double noise_threshold = kDefaultNoiseThreshold);

// ---------------------------------------------------------------------------
// Key space

struct KeyspaceReport {
  unsigned claimed_log2 = 0;     // 64^8
  unsigned structural_log2 = 0;  // 8^64

  bool discrepancy() const noexcept { return claimed_log2 != structural_log2; }
};

KeyspaceReport keyspace_report() noexcept;

// ---------------------------------------------------------------------------
// key=value serialization, one field per line

std::string to_key_value(const AvalancheReport& report);
std::string to_key_value(const LinearityResult& result);
std::string to_key_value(const RepeatedBlockReport& report);
std::string to_key_value(const TimingReport& report);
std::string to_key_value(const KeyspaceReport& report);

}  // namespace rotxor
