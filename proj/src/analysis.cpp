#include "rotxor/analysis.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "rotxor/cipher.hpp"
#include "rotxor/errors.hpp"
#include "rotxor/random.hpp"

namespace rotxor {

namespace {

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return ec == std::errc{} ? std::string(buf.data(), end) : std::string("nan");
}

struct RatioStats {
  std::uint64_t total = 0;
  std::size_t trials = 0;
  std::size_t min = std::numeric_limits<std::size_t>::max();
  std::size_t max = 0;
  double sum_sq = 0.0;

  void add(std::size_t flipped) {
    total += flipped;
    ++trials;
    min = std::min(min, flipped);
    max = std::max(max, flipped);
    const double r = static_cast<double>(flipped) / kBlockBits;
    sum_sq += r * r;
  }

  void fill(AvalancheReport& report) const {
    report.trials = trials;
    report.flipped_bits_total = total;
    report.flipped_ratio_mean = static_cast<double>(total) / (static_cast<double>(trials) * kBlockBits);
    report.flipped_ratio_min = static_cast<double>(min) / kBlockBits;
    report.flipped_ratio_max = static_cast<double>(max) / kBlockBits;
    const double mean = report.flipped_ratio_mean;
    report.flipped_ratio_stddev = std::sqrt(std::max(0.0, sum_sq / static_cast<double>(trials) - mean * mean));
  }
};

// Flip of plaintext bit `position` on state s, measured once on s and once
// on an unrelated state t.
std::pair<std::size_t, bool> plaintext_trial(const KeyMatrix& key, std::mt19937_64& rng,
                                             std::size_t position) {
  StateMatrix s = random_state(rng);
  StateMatrix t = random_state(rng);
  const StateMatrix base_s = encrypt_block(s, key);
  const StateMatrix base_t = encrypt_block(t, key);
  s.flip_bit(position);
  t.flip_bit(position);
  const std::size_t ds = hamming_distance(base_s, encrypt_block(s, key));
  const std::size_t dt = hamming_distance(base_t, encrypt_block(t, key));
  return {ds, ds == dt};
}

double mean_of(const std::vector<double>& xs) {
  double sum = 0.0;
  for (double x : xs) sum += x;
  return xs.empty() ? 0.0 : sum / static_cast<double>(xs.size());
}

}  // namespace

StateBits to_bits(const StateMatrix& state) {
  StateBits bits;
  for (std::size_t i = 0; i < kBlockBits; ++i) bits.set(i, state.bit(i));
  return bits;
}

StateMatrix from_bits(const StateBits& bits) {
  StateMatrix state;
  for (std::size_t i = 0; i < kBlockBits; ++i) {
    if (bits[i]) state.flip_bit(i);
  }
  return state;
}

StateMatrix apply(const LinearMap512& map, const StateMatrix& state) {
  return from_bits(map * to_bits(state));
}

LinearityResult linearity_check(const BlockFunction& f, std::size_t trials, std::uint64_t seed) {
  LinearityResult result;
  const StateMatrix zero;
  if (f(zero) != zero) {
    result.holds = false;
    result.counterexample = std::pair{zero, zero};
    return result;
  }
  for (std::size_t trial = 0; trial < trials; ++trial) {
    auto rng = trial_rng(seed, trial);
    const StateMatrix x = random_state(rng);
    const StateMatrix y = random_state(rng);
    ++result.trials;
    if (f(x ^ y) != (f(x) ^ f(y))) {
      result.holds = false;
      result.counterexample = std::pair{x, y};
      break;
    }
  }
  return result;
}

LinearityResult linearity_check(const KeyMatrix& session_key, std::size_t trials, std::uint64_t seed) {
  return linearity_check([&](const StateMatrix& s) { return encrypt_block(s, session_key); }, trials,
                         seed);
}

LinearMap512 recover_linear_map(const BlockFunction& oracle) {
  LinearMap512 map;
  for (std::size_t c = 0; c < kBlockBits; ++c) {
    StateMatrix basis;
    basis.flip_bit(c);
    map.set_column(c, to_bits(oracle(basis)));
  }
  if (!map.is_nonsingular()) throw SingularMapError("recovered map is singular");
  return map;
}

StateMatrix kpa_decrypt(const LinearMap512& map, const StateMatrix& ciphertext_block) {
  auto solution = map.solve(to_bits(ciphertext_block));
  if (!solution) throw SingularMapError("cannot solve: map is singular");
  return from_bits(*solution);
}

AvalancheReport avalanche_plaintext(const KeyMatrix& session_key, std::size_t trials, std::uint64_t seed) {
  AvalancheReport report;
  report.kind = "plaintext";
  report.seed = seed;
  RatioStats stats;
  bool independent = true;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    auto rng = trial_rng(seed, trial);
    const std::size_t position = uniform_below(rng, kBlockBits);
    const auto [flipped, same] = plaintext_trial(session_key, rng, position);
    stats.add(flipped);
    independent = independent && same;
  }
  stats.fill(report);
  report.content_independent = independent;
  return report;
}

AvalancheReport avalanche_plaintext_sweep(const KeyMatrix& session_key, std::uint64_t seed) {
  AvalancheReport report;
  report.kind = "plaintext-sweep";
  report.seed = seed;
  RatioStats stats;
  bool independent = true;
  for (std::size_t position = 0; position < kBlockBits; ++position) {
    auto rng = trial_rng(seed, position);
    const auto [flipped, same] = plaintext_trial(session_key, rng, position);
    stats.add(flipped);
    independent = independent && same;
  }
  stats.fill(report);
  report.content_independent = independent;
  return report;
}

AvalancheReport avalanche_key(const KeyMatrix& master, std::size_t trials, std::uint64_t seed) {
  AvalancheReport report;
  report.kind = "key";
  report.seed = seed;
  RatioStats stats;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    auto rng = trial_rng(seed, trial);
    const StateMatrix s = random_state(rng);
    const std::size_t position = uniform_below(rng, kBlockBytes);
    KeyMatrix::Digits digits = master.digits();
    // One of the seven other digits.
    digits[position] = static_cast<std::uint8_t>((digits[position] + 1 + uniform_below(rng, 7)) % 8);
    const KeyMatrix changed(digits);
    stats.add(hamming_distance(encrypt_block(s, master), encrypt_block(s, changed)));
  }
  stats.fill(report);
  return report;
}

std::size_t first_zero_session_block(const KeyMatrix& master) {
  KeyMatrix key = master;
  std::size_t n = 1;
  while (key != KeyMatrix{}) {
    key = next_session_key(key);
    ++n;
  }
  return n;
}

RepeatedBlockReport repeated_block_report(const KeyMatrix& master, const StateMatrix& content,
                                          std::size_t block_count) {
  RepeatedBlockReport report;
  report.block_count = block_count;
  report.first_zero_session_block = first_zero_session_block(master);
  const auto keys = session_keys(master, block_count);
  std::vector<StateMatrix> ciphertexts;
  ciphertexts.reserve(block_count);
  for (const auto& key : keys) ciphertexts.push_back(encrypt_block(content, key));
  for (std::size_t a = 0; a < block_count; ++a) {
    for (std::size_t b = a + 1; b < block_count; ++b) {
      if (ciphertexts[a] == ciphertexts[b]) report.collisions.emplace_back(a + 1, b + 1);
    }
  }
  return report;
}

TimingReport bench_throughput(std::size_t block_count, double noise_threshold) {
  using Clock = std::chrono::steady_clock;
  constexpr std::size_t kClasses = 3;
  constexpr std::size_t kRepeat = 16;
  constexpr std::size_t kWarmup = 2000;

  auto rng = trial_rng(0, 0);
  const KeyMatrix key = random_key(rng);

  std::array<std::vector<StateMatrix>, kClasses> inputs;
  for (std::size_t n = 0; n < block_count; ++n) {
    inputs[0].push_back(StateMatrix{});
    inputs[1].push_back(StateMatrix::filled(static_cast<std::uint8_t>(rng())));
    inputs[2].push_back(random_state(rng));
  }

  volatile std::uint8_t sink = 0;
  StateMatrix acc;
  for (std::size_t i = 0; i < kWarmup; ++i) acc ^= encrypt_block(inputs[2][i % block_count], key);

  std::array<std::vector<double>, kClasses> samples;
  for (auto& s : samples) s.reserve(block_count);
  for (std::size_t n = 0; n < block_count; ++n) {
    // Rotate the class order so no class always runs first.
    for (std::size_t k = 0; k < kClasses; ++k) {
      const std::size_t cls = (n + k) % kClasses;
      const StateMatrix& block = inputs[cls][n];
      const auto start = Clock::now();
      for (std::size_t r = 0; r < kRepeat; ++r) acc ^= encrypt_block(block, key);
      const auto stop = Clock::now();
      samples[cls].push_back(std::chrono::duration<double, std::nano>(stop - start).count() / kRepeat);
    }
  }
  sink = acc[0];
  (void)sink;

  TimingReport report;
  report.noise_threshold = noise_threshold;
  report.mean_ns_zero = mean_of(samples[0]);
  report.mean_ns_uniform = mean_of(samples[1]);
  report.mean_ns_random = mean_of(samples[2]);

  std::vector<double> all;
  all.reserve(block_count * kClasses);
  for (const auto& s : samples) all.insert(all.end(), s.begin(), s.end());
  report.blocks_timed = all.size();
  report.mean_ns = mean_of(all);
  report.min_ns = *std::min_element(all.begin(), all.end());
  report.max_ns = *std::max_element(all.begin(), all.end());
  double var = 0.0;
  for (double x : all) var += (x - report.mean_ns) * (x - report.mean_ns);
  report.stddev_ns = std::sqrt(var / static_cast<double>(all.size()));

  const auto [lo, hi] = std::minmax({report.mean_ns_zero, report.mean_ns_uniform, report.mean_ns_random});
  report.class_spread = (hi - lo) / lo;
  return report;
}

KeyspaceReport keyspace_report() noexcept {
  // 64^8 = (2^6)^8 and 8^64 = (2^3)^64.
  return KeyspaceReport{6 * 8, 3 * 64};
}

std::string to_key_value(const AvalancheReport& report) {
  std::ostringstream out;
  out << "kind=" << report.kind << '\n'
      << "trials=" << report.trials << '\n'
      << "seed=" << report.seed << '\n'
      << "flipped_bits_total=" << report.flipped_bits_total << '\n'
      << "flipped_ratio_mean=" << format_double(report.flipped_ratio_mean) << '\n'
      << "flipped_ratio_min=" << format_double(report.flipped_ratio_min) << '\n'
      << "flipped_ratio_max=" << format_double(report.flipped_ratio_max) << '\n'
      << "flipped_ratio_stddev=" << format_double(report.flipped_ratio_stddev) << '\n';
  if (report.content_independent) {
    out << "content_independent=" << (*report.content_independent ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string to_key_value(const LinearityResult& result) {
  std::ostringstream out;
  out << "trials=" << result.trials << '\n'
      << "counterexamples=" << (result.counterexample ? 1 : 0) << '\n'
      << "result=" << (result.holds ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string to_key_value(const RepeatedBlockReport& report) {
  std::ostringstream out;
  out << "block_count=" << report.block_count << '\n'
      << "colliding_pairs=" << report.collisions.size() << '\n';
  for (const auto& [a, b] : report.collisions) out << "collision=" << a << ',' << b << '\n';
  out << "pairwise_distinct=" << (report.all_distinct() ? "true" : "false") << '\n'
      << "first_zero_session_block=" << report.first_zero_session_block << '\n';
  return out.str();
}

std::string to_key_value(const TimingReport& report) {
  std::ostringstream out;
  out << "blocks_timed=" << report.blocks_timed << '\n'
      << "mean_ns=" << format_double(report.mean_ns) << '\n'
      << "stddev_ns=" << format_double(report.stddev_ns) << '\n'
      << "min_ns=" << format_double(report.min_ns) << '\n'
      << "max_ns=" << format_double(report.max_ns) << '\n'
      << "mean_ns_zero=" << format_double(report.mean_ns_zero) << '\n'
      << "mean_ns_uniform=" << format_double(report.mean_ns_uniform) << '\n'
      << "mean_ns_random=" << format_double(report.mean_ns_random) << '\n'
      << "class_spread=" << format_double(report.class_spread) << '\n'
      << "noise_threshold=" << format_double(report.noise_threshold) << '\n'
      << "data_independence=" << (report.data_independent() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string to_key_value(const KeyspaceReport& report) {
  std::ostringstream out;
  out << "claimed_count=64^8\n"
      << "claimed_log2=2^" << report.claimed_log2 << '\n'
      << "structural_count=8^64\n"
      << "structural_log2=2^" << report.structural_log2 << '\n'
      << "discrepancy=" << (report.discrepancy() ? "true" : "false") << '\n';
  if (report.discrepancy()) {
    out << "note=claimed 64^8 counts 8 positions over 64 symbols; a 64-digit key over 0..7 has 8^64\n";
  }
  return out.str();
}

}  // namespace rotxor
