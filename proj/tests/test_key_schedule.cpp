#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "rotxor/errors.hpp"
#include "rotxor/key_schedule.hpp"
#include "rotxor/random.hpp"

using namespace rotxor;

namespace {

KeyMatrix rows_of(std::array<std::uint8_t, 8> row) {
  KeyMatrix::Digits d{};
  for (std::size_t i = 0; i < 8; ++i) std::copy(row.begin(), row.end(), d.begin() + 8 * i);
  return KeyMatrix(d);
}

const KeyMatrix kCounting = rows_of({0, 1, 2, 3, 4, 5, 6, 7});

}  // namespace

TEST_CASE("parse_master_key") {
  CHECK(parse_master_key(std::string(64, '0')) == KeyMatrix{});

  std::string counting;
  for (int r = 0; r < 8; ++r) counting += "01234567";
  CHECK(parse_master_key(counting) == kCounting);
  CHECK(kCounting.to_string() == counting);

  try {
    parse_master_key(std::string(64, '8'));
    FAIL("expected DigitError");
  } catch (const DigitError& e) {
    CHECK(e.position() == 0);
  }

  std::string late = counting;
  late[37] = 'x';
  try {
    parse_master_key(late);
    FAIL("expected DigitError");
  } catch (const DigitError& e) {
    CHECK(e.position() == 37);
  }

  CHECK_THROWS_AS(parse_master_key(std::string(63, '1')), LengthError);
  CHECK_THROWS_AS(parse_master_key(std::string(65, '1')), LengthError);
  CHECK_THROWS_AS(parse_master_key(""), LengthError);
}

TEST_CASE("parse_key_file tolerates one trailing newline") {
  const std::string digits(64, '3');
  CHECK(parse_key_file(digits) == KeyMatrix::filled(3));
  CHECK(parse_key_file(digits + "\n") == KeyMatrix::filled(3));
  CHECK(parse_key_file(digits + "\r\n") == KeyMatrix::filled(3));
  CHECK_THROWS_AS(parse_key_file(digits + "\n\n"), LengthError);
}

TEST_CASE("KeyMatrix rejects digits above 7") {
  KeyMatrix::Digits d{};
  d[5] = 8;
  CHECK_THROWS_AS(KeyMatrix{d}, DigitError);
  CHECK_THROWS_AS(KeyMatrix::filled(9), std::out_of_range);
}

TEST_CASE("index types enforce their ranges") {
  CHECK_THROWS_AS(RoundIndex(0), std::out_of_range);
  CHECK_THROWS_AS(RoundIndex(9), std::out_of_range);
  CHECK_THROWS_AS(BlockIndex(0), std::out_of_range);
  CHECK(RoundIndex(8).value() == 8);
}

TEST_CASE("derive_round_key examples") {
  auto rng = trial_rng(21, 0);
  const KeyMatrix k = random_key(rng);
  CHECK(derive_round_key(k, RoundIndex(1)) == k);
  CHECK(derive_round_key(kCounting, RoundIndex(2)) == rows_of({7, 0, 1, 2, 3, 4, 5, 6}));
  CHECK(derive_round_key(kCounting, RoundIndex(8)) == rows_of({1, 2, 3, 4, 5, 6, 7, 0}));
}

TEST_CASE("next_session_key examples") {
  CHECK(next_session_key(KeyMatrix{}) == KeyMatrix{});
  CHECK(next_session_key(kCounting) == rows_of({1, 3, 5, 7, 1, 3, 5, 7}));
  CHECK(next_session_key(KeyMatrix::filled(7)) == KeyMatrix::filled(6));
}

TEST_CASE("session_key_for_block examples") {
  auto rng = trial_rng(22, 0);
  const KeyMatrix k = random_key(rng);
  CHECK(session_key_for_block(k, BlockIndex(1)) == k);
  CHECK(session_key_for_block(kCounting, BlockIndex(2)) == rows_of({1, 3, 5, 7, 1, 3, 5, 7}));
  for (std::size_t n : {1u, 2u, 17u, 100u}) CHECK(session_key_for_block(KeyMatrix{}, BlockIndex(n)) == KeyMatrix{});
}

TEST_CASE("key schedule properties on random keys") {
  for (std::uint64_t t = 0; t < 200; ++t) {
    auto rng = trial_rng(23, t);
    const KeyMatrix k = random_key(rng);

    // Each round key is a column rotation: per-row multisets are preserved.
    for (int m = 1; m <= 8; ++m) {
      const KeyMatrix sub = derive_round_key(k, RoundIndex(m));
      for (std::size_t i = 0; i < 8; ++i) {
        std::array<std::uint8_t, 8> a{}, b{};
        for (std::size_t j = 0; j < 8; ++j) {
          a[j] = k(i, j);
          b[j] = sub(i, j);
        }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        REQUIRE(a == b);
      }
    }

    // Chained keys match recomputation from the master key.
    const auto chain = session_keys(k, 20);
    REQUIRE(chain.size() == 20);
    for (std::size_t n = 1; n <= 20; ++n) REQUIRE(chain[n - 1] == session_key_for_block(k, BlockIndex(n)));
  }
}

TEST_CASE("distinct columns give eight distinct round keys") {
  std::set<std::string> keys;
  for (int m = 1; m <= 8; ++m) keys.insert(derive_round_key(kCounting, RoundIndex(m)).to_string());
  CHECK(keys.size() == 8);
}

TEST_CASE("weak keys") {
  CHECK(KeyMatrix{}.is_weak());
  CHECK(KeyMatrix::filled(5).is_weak());
  CHECK_FALSE(kCounting.is_weak());
}
