#include <doctest.h>

#include <random>

#include "hdo/errors.hpp"
#include "hdo/symbols.hpp"
#include "test_util.hpp"

using namespace hdo;

TEST_CASE("ingest_bytes maps bytes to codes") {
  CHECK(ingest_bytes("").size() == 0);
  const auto ab = ingest_bytes("ab");
  REQUIRE(ab.size() == 2);
  CHECK(ab[0].code == 97);
  CHECK(ab[1].code == 98);
  const auto hi = ingest_bytes(std::string_view("\xFF\x00", 2));
  REQUIRE(hi.size() == 2);
  CHECK(hi[0].code == 255);
  CHECK(hi[1].code == 0);
}

TEST_CASE("ingest_bytes round-trips every byte sequence") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::string raw(rng() % 300, '\0');
    for (auto& c : raw) c = static_cast<char>(rng() & 0xFF);
    const Text t = ingest_bytes(raw);
    std::string back;
    for (Symbol c : t) back.push_back(static_cast<char>(c.code));
    CHECK(back == raw);
  }
}

TEST_CASE("ingest_tokens parses decimal codes") {
  CHECK(ingest_tokens("7 7 1000000") == Text::from_codes(std::vector<std::uint32_t>{7, 7, 1000000}));
  CHECK(ingest_tokens("").empty());
  CHECK(ingest_tokens("  \n\t ").empty());
  CHECK(ingest_tokens("4294967294").size() == 1);
}

TEST_CASE("ingest_tokens rejects malformed and reserved tokens") {
  CHECK_THROWS_AS(ingest_tokens("5 x"), ParseError);
  CHECK_THROWS_AS(ingest_tokens("5x"), ParseError);
  CHECK_THROWS_AS(ingest_tokens("-1"), ParseError);
  CHECK_THROWS_AS(ingest_tokens("4294967295"), ParseError);
  CHECK_THROWS_AS(ingest_tokens("99999999999999999999999"), ParseError);
}

TEST_CASE("ingest_tokens inverts render_tokens") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Symbol> v(rng() % 50);
    for (auto& c : v) c = Symbol{static_cast<std::uint32_t>(rng() % 0xFFFFFFFFull)};
    const Text t(std::move(v));
    CHECK(ingest_tokens(render_tokens(t)) == t);
  }
}

TEST_CASE("Text rejects the sentinel") {
  CHECK_THROWS_AS(Text(std::vector<Symbol>{Symbol{1}, kSentinel}), ArgumentError);
}

TEST_CASE("distinct_symbols") {
  const auto t = Text::from_codes(std::vector<std::uint32_t>{1, 1, 2, 3});
  CHECK(distinct_symbols(t, 0, 4) == 3);
  CHECK(distinct_symbols(t, 2, 2) == 0);
  CHECK(distinct_symbols(Text::from_codes(std::vector<std::uint32_t>{9}), 0, 1) == 1);
  CHECK_THROWS_AS(distinct_symbols(t, 3, 2), RangeError);
  CHECK_THROWS_AS(distinct_symbols(t, 0, 5), RangeError);
}

TEST_CASE("distinct_symbols is monotone in the range") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const Text t = testing::random_text(rng, 1 + rng() % 80, 1 + rng() % 20);
    const std::size_t from = rng() % t.size();
    const std::size_t to = from + rng() % (t.size() - from + 1);
    const std::size_t base = distinct_symbols(t, from, to);
    if (from > 0) CHECK(distinct_symbols(t, from - 1, to) >= base);
    if (to < t.size()) CHECK(distinct_symbols(t, from, to + 1) >= base);
  }
}

TEST_CASE("pad_with_sentinels appends sentinels") {
  const auto t = testing::text("ab");
  const auto padded = pad_with_sentinels(t.view(), 3);
  REQUIRE(padded.size() == 5);
  CHECK(padded[1].code == 98);
  CHECK(padded[4] == kSentinel);
}
