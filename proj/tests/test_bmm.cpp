#include <doctest.h>

#include <random>

#include "hdo/bmm.hpp"
#include "hdo/errors.hpp"
#include "test_util.hpp"

using namespace hdo;

namespace {

BooleanMatrix from_rows(std::vector<std::string> rows) {
  BooleanMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c] == '1');
  return m;
}

BooleanMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density) {
  std::bernoulli_distribution bit(density);
  BooleanMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, bit(rng));
  return m;
}

std::uint64_t hd(std::span<const Symbol> a, std::span<const Symbol> b) {
  std::uint64_t d = 0;
  for (std::size_t k = 0; k < a.size(); ++k) d += a[k] != b[k];
  return d;
}

OracleParams block(std::size_t x) {
  OracleParams p;
  p.block = x;
  return p;
}

}  // namespace

TEST_CASE("ternary encoding") {
  const auto enc = encode_strings(from_rows({"10"}), from_rows({"1", "0"}), Encoding::ternary);
  CHECK(enc.width == 2);
  CHECK(enc.s == Text(std::vector<Symbol>{kOne, kZeroOfA}));
  CHECK(enc.t == Text(std::vector<Symbol>{kOne, kZeroOfB}));

  const auto zeros = encode_strings(from_rows({"0"}), from_rows({"0"}), Encoding::ternary);
  CHECK(hd(zeros.s.view(), zeros.t.view()) == 1);
}

TEST_CASE("binary encoding") {
  const auto enc = encode_strings(from_rows({"1"}), from_rows({"1"}), Encoding::binary);
  CHECK(enc.width == 3);
  CHECK(enc.s == hdo::testing::text(std::string_view("\x00\x01\x01", 3)));
  CHECK(enc.s == enc.t);
  CHECK(hd(enc.s.view(), enc.t.view()) == 0);
}

TEST_CASE("binary codewords are pairwise at distance two") {
  const Symbol letters[] = {kOne, kZeroOfA, kZeroOfB};
  for (Symbol a : letters) {
    for (Symbol b : letters) {
      const auto wa = binary_codeword(a), wb = binary_codeword(b);
      CHECK(hd(wa, wb) == (a == b ? 0u : 2u));
    }
  }
}

TEST_CASE("encoded distance counts the non-witnesses") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t inner = 1 + rng() % 64;
    const auto a = random_matrix(rng, 1 + rng() % 5, inner, 0.3);
    const auto b = random_matrix(rng, inner, 1 + rng() % 5, 0.3);
    const auto ter = encode_strings(a, b, Encoding::ternary);
    const auto bin = encode_strings(a, b, Encoding::binary);
    const auto product = bmm_naive(a, b);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        std::uint64_t witnesses = 0;
        for (std::size_t k = 0; k < inner; ++k) witnesses += a(i, k) && b(k, j);
        const auto d = hd(ter.s.slice(i * inner, (i + 1) * inner), ter.t.slice(j * inner, (j + 1) * inner));
        CHECK(d == inner - witnesses);
        CHECK((d < inner) == product(i, j));
        const auto db = hd(bin.s.slice(3 * i * inner, 3 * (i + 1) * inner),
                           bin.t.slice(3 * j * inner, 3 * (j + 1) * inner));
        CHECK(db == 2 * d);
      }
    }
  }
}

TEST_CASE("bmm examples") {
  const auto a = from_rows({"10", "00"}), b = from_rows({"1", "0"});
  CHECK(bmm_via_oracle(a, b, Encoding::ternary, block(1)) == from_rows({"1", "0"}));
  CHECK(bmm_naive(a, b) == from_rows({"1", "0"}));

  const BooleanMatrix zero(4, 4);
  CHECK(bmm_via_oracle(zero, zero, Encoding::ternary, block(3)) == zero);
  CHECK(bmm_via_oracle(zero, zero, Encoding::binary, block(3)) == zero);

  std::mt19937_64 rng(62);
  const auto any = random_matrix(rng, 6, 5, 0.5);
  CHECK(bmm_via_oracle(BooleanMatrix::identity(6), any, Encoding::ternary, block(2)) == any);
  CHECK(bmm_naive(BooleanMatrix::identity(6), any) == any);
  CHECK(bmm_naive(BooleanMatrix(3, 6), any) == BooleanMatrix(3, 5));
  CHECK(bmm_naive(from_rows({"11"}), from_rows({"1", "1"})) == from_rows({"1"}));
}

TEST_CASE("dimension mismatches are rejected") {
  CHECK_THROWS_AS(bmm_naive(BooleanMatrix(2, 3), BooleanMatrix(2, 3)), ArgumentError);
  CHECK_THROWS_AS(bmm_via_oracle(BooleanMatrix(2, 3), BooleanMatrix(2, 3), Encoding::ternary, block(1)),
                  ArgumentError);
  CHECK_THROWS_AS(encode_strings(BooleanMatrix(2, 3), BooleanMatrix(2, 3), Encoding::binary), ArgumentError);
}

TEST_CASE("bmm through the oracle equals the direct product") {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t inner = std::vector<std::size_t>{1, 2, 8, 64}[trial % 4];
    const auto a = random_matrix(rng, 1 + rng() % 8, inner, 0.2);
    const auto b = random_matrix(rng, inner, 1 + rng() % 8, 0.2);
    for (Encoding e : {Encoding::ternary, Encoding::binary}) {
      for (std::size_t x : {std::size_t{1}, std::size_t{3}, inner, 5 * inner}) {
        REQUIRE(bmm_via_oracle(a, b, e, block(x)) == bmm_naive(a, b));
      }
    }
  }
}

TEST_CASE("matrix file format") {
  const auto m = parse_matrix("2 3\n101\n010\n");
  CHECK(m == from_rows({"101", "010"}));
  CHECK(render_matrix(m) == "2 3\n101\n010\n");
  CHECK(parse_matrix(render_matrix(m)) == m);
  CHECK(parse_matrix("1 2\r\n10\r\n") == from_rows({"10"}));
  CHECK_THROWS_AS(parse_matrix(""), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 2\n10\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1 2\n12\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1 2\n100\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("x 2\n10\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1 1\n1\n1\n"), ParseError);
}
