#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hdo/oracle.hpp"
#include "hdo/symbols.hpp"

namespace hdo {

/// Dense row-major 0/1 matrix.
class BooleanMatrix {
 public:
  BooleanMatrix() = default;
  BooleanMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

  static BooleanMatrix identity(std::size_t k);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool operator()(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool v) { bits_[r * cols_ + c] = v ? 1 : 0; }

  bool operator==(const BooleanMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// "R C" header line followed by R lines of C characters from {0,1}.
/// Throws ParseError on malformed input.
BooleanMatrix parse_matrix(std::string_view textual);
std::string render_matrix(const BooleanMatrix& m);

enum class Encoding { ternary, binary };

/// Mismatches contributed by one mismatching matrix cell: 1 for the ternary
/// alphabet, 2 for the 3-bit binary codewords.
std::uint64_t per_cell_distance(Encoding e);

/// Ternary symbol codes.
inline constexpr Symbol kOne{1};
inline constexpr Symbol kZeroOfA{2};
inline constexpr Symbol kZeroOfB{3};

/// Binary codeword for a ternary symbol: '1' -> 011, A's 0 -> 101, B's 0 -> 110.
std::array<Symbol, 3> binary_codeword(Symbol ternary);

struct EncodedPair {
  Text s;  // A's rows, concatenated
  Text t;  // B's columns, concatenated
  std::size_t width = 0;  // symbols per encoded row/column
};

/// Throws ArgumentError unless a.cols() == b.rows() >= 1.
EncodedPair encode_strings(const BooleanMatrix& a, const BooleanMatrix& b, Encoding e);

/// Boolean product computed from thresholded substring distances:
/// (AB)[i][j] = 1 iff HD(row block i, column block j) < k * inner.
BooleanMatrix bmm_via_oracle(const BooleanMatrix& a, const BooleanMatrix& b, Encoding e,
                             const OracleParams& params);

BooleanMatrix bmm_naive(const BooleanMatrix& a, const BooleanMatrix& b);

}  // namespace hdo
