#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hdo/symbols.hpp"
#include "hdo/ttp.hpp"
#include "hdo/work_counters.hpp"

namespace hdo {

inline constexpr std::uint64_t kDefaultCellBudget = std::uint64_t{1} << 28;

struct OracleParams {
  /// Block size x >= 1: rows are stored for suffixes of s starting at
  /// x, 2x, ..., floor(n/x)*x, and a query walks at most x positions.
  std::size_t block = 1;
  EngineConfig engine;
  /// build refuses tables with more than this many cells.
  std::uint64_t cell_budget = kDefaultCellBudget;
  /// Worker threads for the per-row text-to-pattern pass; 0 = hardware.
  unsigned threads = 1;
};

/// Sampled rows of the suffix-distance matrix
/// D[a][j] = HD(s[a..n), t[j..m)) under min-length-prefix semantics.
/// Row r (1-based, r <= row_count) holds D[r*x][0..m) at cells[(r-1)*m ...].
struct BlockTable {
  std::uint64_t s_len = 0;
  std::uint64_t t_len = 0;
  std::uint64_t block = 1;
  std::uint64_t row_count = 0;
  std::vector<std::uint64_t> cells;

  std::span<const std::uint64_t> row(std::uint64_t r) const {
    return std::span<const std::uint64_t>(cells).subspan((r - 1) * t_len, t_len);
  }
  std::span<std::uint64_t> row(std::uint64_t r) {
    return std::span<std::uint64_t>(cells).subspan((r - 1) * t_len, t_len);
  }
  /// D[a][j] when a is a stored row start and j < m, otherwise 0.
  std::uint64_t lookup(std::uint64_t a, std::uint64_t j) const;

  bool operator==(const BlockTable&) const = default;
};

/// HD(s[i..n), t[j..m)) by a direct loop over min(n-i, m-j) positions.
std::uint64_t naive_suffix_hd(const Text& s, const Text& t, std::size_t i, std::size_t j,
                              WorkCounters* work = nullptr);

/// Hamming distance oracle over a pair of texts. Immutable once built;
/// queries are safe from concurrent readers.
class Oracle {
 public:
  /// Blocked preprocessing. Throws ArgumentError on empty texts or x = 0,
  /// ResourceGuardError when floor(n/x)*m exceeds params.cell_budget.
  static Oracle build(Text s, Text t, const OracleParams& params);

  /// Assembles an oracle from an existing table, checking only its shape.
  Oracle(Text s, Text t, OracleParams params, BlockTable table);

  /// HD(s[i..n), t[j..m)), 0-based. Throws RangeError unless i < n, j < m.
  std::uint64_t suffix_query(std::size_t i, std::size_t j, WorkCounters* work = nullptr) const;

  /// HD(s[i..i+len), t[j..j+len)). Throws RangeError unless len >= 1,
  /// i + len <= n and j + len <= m.
  std::uint64_t substring_query(std::size_t i, std::size_t j, std::size_t len,
                                WorkCounters* work = nullptr) const;

  /// Deep consistency check: cell bounds, diagonal monotonicity and per-block
  /// increments, plus `spot_checks` cells recomputed directly. Throws
  /// FormatError on the first violation.
  void validate(std::size_t spot_checks = 64) const;

  const Text& s() const { return s_; }
  const Text& t() const { return t_; }
  const OracleParams& params() const { return params_; }
  const BlockTable& table() const { return table_; }
  const WorkCounters& build_work() const { return build_work_; }

 private:
  Text s_;
  Text t_;
  OracleParams params_;
  BlockTable table_;
  WorkCounters build_work_;
};

/// Little-endian binary image: "HDO1", u16 version = 1, u16 reserved = 0,
/// u64 n, m, x, row_count, row_count*m u64 cells (rows ascending), then s
/// and t each as u64 length + u32 codes.
std::vector<std::uint8_t> serialize(const Oracle& o);

/// Throws FormatError on bad magic, unknown version, truncation, trailing
/// bytes or a table that fails validation.
Oracle deserialize(std::span<const std::uint8_t> bytes);

}  // namespace hdo
