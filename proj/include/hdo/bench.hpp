#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hdo/oracle.hpp"
#include "hdo/work_counters.hpp"

namespace hdo {

/// One point of the preprocessing/query trade-off curve.
struct SweepRecord {
  std::size_t x = 0;
  WorkCounters build;
  double avg_query_char_comparisons = 0.0;
  std::uint64_t max_query_char_comparisons = 0;
  std::uint64_t build_wall_ns = 0;
  std::uint64_t avg_query_wall_ns = 0;
  /// Set when the build was refused by the resource guard; counters are
  /// then meaningless and the point is left out of the CSV.
  std::optional<std::string> rejected;
};

struct SweepOptions {
  EngineConfig engine;
  std::uint64_t cell_budget = kDefaultCellBudget;
  unsigned threads = 1;
  /// Adds 1 to every stored cell after building, to exercise the
  /// cross-check failure path.
  bool inject_fault = false;
};

/// Builds an oracle for each x and runs `queries_per_x` uniformly random
/// suffix queries (i in [0, n), j in [0, m), drawn from `seed`), checking
/// each against naive_suffix_hd. Throws CrossCheckError on the first
/// disagreement and ArgumentError if `xs` is empty or holds a 0.
std::vector<SweepRecord> sweep(const Text& s, const Text& t, const std::vector<std::size_t>& xs,
                               std::size_t queries_per_x, std::uint64_t seed,
                               const SweepOptions& options = {});

inline constexpr const char* kSweepCsvHeader =
    "x,rows_built,cells_stored,conv_transform_length_total,marking_ops,build_char_comparisons,"
    "avg_query_char_comparisons,build_wall_ns,avg_query_wall_ns";

/// Header line plus one line per non-rejected record.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);

}  // namespace hdo
