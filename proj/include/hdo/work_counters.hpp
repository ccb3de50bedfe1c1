#pragma once

#include <cstdint>

namespace hdo {

/// Deterministic work proxies. Every counter is additive: merging the
/// counters of sub-tasks gives the counters of the whole task.
struct WorkCounters {
  /// Direct symbol comparisons (naive engine, query walks).
  std::uint64_t char_comparisons = 0;
  /// Sum of power-of-two transform lengths over all convolutions.
  std::uint64_t conv_transform_length_total = 0;
  /// Increments performed by the infrequent-symbol marking pass.
  std::uint64_t marking_ops = 0;
  /// Pattern occurrences whose matches were counted by convolution.
  std::uint64_t convolved_occurrences = 0;
  /// Pattern occurrences whose matches were counted by marking.
  std::uint64_t marked_occurrences = 0;
  std::uint64_t rows_built = 0;
  std::uint64_t cells_stored = 0;

  WorkCounters& operator+=(const WorkCounters& o) {
    char_comparisons += o.char_comparisons;
    conv_transform_length_total += o.conv_transform_length_total;
    marking_ops += o.marking_ops;
    convolved_occurrences += o.convolved_occurrences;
    marked_occurrences += o.marked_occurrences;
    rows_built += o.rows_built;
    cells_stored += o.cells_stored;
    return *this;
  }

  bool operator==(const WorkCounters&) const = default;
};

}  // namespace hdo
