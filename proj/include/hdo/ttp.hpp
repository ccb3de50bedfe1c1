#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hdo/symbols.hpp"
#include "hdo/work_counters.hpp"

namespace hdo {

/// dists[j] = mismatches between the pattern and the text window starting
/// at j, counting only the min(|pattern|, |text| - j) overlapping positions.
using AlignmentDistances = std::vector<std::uint64_t>;

enum class Engine { naive, per_symbol, hybrid, automatic };

struct EngineConfig {
  Engine engine = Engine::automatic;
  /// Occurrence count from which a pattern symbol is handled by convolution
  /// in the hybrid engine. Empty selects default_frequent_threshold.
  std::optional<std::size_t> frequent_threshold;
  /// Patterns with at most this many distinct symbols go to per_symbol.
  std::size_t small_alphabet_cutoff = 16;
};

/// max(1, floor(sqrt(x * ln(x + 1)))).
std::size_t default_frequent_threshold(std::size_t pattern_len);

AlignmentDistances ttp_naive(std::span<const Symbol> text, std::span<const Symbol> pattern,
                             WorkCounters* work = nullptr);

/// One indicator correlation per distinct pattern symbol.
AlignmentDistances ttp_per_symbol(std::span<const Symbol> text, std::span<const Symbol> pattern,
                                  WorkCounters* work = nullptr);

/// Symbols occurring at least `threshold` times in the pattern are counted
/// by correlation; the rest by marking matches from each text position.
AlignmentDistances ttp_hybrid(std::span<const Symbol> text, std::span<const Symbol> pattern,
                              std::size_t threshold, WorkCounters* work = nullptr);

/// Dispatches on cfg.engine; `automatic` picks per_symbol for small pattern
/// alphabets and hybrid otherwise.
AlignmentDistances ttp_auto(std::span<const Symbol> text, std::span<const Symbol> pattern,
                            const EngineConfig& cfg, WorkCounters* work = nullptr);

}  // namespace hdo
