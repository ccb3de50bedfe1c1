#include "hdo/ttp.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "hdo/convolution.hpp"
#include "hdo/errors.hpp"

namespace hdo {

namespace {

void require_pattern(std::span<const Symbol> pattern) {
  if (pattern.empty()) throw ArgumentError("pattern must be non-empty");
}

std::uint64_t overlap(std::size_t text_len, std::size_t pattern_len, std::size_t j) {
  return std::min(pattern_len, text_len - j);
}

std::unordered_map<Symbol, std::vector<std::size_t>> occurrences(std::span<const Symbol> pattern) {
  std::unordered_map<Symbol, std::vector<std::size_t>> occ;
  for (std::size_t k = 0; k < pattern.size(); ++k) occ[pattern[k]].push_back(k);
  return occ;
}

// Adds, for symbol c, the number of aligned matches of c at each text start.
// The text is padded with |pattern| sentinels so every window is full
// length; sentinels never match, so overhanging positions contribute 0.
void add_symbol_correlation(std::span<const Symbol> padded_text, std::span<const Symbol> pattern,
                            Symbol c, std::size_t text_len, std::vector<std::uint64_t>& matches,
                            WorkCounters* work) {
  std::vector<std::uint64_t> text_mask(padded_text.size());
  for (std::size_t p = 0; p < padded_text.size(); ++p) text_mask[p] = padded_text[p] == c;
  std::vector<std::uint64_t> pattern_mask(pattern.size());
  for (std::size_t k = 0; k < pattern.size(); ++k) pattern_mask[k] = pattern[k] == c;
  const CountSeq r = correlate_matches(text_mask, pattern_mask, work);
  for (std::size_t j = 0; j < text_len; ++j) matches[j] += r[j];
}

AlignmentDistances to_distances(std::size_t text_len, std::size_t pattern_len,
                                const std::vector<std::uint64_t>& matches) {
  AlignmentDistances dists(text_len);
  for (std::size_t j = 0; j < text_len; ++j) {
    // Padded-window distance minus the overhang max(0, j + x - m).
    const std::uint64_t padded = pattern_len - matches[j];
    const std::uint64_t overhang = j + pattern_len > text_len ? j + pattern_len - text_len : 0;
    dists[j] = padded - overhang;
  }
  return dists;
}

}  // namespace

std::size_t default_frequent_threshold(std::size_t pattern_len) {
  const double x = static_cast<double>(pattern_len);
  const auto t = static_cast<std::size_t>(std::floor(std::sqrt(x * std::log(x + 1.0))));
  return std::max<std::size_t>(1, t);
}

AlignmentDistances ttp_naive(std::span<const Symbol> text, std::span<const Symbol> pattern,
                             WorkCounters* work) {
  require_pattern(pattern);
  const std::size_t m = text.size();
  AlignmentDistances dists(m, 0);
  std::uint64_t comparisons = 0;
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t len = overlap(m, pattern.size(), j);
    std::uint64_t d = 0;
    for (std::size_t k = 0; k < len; ++k) d += pattern[k] != text[j + k];
    dists[j] = d;
    comparisons += len;
  }
  if (work) work->char_comparisons += comparisons;
  return dists;
}

AlignmentDistances ttp_per_symbol(std::span<const Symbol> text, std::span<const Symbol> pattern,
                                  WorkCounters* work) {
  require_pattern(pattern);
  const std::size_t m = text.size();
  if (m == 0) return {};
  const auto padded = pad_with_sentinels(text, pattern.size());
  std::vector<std::uint64_t> matches(m, 0);
  for (const auto& [c, positions] : occurrences(pattern)) {
    add_symbol_correlation(padded, pattern, c, m, matches, work);
    if (work) work->convolved_occurrences += positions.size();
  }
  return to_distances(m, pattern.size(), matches);
}

AlignmentDistances ttp_hybrid(std::span<const Symbol> text, std::span<const Symbol> pattern,
                              std::size_t threshold, WorkCounters* work) {
  require_pattern(pattern);
  if (threshold < 1) throw ArgumentError("frequent threshold must be at least 1");
  const std::size_t m = text.size();
  if (m == 0) return {};

  auto occ = occurrences(pattern);
  std::vector<std::uint64_t> matches(m, 0);

  std::vector<Symbol> padded;
  std::unordered_map<Symbol, std::vector<std::size_t>> infrequent;
  std::uint64_t convolved = 0;
  for (auto& [c, positions] : occ) {
    if (positions.size() >= threshold) {
      if (padded.empty()) padded = pad_with_sentinels(text, pattern.size());
      add_symbol_correlation(padded, pattern, c, m, matches, work);
      convolved += positions.size();
    } else {
      infrequent.emplace(c, std::move(positions));
    }
  }

  std::uint64_t marked = 0, marking_ops = 0;
  for (const auto& [c, positions] : infrequent) marked += positions.size();
  if (!infrequent.empty()) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto it = infrequent.find(text[j]);
      if (it == infrequent.end()) continue;
      for (const std::size_t k : it->second) {
        if (k > j) break;  // positions are ascending
        ++matches[j - k];
        ++marking_ops;
      }
    }
  }

  if (work) {
    work->convolved_occurrences += convolved;
    work->marked_occurrences += marked;
    work->marking_ops += marking_ops;
  }
  return to_distances(m, pattern.size(), matches);
}

AlignmentDistances ttp_auto(std::span<const Symbol> text, std::span<const Symbol> pattern,
                            const EngineConfig& cfg, WorkCounters* work) {
  require_pattern(pattern);
  if (cfg.frequent_threshold && *cfg.frequent_threshold < 1) {
    throw ArgumentError("frequent threshold must be at least 1");
  }
  const std::size_t threshold =
      cfg.frequent_threshold.value_or(default_frequent_threshold(pattern.size()));
  switch (cfg.engine) {
    case Engine::naive:
      return ttp_naive(text, pattern, work);
    case Engine::per_symbol:
      return ttp_per_symbol(text, pattern, work);
    case Engine::hybrid:
      return ttp_hybrid(text, pattern, threshold, work);
    case Engine::automatic:
      break;
  }
  if (distinct_symbols(pattern) <= cfg.small_alphabet_cutoff) {
    return ttp_per_symbol(text, pattern, work);
  }
  return ttp_hybrid(text, pattern, threshold, work);
}

}  // namespace hdo
