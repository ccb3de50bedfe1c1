#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hdo/work_counters.hpp"

namespace hdo {

using CountSeq = std::vector<std::uint64_t>;

/// Largest coefficient accepted by convolve.
inline constexpr std::uint64_t kMaxCoefficient = std::uint64_t{1} << 20;
/// Below this length (of the shorter operand) the schoolbook product is used.
inline constexpr std::size_t kSchoolbookCutoff = 64;

enum class ConvPath { schoolbook, floating, modular };

/// Strategy chosen by convolve for operands of the given lengths and
/// coefficient bounds.
///
/// The floating transform is used only when the a-priori rounding error
/// bound `8 * eps * log2(L) * |a|_2 * |b|_2` (with |.|_2 bounded through the
/// maxima) stays below 1/4; otherwise the exact modular transform is used.
ConvPath select_conv_path(std::size_t len_a, std::uint64_t max_a, std::size_t len_b,
                          std::uint64_t max_b);

/// Rounding error bound of the floating path for such operands.
double floating_error_bound(std::size_t len_a, std::uint64_t max_a, std::size_t len_b,
                            std::uint64_t max_b);

/// Exact linear convolution: r[k] = sum_{i+j=k} a[i] * b[j], |r| = |a|+|b|-1.
///
/// Throws ArgumentError on empty operands or coefficients above
/// kMaxCoefficient, ResourceGuardError if the result could exceed 2^63.
CountSeq convolve(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                  WorkCounters* work = nullptr);

/// Same as convolve with a forced strategy (tests and benchmarks).
CountSeq convolve_with(ConvPath path, std::span<const std::uint64_t> a,
                       std::span<const std::uint64_t> b, WorkCounters* work = nullptr);

/// Sliding dot product of the pattern over every text start:
/// r[j] = sum_k text[j+k] * pattern[k], text positions past the end count 0.
/// |r| = |text|. Throws ArgumentError if the pattern is empty or longer
/// than the text.
CountSeq correlate_matches(std::span<const std::uint64_t> text_mask,
                           std::span<const std::uint64_t> pattern_mask,
                           WorkCounters* work = nullptr);

}  // namespace hdo
