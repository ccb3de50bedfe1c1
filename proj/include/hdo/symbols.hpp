#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hdo {

/// One character of the alphabet, stored as a 32-bit code.
///
/// The all-ones code is reserved as the padding sentinel and never occurs in
/// a Text; it mismatches every legal symbol.
struct Symbol {
  std::uint32_t code = 0;

  constexpr auto operator<=>(const Symbol&) const = default;
};

inline constexpr Symbol kSentinel{0xFFFFFFFFu};

/// Immutable sequence of symbols. Positions are 0-based throughout the
/// library (position p here is position p+1 in 1-based string notation).
class Text {
 public:
  Text() = default;
  /// Throws ArgumentError if any symbol is the sentinel.
  explicit Text(std::vector<Symbol> symbols);

  static Text from_codes(std::span<const std::uint32_t> codes);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](std::size_t p) const { return symbols_[p]; }
  std::span<const Symbol> view() const { return symbols_; }
  std::span<const Symbol> slice(std::size_t from, std::size_t to) const;

  auto begin() const { return symbols_.begin(); }
  auto end() const { return symbols_.end(); }

  bool operator==(const Text&) const = default;

 private:
  std::vector<Symbol> symbols_;
};

/// Bytes map one-to-one onto symbol codes 0..255.
Text ingest_bytes(std::string_view raw);

/// Whitespace-separated decimal codes. Throws ParseError on malformed
/// tokens and on codes that collide with the sentinel.
Text ingest_tokens(std::string_view textual);

/// Inverse of ingest_tokens: codes joined by single spaces.
std::string render_tokens(const Text& t);

/// Number of distinct codes in t[from, to). Throws RangeError unless
/// from <= to <= t.size().
std::size_t distinct_symbols(const Text& t, std::size_t from, std::size_t to);
std::size_t distinct_symbols(std::span<const Symbol> symbols);

/// Copy of `symbols` followed by `count` sentinels.
std::vector<Symbol> pad_with_sentinels(std::span<const Symbol> symbols, std::size_t count);

}  // namespace hdo

template <>
struct std::hash<hdo::Symbol> {
  std::size_t operator()(hdo::Symbol s) const noexcept { return std::hash<std::uint32_t>{}(s.code); }
};
