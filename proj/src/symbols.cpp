#include "hdo/symbols.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "hdo/errors.hpp"

namespace hdo {

Text::Text(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  if (std::find(symbols_.begin(), symbols_.end(), kSentinel) != symbols_.end()) {
    throw ArgumentError("text contains the reserved sentinel symbol");
  }
}

Text Text::from_codes(std::span<const std::uint32_t> codes) {
  std::vector<Symbol> symbols;
  symbols.reserve(codes.size());
  for (auto c : codes) symbols.push_back(Symbol{c});
  return Text(std::move(symbols));
}

std::span<const Symbol> Text::slice(std::size_t from, std::size_t to) const {
  if (from > to || to > symbols_.size()) {
    throw RangeError("slice [" + std::to_string(from) + ", " + std::to_string(to) +
                     ") out of range for text of length " + std::to_string(symbols_.size()));
  }
  return std::span<const Symbol>(symbols_).subspan(from, to - from);
}

Text ingest_bytes(std::string_view raw) {
  std::vector<Symbol> symbols;
  symbols.reserve(raw.size());
  for (char c : raw) symbols.push_back(Symbol{static_cast<unsigned char>(c)});
  return Text(std::move(symbols));
}

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

Text ingest_tokens(std::string_view textual) {
  std::vector<Symbol> symbols;
  std::size_t p = 0;
  while (p < textual.size()) {
    while (p < textual.size() && is_space(textual[p])) ++p;
    if (p == textual.size()) break;
    std::size_t end = p;
    while (end < textual.size() && !is_space(textual[end])) ++end;
    const std::string_view token = textual.substr(p, end - p);

    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range) {
      throw ParseError("token '" + std::string(token) + "' is too large");
    }
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("malformed token '" + std::string(token) + "'");
    }
    if (value >= kSentinel.code) {
      throw ParseError("token '" + std::string(token) + "' collides with the reserved sentinel");
    }
    symbols.push_back(Symbol{static_cast<std::uint32_t>(value)});
    p = end;
  }
  return Text(std::move(symbols));
}

std::string render_tokens(const Text& t) {
  std::string out;
  for (std::size_t p = 0; p < t.size(); ++p) {
    if (p) out += ' ';
    out += std::to_string(t[p].code);
  }
  return out;
}

std::size_t distinct_symbols(std::span<const Symbol> symbols) {
  std::vector<Symbol> sorted(symbols.begin(), symbols.end());
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

std::size_t distinct_symbols(const Text& t, std::size_t from, std::size_t to) {
  return distinct_symbols(t.slice(from, to));
}

std::vector<Symbol> pad_with_sentinels(std::span<const Symbol> symbols, std::size_t count) {
  std::vector<Symbol> padded(symbols.begin(), symbols.end());
  padded.resize(symbols.size() + count, kSentinel);
  return padded;
}

}  // namespace hdo
