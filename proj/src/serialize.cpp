#include <algorithm>
#include <array>
#include <cstring>

#include "hdo/errors.hpp"
#include "hdo/oracle.hpp"

namespace hdo {

namespace {

// Layout (all integers little-endian):
//  0: 4-byte magic "HDO1"
//  4: u16 format version, currently 1
//  6: u16 reserved, must be 0
//  8: u64 n, u64 m, u64 x, u64 row_count
// 40: row_count * m u64 cells, row 1 first
//     then s and t, each as u64 length followed by u32 symbol codes
constexpr std::array<std::uint8_t, 4> kMagic{'H', 'D', 'O', '1'};
constexpr std::uint16_t kVersion = 1;

class Writer {
 public:
  void bytes(std::span<const std::uint8_t> b) { out_.insert(out_.end(), b.begin(), b.end()); }
  template <typename U>
  void put(U v) {
    for (std::size_t k = 0; k < sizeof(U); ++k) out_.push_back(static_cast<std::uint8_t>(v >> (8 * k)));
  }
  void text(const Text& t) {
    put<std::uint64_t>(t.size());
    for (Symbol c : t) put<std::uint32_t>(c.code);
  }
  std::vector<std::uint8_t> take() { return std::move(out_); }
  void reserve(std::size_t n) { out_.reserve(n); }

 private:
  std::vector<std::uint8_t> out_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}

  std::span<const std::uint8_t> bytes(std::size_t n) {
    need(n);
    auto b = in_.subspan(pos_, n);
    pos_ += n;
    return b;
  }
  template <typename U>
  U get() {
    need(sizeof(U));
    U v = 0;
    for (std::size_t k = 0; k < sizeof(U); ++k) v |= static_cast<U>(static_cast<U>(in_[pos_ + k]) << (8 * k));
    pos_ += sizeof(U);
    return v;
  }
  Text text() {
    const std::uint64_t len = get<std::uint64_t>();
    if (len > remaining() / 4) throw FormatError("truncated oracle image: text payload");
    std::vector<Symbol> symbols(static_cast<std::size_t>(len));
    for (auto& c : symbols) c.code = get<std::uint32_t>();
    try {
      return Text(std::move(symbols));
    } catch (const ArgumentError& e) {
      throw FormatError(e.what());
    }
  }
  std::size_t remaining() const { return in_.size() - pos_; }

 private:
  void need(std::size_t n) const {
    if (n > remaining()) throw FormatError("truncated oracle image");
  }

  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> serialize(const Oracle& o) {
  const BlockTable& table = o.table();
  Writer w;
  w.reserve(40 + 8 * table.cells.size() + 16 + 4 * (o.s().size() + o.t().size()));
  w.bytes(kMagic);
  w.put<std::uint16_t>(kVersion);
  w.put<std::uint16_t>(0);
  w.put<std::uint64_t>(table.s_len);
  w.put<std::uint64_t>(table.t_len);
  w.put<std::uint64_t>(table.block);
  w.put<std::uint64_t>(table.row_count);
  for (std::uint64_t c : table.cells) w.put<std::uint64_t>(c);
  w.text(o.s());
  w.text(o.t());
  return w.take();
}

Oracle deserialize(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  const auto magic = r.bytes(kMagic.size());
  if (!std::equal(magic.begin(), magic.end(), kMagic.begin())) {
    throw FormatError("bad magic: not a Hamming distance oracle image");
  }
  const auto version = r.get<std::uint16_t>();
  if (version != kVersion) {
    throw FormatError("unsupported oracle format version " + std::to_string(version));
  }
  if (r.get<std::uint16_t>() != 0) throw FormatError("reserved header field is not zero");

  BlockTable table;
  table.s_len = r.get<std::uint64_t>();
  table.t_len = r.get<std::uint64_t>();
  table.block = r.get<std::uint64_t>();
  table.row_count = r.get<std::uint64_t>();
  if (table.s_len == 0 || table.t_len == 0 || table.block == 0) {
    throw FormatError("oracle header has a zero dimension");
  }
  if (table.row_count != table.s_len / table.block) {
    throw FormatError("row count does not match n / x");
  }
  if (table.row_count > r.remaining() / 8 / table.t_len) {
    throw FormatError("truncated oracle image: table payload");
  }
  table.cells.resize(static_cast<std::size_t>(table.row_count * table.t_len));
  for (auto& c : table.cells) c = r.get<std::uint64_t>();

  Text s = r.text();
  Text t = r.text();
  if (r.remaining() != 0) throw FormatError("trailing bytes after oracle image");
  if (s.size() != table.s_len || t.size() != table.t_len) {
    throw FormatError("text lengths disagree with the header");
  }

  OracleParams params;
  params.block = static_cast<std::size_t>(table.block);
  Oracle o(std::move(s), std::move(t), params, std::move(table));
  o.validate();
  return o;
}

}  // namespace hdo
