#include "hdo/bmm.hpp"

#include <sstream>

#include "hdo/errors.hpp"

namespace hdo {

BooleanMatrix BooleanMatrix::identity(std::size_t k) {
  BooleanMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m.set(i, i, true);
  return m;
}

BooleanMatrix parse_matrix(std::string_view textual) {
  std::istringstream in{std::string(textual)};
  std::string header;
  if (!std::getline(in, header)) throw ParseError("matrix file is empty");
  std::istringstream hs(header);
  long long rows = -1, cols = -1;
  std::string extra;
  if (!(hs >> rows >> cols) || (hs >> extra) || rows < 0 || cols < 0) {
    throw ParseError("matrix header must be two nonnegative integers 'R C'");
  }
  BooleanMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  std::string line;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!std::getline(in, line)) throw ParseError("matrix has fewer than " + std::to_string(rows) + " rows");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.size() != m.cols()) {
      throw ParseError("matrix row " + std::to_string(r) + " has " + std::to_string(line.size()) +
                       " entries, expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (line[c] != '0' && line[c] != '1') {
        throw ParseError("matrix row " + std::to_string(r) + " contains '" + line[c] + "'");
      }
      m.set(r, c, line[c] == '1');
    }
  }
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw ParseError("unexpected content after the last matrix row");
    }
  }
  return m;
}

std::string render_matrix(const BooleanMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out += m(r, c) ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::uint64_t per_cell_distance(Encoding e) { return e == Encoding::ternary ? 1 : 2; }

std::array<Symbol, 3> binary_codeword(Symbol ternary) {
  constexpr Symbol o{0}, l{1};
  if (ternary == kOne) return {o, l, l};
  if (ternary == kZeroOfA) return {l, o, l};
  if (ternary == kZeroOfB) return {l, l, o};
  throw ArgumentError("not a ternary encoding symbol: " + std::to_string(ternary.code));
}

namespace {

void append(std::vector<Symbol>& out, Symbol ternary, Encoding e) {
  if (e == Encoding::ternary) {
    out.push_back(ternary);
  } else {
    const auto word = binary_codeword(ternary);
    out.insert(out.end(), word.begin(), word.end());
  }
}

void check_inner(const BooleanMatrix& a, const BooleanMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ArgumentError("inner dimensions differ: " + std::to_string(a.cols()) + " vs " +
                        std::to_string(b.rows()));
  }
}

}  // namespace

EncodedPair encode_strings(const BooleanMatrix& a, const BooleanMatrix& b, Encoding e) {
  check_inner(a, b);
  if (a.cols() == 0) throw ArgumentError("inner dimension must be at least 1");
  const std::size_t inner = a.cols();
  const std::size_t symbols_per_cell = e == Encoding::ternary ? 1 : 3;

  std::vector<Symbol> s, t;
  s.reserve(a.rows() * inner * symbols_per_cell);
  t.reserve(b.cols() * inner * symbols_per_cell);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) append(s, a(i, k) ? kOne : kZeroOfA, e);
  }
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t k = 0; k < inner; ++k) append(t, b(k, j) ? kOne : kZeroOfB, e);
  }
  return EncodedPair{Text(std::move(s)), Text(std::move(t)), inner * symbols_per_cell};
}

BooleanMatrix bmm_via_oracle(const BooleanMatrix& a, const BooleanMatrix& b, Encoding e,
                             const OracleParams& params) {
  check_inner(a, b);
  BooleanMatrix product(a.rows(), b.cols());
  if (a.rows() == 0 || b.cols() == 0) return product;

  EncodedPair enc = encode_strings(a, b, e);
  const std::uint64_t threshold = per_cell_distance(e) * a.cols();
  const std::size_t width = enc.width;
  const Oracle oracle = Oracle::build(std::move(enc.s), std::move(enc.t), params);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      product.set(i, j, oracle.substring_query(i * width, j * width, width) < threshold);
    }
  }
  return product;
}

BooleanMatrix bmm_naive(const BooleanMatrix& a, const BooleanMatrix& b) {
  check_inner(a, b);
  BooleanMatrix product(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      bool v = false;
      for (std::size_t k = 0; k < a.cols() && !v; ++k) v = a(i, k) && b(k, j);
      product.set(i, j, v);
    }
  }
  return product;
}

}  // namespace hdo
