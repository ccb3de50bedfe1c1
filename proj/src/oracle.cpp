#include "hdo/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <utility>
#include <thread>

#include "hdo/errors.hpp"

namespace hdo {

std::uint64_t BlockTable::lookup(std::uint64_t a, std::uint64_t j) const {
  if (j >= t_len || a % block != 0) return 0;
  const std::uint64_t r = a / block;
  if (r < 1 || r > row_count) return 0;
  return cells[(r - 1) * t_len + j];
}

std::uint64_t naive_suffix_hd(const Text& s, const Text& t, std::size_t i, std::size_t j,
                              WorkCounters* work) {
  if (i >= s.size() || j >= t.size()) {
    throw RangeError("suffix indices (" + std::to_string(i) + ", " + std::to_string(j) +
                     ") out of range");
  }
  const std::size_t len = std::min(s.size() - i, t.size() - j);
  std::uint64_t d = 0;
  for (std::size_t k = 0; k < len; ++k) d += s[i + k] != t[j + k];
  if (work) work->char_comparisons += len;
  return d;
}

Oracle::Oracle(Text s, Text t, OracleParams params, BlockTable table)
    : s_(std::move(s)), t_(std::move(t)), params_(std::move(params)), table_(std::move(table)) {
  if (params_.block == 0) throw ArgumentError("block size must be at least 1");
  if (table_.s_len != s_.size() || table_.t_len != t_.size() || table_.block != params_.block ||
      table_.row_count != s_.size() / params_.block ||
      table_.cells.size() != table_.row_count * table_.t_len) {
    throw ArgumentError("block table shape is inconsistent with the texts");
  }
}

Oracle Oracle::build(Text s, Text t, const OracleParams& params) {
  if (s.empty() || t.empty()) throw ArgumentError("oracle texts must be non-empty");
  if (params.block == 0) throw ArgumentError("block size must be at least 1");

  const std::uint64_t n = s.size(), m = t.size(), x = params.block;
  const std::uint64_t row_count = n / x;
  const unsigned __int128 cells = static_cast<unsigned __int128>(row_count) * m;
  if (cells > params.cell_budget) {
    throw ResourceGuardError("table of " + std::to_string(row_count) + " x " + std::to_string(m) +
                             " cells exceeds the budget of " +
                             std::to_string(params.cell_budget));
  }

  BlockTable table;
  table.s_len = n;
  table.t_len = m;
  table.block = x;
  table.row_count = row_count;
  table.cells.assign(static_cast<std::size_t>(cells), 0);

  // Phase 1: independent text-to-pattern invocations, one per stored row
  // whose pattern block s[r*x, min(r*x + x, n)) is non-empty.
  const std::uint64_t active_rows = (n - 1) / x;
  unsigned workers = params.threads ? params.threads : std::thread::hardware_concurrency();
  workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, std::max<std::uint64_t>(active_rows, 1)));

  std::vector<WorkCounters> worker_work(workers);
  std::vector<std::exception_ptr> failures(workers);
  std::atomic<std::uint64_t> next_row{1};
  auto run = [&](unsigned w) {
    try {
      for (std::uint64_t r = next_row++; r <= active_rows; r = next_row++) {
        const std::uint64_t a = r * x;
        const auto pattern = s.slice(a, std::min(a + x, n));
        const auto dists = ttp_auto(t.view(), pattern, params.engine, &worker_work[w]);
        std::copy(dists.begin(), dists.end(), table.row(r).begin());
      }
    } catch (...) {
      failures[w] = std::current_exception();
      next_row = active_rows + 1;
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  // Phase 2: D[r*x][j] = HD(block r, t[j..j+x)) + D[(r+1)*x][j+x], rows
  // taken in decreasing order so the next row is already complete.
  for (std::uint64_t r = row_count; r-- > 1;) {
    auto row = table.row(r);
    const auto next = std::as_const(table).row(r + 1);
    for (std::uint64_t j = 0; j + x < m; ++j) row[j] += next[j + x];
  }

  WorkCounters work;
  for (const auto& w : worker_work) work += w;
  work.rows_built = row_count;
  work.cells_stored = row_count * m;

  Oracle o(std::move(s), std::move(t), params, std::move(table));
  o.build_work_ = work;
  return o;
}

std::uint64_t Oracle::suffix_query(std::size_t i, std::size_t j, WorkCounters* work) const {
  const std::size_t n = s_.size(), m = t_.size(), x = params_.block;
  if (i >= n || j >= m) {
    throw RangeError("suffix query (" + std::to_string(i) + ", " + std::to_string(j) +
                     ") out of range for n=" + std::to_string(n) + ", m=" + std::to_string(m));
  }
  // First stored row start at or after i; starts are x, 2x, ...
  const std::size_t a = std::max(x, (i + x - 1) / x * x);
  const std::size_t walk_end = std::min({a, n, i + (m - j)});
  std::uint64_t d = 0;
  for (std::size_t p = i; p < walk_end; ++p) d += s_[p] != t_[p - i + j];
  if (work) work->char_comparisons += walk_end - i;
  return d + table_.lookup(a, j + (a - i));
}

std::uint64_t Oracle::substring_query(std::size_t i, std::size_t j, std::size_t len,
                                      WorkCounters* work) const {
  const std::size_t n = s_.size(), m = t_.size();
  if (len == 0 || i > n || j > m || len > n - i || len > m - j) {
    throw RangeError("substring query (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                     std::to_string(len) + ") out of range for n=" + std::to_string(n) +
                     ", m=" + std::to_string(m));
  }
  const std::uint64_t whole = suffix_query(i, j, work);
  const std::uint64_t rest =
      (i + len < n && j + len < m) ? suffix_query(i + len, j + len, work) : 0;
  return whole - rest;
}

void Oracle::validate(std::size_t spot_checks) const {
  const std::uint64_t n = table_.s_len, m = table_.t_len, x = table_.block;
  for (std::uint64_t r = 1; r <= table_.row_count; ++r) {
    const auto row = table_.row(r);
    for (std::uint64_t j = 0; j < m; ++j) {
      if (row[j] > std::min(n - r * x, m - j)) {
        throw FormatError("table cell (" + std::to_string(r) + ", " + std::to_string(j) +
                          ") exceeds its overlap length");
      }
      if (r < table_.row_count && j + x < m) {
        const std::uint64_t next = table_.row(r + 1)[j + x];
        if (row[j] < next || row[j] - next > x) {
          throw FormatError("table cell (" + std::to_string(r) + ", " + std::to_string(j) +
                            ") is inconsistent with its diagonal successor");
        }
      }
    }
  }
  const std::uint64_t total = table_.cells.size();
  if (total == 0 || spot_checks == 0) return;
  const std::uint64_t stride = std::max<std::uint64_t>(1, total / spot_checks);
  for (std::uint64_t c = 0; c < total; c += stride) {
    const std::uint64_t r = c / m + 1, j = c % m;
    if (r * x >= n) continue;
    if (table_.cells[c] != naive_suffix_hd(s_, t_, r * x, j)) {
      throw FormatError("table cell (" + std::to_string(r) + ", " + std::to_string(j) +
                        ") disagrees with a direct recount");
    }
  }
}

}  // namespace hdo
