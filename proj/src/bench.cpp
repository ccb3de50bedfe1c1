#include "hdo/bench.hpp"

#include <chrono>
#include <cstdio>
#include <random>

#include "hdo/errors.hpp"

namespace hdo {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ns(Clock::time_point since) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - since).count());
}

Oracle with_fault(const Oracle& o) {
  BlockTable table = o.table();
  for (auto& c : table.cells) ++c;
  return Oracle(o.s(), o.t(), o.params(), std::move(table));
}

}  // namespace

std::vector<SweepRecord> sweep(const Text& s, const Text& t, const std::vector<std::size_t>& xs,
                               std::size_t queries_per_x, std::uint64_t seed,
                               const SweepOptions& options) {
  if (xs.empty()) throw ArgumentError("sweep needs at least one block size");
  for (std::size_t x : xs) {
    if (x == 0) throw ArgumentError("block sizes must be at least 1");
  }

  std::vector<SweepRecord> records;
  for (std::size_t x : xs) {
    SweepRecord rec;
    rec.x = x;
    OracleParams params;
    params.block = x;
    params.engine = options.engine;
    params.cell_budget = options.cell_budget;
    params.threads = options.threads;

    const auto build_start = Clock::now();
    std::optional<Oracle> oracle;
    try {
      oracle.emplace(Oracle::build(s, t, params));
    } catch (const ResourceGuardError& e) {
      rec.rejected = e.what();
      records.push_back(std::move(rec));
      continue;
    }
    rec.build_wall_ns = elapsed_ns(build_start);
    rec.build = oracle->build_work();
    if (options.inject_fault) oracle.emplace(with_fault(*oracle));

    // Each point gets its own stream so results do not depend on which
    // other points were requested.
    std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ull * (x + 1)));
    std::uniform_int_distribution<std::size_t> pick_i(0, s.size() - 1), pick_j(0, t.size() - 1);
    std::uint64_t total_comparisons = 0, total_ns = 0;
    for (std::size_t q = 0; q < queries_per_x; ++q) {
      const std::size_t i = pick_i(rng), j = pick_j(rng);
      WorkCounters qw;
      const auto query_start = Clock::now();
      const std::uint64_t got = oracle->suffix_query(i, j, &qw);
      total_ns += elapsed_ns(query_start);
      total_comparisons += qw.char_comparisons;
      rec.max_query_char_comparisons = std::max(rec.max_query_char_comparisons, qw.char_comparisons);
      const std::uint64_t want = naive_suffix_hd(s, t, i, j);
      if (got != want) {
        throw CrossCheckError("x=" + std::to_string(x) + ": suffix query (" + std::to_string(i) +
                              ", " + std::to_string(j) + ") returned " + std::to_string(got) +
                              ", direct count is " + std::to_string(want));
      }
    }
    if (queries_per_x > 0) {
      rec.avg_query_char_comparisons =
          static_cast<double>(total_comparisons) / static_cast<double>(queries_per_x);
      rec.avg_query_wall_ns = total_ns / queries_per_x;
    }
    records.push_back(std::move(rec));
  }
  return records;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << kSweepCsvHeader << '\n';
  for (const auto& r : records) {
    if (r.rejected) continue;
    char avg[64];
    std::snprintf(avg, sizeof avg, "%.6f", r.avg_query_char_comparisons);
    out << r.x << ',' << r.build.rows_built << ',' << r.build.cells_stored << ','
        << r.build.conv_transform_length_total << ',' << r.build.marking_ops << ','
        << r.build.char_comparisons << ',' << avg << ',' << r.build_wall_ns << ','
        << r.avg_query_wall_ns << '\n';
  }
}

}  // namespace hdo
