// Command-line frontend for the Hamming distance oracle.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 resource guard,
// 3 self-check failure.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hdo/bench.hpp"
#include "hdo/bmm.hpp"
#include "hdo/errors.hpp"
#include "hdo/oracle.hpp"
#include "hdo/symbols.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitGuard = 2;
constexpr int kExitSelfCheck = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hdo::Error("cannot open '" + path + "'");
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw hdo::Error("cannot read '" + path + "'");
  return data;
}

void write_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hdo::Error("cannot open '" + path + "' for writing");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw hdo::Error("cannot write '" + path + "'");
}

hdo::Text load_text(const std::string& path, const std::string& format) {
  const std::string data = read_file(path);
  return format == "tokens" ? hdo::ingest_tokens(data) : hdo::ingest_bytes(data);
}

const std::map<std::string, hdo::Engine> kEngines{
    {"naive", hdo::Engine::naive},
    {"per_symbol", hdo::Engine::per_symbol},
    {"hybrid", hdo::Engine::hybrid},
    {"auto", hdo::Engine::automatic},
};

struct TextArgs {
  std::string s_path, t_path, format = "raw";
  std::string engine = "auto";
  std::size_t threshold = 0;
  std::uint64_t cell_budget = hdo::kDefaultCellBudget;
  unsigned threads = 1;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--s", s_path, "File holding the first text S")->required();
    cmd->add_option("--t", t_path, "File holding the second text T")->required();
    cmd->add_option("--format", format, "raw (bytes) or tokens (decimal codes)")
        ->check(CLI::IsMember({"raw", "tokens"}));
    cmd->add_option("--engine", engine, "Text-to-pattern engine")
        ->check(CLI::IsMember({"naive", "per_symbol", "hybrid", "auto"}));
    cmd->add_option("--threshold", threshold, "Frequent-symbol threshold for hybrid (0 = auto)");
    cmd->add_option("--cell-budget", cell_budget, "Largest table (in cells) build may allocate");
    cmd->add_option("--threads", threads, "Worker threads for preprocessing (0 = hardware)");
  }

  hdo::EngineConfig engine_config() const {
    hdo::EngineConfig cfg;
    cfg.engine = kEngines.at(engine);
    if (threshold > 0) cfg.frequent_threshold = threshold;
    return cfg;
  }
};

std::vector<std::size_t> parse_list(const std::string& list) {
  std::vector<std::size_t> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      throw hdo::ParseError("malformed entry '" + item + "' in --xs");
    }
    if (pos != item.size() || item.find('-') != std::string::npos) {
      throw hdo::ParseError("malformed entry '" + item + "' in --xs");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Hamming distance oracle over two texts S and T.\n"
      "All positions are 0-based: position p is character p+1 in 1-based notation."};
  app.require_subcommand(1, 1);

  // build
  auto* build = app.add_subcommand("build", "Preprocess S and T and write the oracle");
  TextArgs build_args;
  build_args.add_to(build);
  std::size_t build_x = 0;
  std::string build_out;
  build->add_option("--x", build_x, "Block size (>= 1)")->required();
  build->add_option("--out", build_out, "Output oracle file")->required();

  // query
  auto* query = app.add_subcommand("query", "Answer one query against a stored oracle");
  std::string oracle_path;
  std::vector<std::size_t> suffix_args, sub_args;
  query->add_option("--oracle", oracle_path, "Oracle file written by build")->required();
  auto* suffix_opt =
      query->add_option("--suffix", suffix_args, "i j: HD(S[i..], T[j..])")->expected(2);
  auto* sub_opt =
      query->add_option("--sub", sub_args, "i j len: HD(S[i..i+len), T[j..j+len))")->expected(3);
  suffix_opt->excludes(sub_opt);
  query->require_option(1, 0);

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Trade-off sweep over block sizes, as CSV");
  TextArgs sweep_args;
  sweep_args.add_to(sweep_cmd);
  std::string xs_list, csv_path;
  std::size_t queries = 0;
  std::uint64_t seed = 0;
  bool inject_fault = false;
  sweep_cmd->add_option("--xs", xs_list, "Comma-separated block sizes")->required();
  sweep_cmd->add_option("--queries", queries, "Random suffix queries per block size")->required();
  sweep_cmd->add_option("--seed", seed, "Seed of the query stream")->required();
  sweep_cmd->add_option("--csv", csv_path, "Output CSV file")->required();
  sweep_cmd->add_flag("--inject-fault", inject_fault)->group("");

  // bmm
  auto* bmm = app.add_subcommand("bmm", "Boolean matrix product through the oracle");
  std::string a_path, b_path, variant = "ternary", bmm_out;
  std::size_t bmm_x = 1;
  bmm->add_option("--a", a_path, "Left matrix file")->required();
  bmm->add_option("--b", b_path, "Right matrix file")->required();
  bmm->add_option("--variant", variant, "ternary or binary encoding")
      ->check(CLI::IsMember({"ternary", "binary"}));
  bmm->add_option("--x-oracle", bmm_x, "Oracle block size (>= 1)");
  bmm->add_option("--out", bmm_out, "Output product matrix file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*build) {
      if (build_x == 0) {
        std::cerr << "error: --x must be at least 1\n";
        return kExitUsage;
      }
      hdo::OracleParams params;
      params.block = build_x;
      params.engine = build_args.engine_config();
      params.cell_budget = build_args.cell_budget;
      params.threads = build_args.threads;
      const auto oracle = hdo::Oracle::build(load_text(build_args.s_path, build_args.format),
                                             load_text(build_args.t_path, build_args.format),
                                             params);
      const auto bytes = hdo::serialize(oracle);
      write_file(build_out, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
      std::cout << "n=" << oracle.s().size() << "\n"
                << "m=" << oracle.t().size() << "\n"
                << "x=" << build_x << "\n"
                << "rows_built=" << oracle.build_work().rows_built << "\n"
                << "cells_stored=" << oracle.build_work().cells_stored << "\n";
      return kExitOk;
    }

    if (*query) {
      const std::string data = read_file(oracle_path);
      const auto oracle = hdo::deserialize(
          std::span(reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
      const std::uint64_t d = !suffix_args.empty()
                                  ? oracle.suffix_query(suffix_args[0], suffix_args[1])
                                  : oracle.substring_query(sub_args[0], sub_args[1], sub_args[2]);
      std::cout << d << "\n";
      return kExitOk;
    }

    if (*sweep_cmd) {
      const auto xs = parse_list(xs_list);
      if (xs.empty() || std::find(xs.begin(), xs.end(), 0u) != xs.end()) {
        std::cerr << "error: --xs needs one or more block sizes >= 1\n";
        return kExitUsage;
      }
      hdo::SweepOptions options;
      options.engine = sweep_args.engine_config();
      options.cell_budget = sweep_args.cell_budget;
      options.threads = sweep_args.threads;
      options.inject_fault = inject_fault;
      const auto s = load_text(sweep_args.s_path, sweep_args.format);
      const auto t = load_text(sweep_args.t_path, sweep_args.format);
      if (s.empty() || t.empty()) throw hdo::ArgumentError("texts must be non-empty");
      const auto records = hdo::sweep(s, t, xs, queries, seed, options);
      std::ostringstream csv;
      hdo::write_sweep_csv(csv, records);
      write_file(csv_path, csv.str());
      bool any_rejected = false;
      for (const auto& r : records) {
        if (r.rejected) {
          std::cerr << "x=" << r.x << " rejected: " << *r.rejected << "\n";
          any_rejected = true;
        }
      }
      return any_rejected ? kExitGuard : kExitOk;
    }

    if (*bmm) {
      if (bmm_x == 0) {
        std::cerr << "error: --x-oracle must be at least 1\n";
        return kExitUsage;
      }
      const auto a = hdo::parse_matrix(read_file(a_path));
      const auto b = hdo::parse_matrix(read_file(b_path));
      const auto encoding = variant == "binary" ? hdo::Encoding::binary : hdo::Encoding::ternary;
      hdo::OracleParams params;
      params.block = bmm_x;
      const auto product = hdo::bmm_via_oracle(a, b, encoding, params);
      write_file(bmm_out, hdo::render_matrix(product));
      const auto reference = hdo::bmm_naive(a, b);
      std::size_t mismatches = 0;
      for (std::size_t i = 0; i < product.rows(); ++i) {
        for (std::size_t j = 0; j < product.cols(); ++j) mismatches += product(i, j) != reference(i, j);
      }
      std::cout << "mismatches_vs_naive=" << mismatches << "\n";
      return mismatches == 0 ? kExitOk : kExitSelfCheck;
    }
  } catch (const hdo::ResourceGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const hdo::CrossCheckError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSelfCheck;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
