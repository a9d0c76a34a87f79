// Copyright 2026 The Matroid Census Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the library only through mcensus.h.

#include "cli_app.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcensus/mcensus.h"

namespace mcensus::cli {
namespace {

using Json = nlohmann::ordered_json;

// Largest ground set the CLI accepts for a single census.
constexpr int kMaxCensusN = 8;
constexpr int kMaxCountN = 7;
constexpr unsigned kMaxWorkers = 256;

struct CensusDeleter {
  void operator()(mcensus_census* c) const { mcensus_census_free(c); }
};
struct CountsDeleter {
  void operator()(mcensus_counts* c) const { mcensus_counts_free(c); }
};
struct ReportDeleter {
  void operator()(mcensus_report* r) const { mcensus_report_free(r); }
};
struct DiagnosticsDeleter {
  void operator()(mcensus_diagnostics* d) const { mcensus_diagnostics_free(d); }
};
struct StringDeleter {
  void operator()(char* s) const { mcensus_string_free(s); }
};
using CensusPtr = std::unique_ptr<mcensus_census, CensusDeleter>;
using CountsPtr = std::unique_ptr<mcensus_counts, CountsDeleter>;
using ReportPtr = std::unique_ptr<mcensus_report, ReportDeleter>;
using DiagnosticsPtr = std::unique_ptr<mcensus_diagnostics, DiagnosticsDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// A failed library call; carries the exit code it maps to.
struct CommandError {
  int code;
  std::string message;
};

void check(mcensus_status s, const std::string& context, int code = kUsageError) {
  if (s != MCENSUS_OK) {
    throw CommandError{code, context + ": " + mcensus_status_name(s) + ": " + mcensus_last_error()};
  }
}

std::string take_string(char* s) {
  StringPtr owned(s);
  return std::string(owned.get());
}

std::string elements_text(std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (int e = 0; e < 64; ++e) {
    if (((mask >> e) & 1u) == 0) continue;
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

struct Config {
  int n = -1;
  int r = -1;
  int t = -1;
  int max_n = -1;
  std::string method = "dfs";
  std::string format = "json";
  std::string in_path;
  std::string out_path;
  unsigned workers = 0;
};

unsigned default_workers() {
  const char* env = std::getenv(kWorkersEnv);
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0 || v > kMaxWorkers) {
    throw CommandError{kUsageError, std::string(kWorkersEnv) + " must be an integer in [1, " +
                                        std::to_string(kMaxWorkers) + "]"};
  }
  return static_cast<unsigned>(v);
}

unsigned workers_of(const Config& c) { return c.workers != 0 ? c.workers : default_workers(); }

CensusPtr enumerate(const Config& c) {
  mcensus_census* raw = nullptr;
  const mcensus_method method = c.method == "naive" ? MCENSUS_METHOD_NAIVE : MCENSUS_METHOD_DFS;
  check(mcensus_census_enumerate(c.n, c.r, method, workers_of(c), &raw), "census");
  return CensusPtr(raw);
}

CountsPtr build_counts(const Config& c) {
  mcensus_counts* raw = nullptr;
  check(mcensus_counts_build(c.max_n, workers_of(c), &raw), "counts");
  return CountsPtr(raw);
}

ReportPtr build_report(const mcensus_counts* counts) {
  mcensus_report* raw = nullptr;
  check(mcensus_report_build(counts, &raw), "report");
  return ReportPtr(raw);
}

int cmd_census(const Config& c, std::ostream& out) {
  CensusPtr census = enumerate(c);
  if (c.out_path.empty()) {
    char* text = nullptr;
    check(mcensus_census_serialize(census.get(), &text, nullptr), "census");
    out << take_string(text);
    return kSuccess;
  }
  check(mcensus_census_write(census.get(), c.out_path.c_str()), "census");
  const std::size_t size = mcensus_census_size(census.get());
  Json j;
  j["n"] = c.n;
  j["r"] = c.r;
  j["method"] = c.method;
  j["count"] = size;
  j["matroids"] = size - 1;
  j["out"] = c.out_path;
  out << j.dump(2) << '\n';
  return kSuccess;
}

int cmd_counts(const Config& c, std::ostream& out) {
  CountsPtr counts = build_counts(c);
  Json j;
  j["max_n"] = c.max_n;
  Json entries = Json::array();
  Json totals = Json::array();
  for (int n = 0; n <= c.max_n; ++n) {
    for (int r = 0; r <= n; ++r) {
      char* s = nullptr;
      check(mcensus_counts_entry(counts.get(), n, r, &s), "counts");
      entries.push_back({{"n", n}, {"r", r}, {"m", std::stoull(take_string(s))}});
    }
    char* s = nullptr;
    check(mcensus_counts_total(counts.get(), n, &s), "counts");
    totals.push_back({{"n", n}, {"m", std::stoull(take_string(s))}});
  }
  j["entries"] = entries;
  j["totals"] = totals;
  out << j.dump(2) << '\n';
  return kSuccess;
}

int cmd_verify(const Config& c, std::ostream& out, std::ostream& err) {
  mcensus_diagnostics* raw = nullptr;
  const mcensus_status s = mcensus_verify_file(c.in_path.c_str(), &raw);
  if (s == MCENSUS_PARSE_ERROR) {
    err << "verify: " << c.in_path << ": " << mcensus_last_error() << '\n';
    return kVerificationFailed;
  }
  check(s, "verify");
  DiagnosticsPtr diag(raw);
  const std::size_t rows = mcensus_diagnostics_rows(diag.get());
  const std::size_t bad = mcensus_diagnostics_violation_count(diag.get());
  for (std::size_t i = 0; i < bad; ++i) {
    mcensus_row_violation v{};
    check(mcensus_diagnostics_violation(diag.get(), i, &v), "verify");
    out << "line " << v.line << ": family " << v.hex << " violates the exchange axiom: B="
        << elements_text(v.witness.base) << " B'=" << elements_text(v.witness.other)
        << " e=" << v.witness.element << '\n';
  }
  if (bad == 0) {
    out << "all " << rows << " families valid\n";
    return kSuccess;
  }
  out << bad << " of " << rows << " families invalid\n";
  return kVerificationFailed;
}

int cmd_shearer(const Config& c, std::ostream& out) {
  if (c.t > c.r) throw CommandError{kUsageError, "shearer: --t must not exceed --r"};
  CensusPtr census = enumerate(c);
  mcensus_shearer_result res{};
  check(mcensus_shearer(census.get(), c.t, &res), "shearer");
  Json j;
  j["n"] = c.n;
  j["r"] = c.r;
  j["t"] = c.t;
  j["lhs"] = res.lhs;
  j["rhs"] = res.rhs;
  j["holds"] = res.holds != 0;
  j["multiplicity"] = res.multiplicity;
  j["cover_size"] = res.cover_size;
  out << j.dump(2) << '\n';
  return res.holds ? kSuccess : kVerificationFailed;
}

int cmd_rank2(const Config& c, std::ostream& out) {
  Config rc = c;
  rc.r = 2;
  CensusPtr census = enumerate(rc);
  const std::size_t size = mcensus_census_size(census.get());
  std::size_t round_trips = 0;
  std::vector<std::size_t> by_blocks(65, 0);
  for (std::size_t i = 0; i < size; ++i) {
    char* hex = nullptr;
    check(mcensus_census_family_hex(census.get(), i, &hex), "rank2");
    const std::string original = take_string(hex);
    mcensus_rank2_decomposition d{};
    check(mcensus_rank2_decompose(c.n, original.c_str(), &d), "rank2", kVerificationFailed);
    char* back = nullptr;
    check(mcensus_rank2_compose(&d, c.n, &back), "rank2", kVerificationFailed);
    if (take_string(back) == original) ++round_trips;
    ++by_blocks[d.block_count];
  }
  char* partitions = nullptr;
  check(mcensus_rank2_partition_count(c.n, &partitions), "rank2");
  char* bell = nullptr;
  check(mcensus_bell_number(c.n + 1, &bell), "rank2");
  const std::string partition_count = take_string(partitions);
  const std::string bell_next = take_string(bell);

  Json j;
  j["n"] = c.n;
  j["families"] = size;
  j["round_trips"] = round_trips;
  j["partition_count"] = std::stoull(partition_count);
  j["bell_n_plus_1"] = std::stoull(bell_next);
  Json hist = Json::array();
  for (std::size_t k = 0; k < by_blocks.size(); ++k) {
    if (by_blocks[k] != 0) hist.push_back({{"blocks", k}, {"families", by_blocks[k]}});
  }
  j["block_histogram"] = hist;
  const bool ok = round_trips == size && std::to_string(size) == partition_count &&
                  size <= std::stoull(bell_next);
  j["ok"] = ok;
  out << j.dump(2) << '\n';
  return ok ? kSuccess : kVerificationFailed;
}

std::string csv_index(int v) { return v < 0 ? "" : std::to_string(v); }

int cmd_bounds(const Config& c, std::ostream& out) {
  CountsPtr counts = build_counts(c);
  ReportPtr report = build_report(counts.get());
  const std::size_t size = mcensus_report_size(report.get());
  std::vector<mcensus_bound_row> rows(size);
  for (std::size_t i = 0; i < size; ++i) check(mcensus_report_row(report.get(), i, &rows[i]), "bounds");

  if (c.format == "csv") {
    out << "name,n,r,t,lhs,rhs,holds,slack\n";
    for (const auto& row : rows) {
      out << row.name << ',' << csv_index(row.n) << ',' << csv_index(row.r) << ','
          << csv_index(row.t) << ',' << row.lhs << ',' << row.rhs << ','
          << (row.holds ? "true" : "false") << ',' << row.slack << '\n';
    }
  } else {
    Json j;
    j["max_n"] = c.max_n;
    j["all_hold"] = mcensus_report_all_hold(report.get()) != 0;
    Json arr = Json::array();
    for (const auto& row : rows) {
      Json jr;
      jr["name"] = row.name;
      jr["n"] = row.n < 0 ? Json(nullptr) : Json(row.n);
      jr["r"] = row.r < 0 ? Json(nullptr) : Json(row.r);
      jr["t"] = row.t < 0 ? Json(nullptr) : Json(row.t);
      jr["lhs"] = row.lhs;
      jr["rhs"] = row.rhs;
      jr["holds"] = row.holds != 0;
      jr["slack"] = row.slack;
      arr.push_back(std::move(jr));
    }
    j["rows"] = arr;
    out << j.dump(2) << '\n';
  }
  return mcensus_report_all_hold(report.get()) ? kSuccess : kVerificationFailed;
}

int cmd_report(const Config& c, std::ostream& out) {
  CountsPtr counts = build_counts(c);
  ReportPtr report = build_report(counts.get());
  Json j;
  j["normative"] = false;
  j["note"] =
      "log2 log2 m_n against n - 1.5 log2 n + log2 log2 n (upper form, O(1) dropped) and "
      "log2(C(n,n/2)/n) (Knuth lower form); descriptive only";
  Json arr = Json::array();
  for (std::size_t i = 0; i < mcensus_report_asymptotic_size(report.get()); ++i) {
    mcensus_asymptotic_row a{};
    check(mcensus_report_asymptotic_row(report.get(), i, &a), "report");
    arr.push_back({{"n", a.n},
                   {"m_n", std::stoull(a.m_n)},
                   {"loglog_m_n", a.loglog_m},
                   {"upper_form", a.upper_form},
                   {"knuth_form", a.knuth_form}});
  }
  j["rows"] = arr;
  out << j.dump(2) << '\n';
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate labeled matroids and verify counting bounds", "mcensus"};
  app.require_subcommand(1);
  Config c;

  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", c.workers, "Worker threads (default: $MCENSUS_WORKERS or 1)")
        ->check(CLI::Range(1u, kMaxWorkers));
  };

  auto* census = app.add_subcommand("census", "Enumerate M_{[n],r} and write a census file");
  census->add_option("--n", c.n, "Ground set size")->required()->check(CLI::Range(0, kMaxCensusN));
  census->add_option("--r", c.r, "Rank")->required()->check(CLI::Range(0, kMaxCensusN));
  census->add_option("--method", c.method, "naive|dfs")->check(CLI::IsMember({"naive", "dfs"}));
  census->add_option("--out", c.out_path, "Output path (default: stdout)");
  add_workers(census);

  auto* counts = app.add_subcommand("counts", "Table of m_{n,r} and m_n");
  counts->add_option("--max-n", c.max_n, "Largest n")->required()->check(CLI::Range(0, kMaxCountN));
  add_workers(counts);

  auto* verify = app.add_subcommand("verify", "Re-check every row of a census file");
  verify->add_option("--in", c.in_path, "Census file")->required();

  auto* shearer = app.add_subcommand("shearer", "Shearer inequality with the contraction cover");
  shearer->add_option("--n", c.n, "Ground set size")->required()->check(CLI::Range(0, kMaxCensusN));
  shearer->add_option("--r", c.r, "Rank")->required()->check(CLI::Range(0, kMaxCensusN));
  shearer->add_option("--t", c.t, "Contracted set size")->required()->check(CLI::Range(0, kMaxCensusN));
  shearer->add_option("--method", c.method, "naive|dfs")->check(CLI::IsMember({"naive", "dfs"}));
  add_workers(shearer);

  auto* rank2 = app.add_subcommand("rank2", "Rank-2 structure round trip and partition count");
  rank2->add_option("--n", c.n, "Ground set size")->required()->check(CLI::Range(0, kMaxCensusN));
  add_workers(rank2);

  auto* bounds = app.add_subcommand("bounds", "Exact verification of every counting inequality");
  bounds->add_option("--max-n", c.max_n, "Largest n")->required()->check(CLI::Range(0, kMaxCountN));
  bounds->add_option("--format", c.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  add_workers(bounds);

  auto* report = app.add_subcommand("report", "Descriptive asymptotic comparison (no verdict)");
  report->add_option("--max-n", c.max_n, "Largest n")->required()->check(CLI::Range(0, kMaxCountN));
  add_workers(report);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kSuccess;
    }
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*census) return cmd_census(c, out);
    if (*counts) return cmd_counts(c, out);
    if (*verify) return cmd_verify(c, out, err);
    if (*shearer) return cmd_shearer(c, out);
    if (*rank2) return cmd_rank2(c, out);
    if (*bounds) return cmd_bounds(c, out);
    if (*report) return cmd_report(c, out);
  } catch (const CommandError& e) {
    err << e.message << '\n';
    return e.code;
  }
  err << "usage error: no command\n";
  return kUsageError;
}

}  // namespace mcensus::cli
