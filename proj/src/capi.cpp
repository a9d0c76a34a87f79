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

#include "mcensus/mcensus.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "mcensus/basis_family.hpp"
#include "mcensus/bounds.hpp"
#include "mcensus/entropy.hpp"
#include "mcensus/enumeration.hpp"
#include "mcensus/errors.hpp"

struct mcensus_census {
  mcensus::Census census;
};

struct mcensus_counts {
  mcensus::CountTable table;
};

struct mcensus_report {
  struct Row {
    std::string name, lhs, rhs, slack;
    int n, r, t;
    bool holds;
  };
  struct Asymptotic {
    int n;
    std::string m_n;
    double loglog_m, upper_form, knuth_form;
  };
  std::vector<Row> rows;
  std::vector<Asymptotic> asymptotic;
  bool all_hold = true;
};

struct mcensus_diagnostics {
  struct Violation {
    std::size_t line;
    std::string hex;
    mcensus::ExchangeViolation witness;
  };
  int n = 0;
  int r = 0;
  std::size_t rows = 0;
  std::vector<Violation> violations;
};

namespace {

thread_local std::string g_last_error;

mcensus_status fail(mcensus_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Maps the exception in flight to a status code.
mcensus_status translate_current_exception() {
  try {
    throw;
  } catch (const mcensus::ParseError& e) {
    return fail(MCENSUS_PARSE_ERROR, e.what());
  } catch (const mcensus::NotAMatroidError& e) {
    return fail(MCENSUS_NOT_A_MATROID, e.what());
  } catch (const mcensus::BudgetError& e) {
    return fail(MCENSUS_BUDGET_EXCEEDED, e.what());
  } catch (const std::out_of_range& e) {
    return fail(MCENSUS_OUT_OF_RANGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(MCENSUS_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(MCENSUS_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(MCENSUS_INTERNAL_ERROR, "unknown exception");
  }
}

template <typename F>
mcensus_status guarded(F&& body) {
  try {
    body();
    return MCENSUS_OK;
  } catch (...) {
    return translate_current_exception();
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string decimal(const mcensus::BigInt& v) { return v.str(); }

#define MCENSUS_REQUIRE(cond, what) \
  if (!(cond)) return fail(MCENSUS_INVALID_ARGUMENT, what)

}  // namespace

extern "C" {

const char* mcensus_version(void) { return "1.0.0"; }

const char* mcensus_status_name(mcensus_status status) {
  switch (status) {
    case MCENSUS_OK: return "ok";
    case MCENSUS_INVALID_ARGUMENT: return "invalid argument";
    case MCENSUS_OUT_OF_RANGE: return "out of range";
    case MCENSUS_NOT_A_MATROID: return "not a matroid";
    case MCENSUS_PARSE_ERROR: return "parse error";
    case MCENSUS_IO_ERROR: return "i/o error";
    case MCENSUS_BUDGET_EXCEEDED: return "budget exceeded";
    case MCENSUS_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

const char* mcensus_last_error(void) { return g_last_error.c_str(); }

void mcensus_string_free(char* s) { std::free(s); }

mcensus_status mcensus_census_enumerate(int n, int r, mcensus_method method, unsigned workers,
                                        mcensus_census** out) {
  MCENSUS_REQUIRE(out != nullptr, "null output handle");
  MCENSUS_REQUIRE(method == MCENSUS_METHOD_NAIVE || method == MCENSUS_METHOD_DFS, "unknown method");
  return guarded([&] {
    mcensus::DfsOptions options;
    options.workers = workers == 0 ? 1 : workers;
    auto census = method == MCENSUS_METHOD_NAIVE ? mcensus::enumerate_naive(n, r)
                                                 : mcensus::enumerate_dfs(n, r, options);
    *out = new mcensus_census{std::move(census)};
  });
}

mcensus_status mcensus_census_read(const char* path, mcensus_census** out) {
  MCENSUS_REQUIRE(path != nullptr && out != nullptr, "null argument");
  std::ifstream in(path, std::ios::binary);
  if (!in) return fail(MCENSUS_IO_ERROR, std::string("cannot open ") + path);
  return guarded([&] { *out = new mcensus_census{mcensus::read_census(in)}; });
}

mcensus_status mcensus_census_read_buffer(const char* data, size_t len, mcensus_census** out) {
  MCENSUS_REQUIRE(data != nullptr || len == 0, "null buffer");
  MCENSUS_REQUIRE(out != nullptr, "null output handle");
  return guarded([&] {
    std::istringstream in(std::string(data == nullptr ? "" : data, len));
    *out = new mcensus_census{mcensus::read_census(in)};
  });
}

mcensus_status mcensus_census_write(const mcensus_census* census, const char* path) {
  MCENSUS_REQUIRE(census != nullptr && path != nullptr, "null argument");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return fail(MCENSUS_IO_ERROR, std::string("cannot open ") + path + " for writing");
  mcensus_status s = guarded([&] { mcensus::write_census(census->census, out); });
  if (s == MCENSUS_OK && !out.flush()) return fail(MCENSUS_IO_ERROR, std::string("write to ") + path + " failed");
  return s;
}

mcensus_status mcensus_census_serialize(const mcensus_census* census, char** text, size_t* len) {
  MCENSUS_REQUIRE(census != nullptr && text != nullptr, "null argument");
  return guarded([&] {
    const std::string s = mcensus::census_to_string(census->census);
    *text = dup_string(s);
    if (len != nullptr) *len = s.size();
  });
}

int mcensus_census_n(const mcensus_census* census) { return census ? census->census.n() : -1; }
int mcensus_census_r(const mcensus_census* census) { return census ? census->census.r() : -1; }
size_t mcensus_census_size(const mcensus_census* census) { return census ? census->census.size() : 0; }

mcensus_status mcensus_census_family_hex(const mcensus_census* census, size_t index, char** hex) {
  MCENSUS_REQUIRE(census != nullptr && hex != nullptr, "null argument");
  if (index >= census->census.size()) return fail(MCENSUS_OUT_OF_RANGE, "family index out of range");
  return guarded([&] { *hex = dup_string(census->census.families()[index].to_hex()); });
}

void mcensus_census_free(mcensus_census* census) { delete census; }

mcensus_status mcensus_family_check(int n, int r, const char* hex, int* is_matroid,
                                    mcensus_violation* witness) {
  MCENSUS_REQUIRE(hex != nullptr && is_matroid != nullptr, "null argument");
  return guarded([&] {
    const auto family = mcensus::BasisFamily::from_hex(n, r, hex);
    const auto v = mcensus::exchange_witness(family);
    *is_matroid = v ? 0 : 1;
    if (v && witness != nullptr) *witness = {v->base.mask(), v->other.mask(), v->element};
  });
}

mcensus_status mcensus_family_contract(int n, int r, const char* hex, uint64_t t_mask,
                                       char** result_hex) {
  MCENSUS_REQUIRE(hex != nullptr && result_hex != nullptr, "null argument");
  return guarded([&] {
    const auto family = mcensus::BasisFamily::from_hex(n, r, hex);
    *result_hex = dup_string(mcensus::contract(family, mcensus::ElementSet(t_mask)).to_hex());
  });
}

mcensus_status mcensus_rank2_decompose(int n, const char* hex, mcensus_rank2_decomposition* out) {
  MCENSUS_REQUIRE(hex != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    const auto d = mcensus::decompose_rank2(mcensus::BasisFamily::from_hex(n, 2, hex));
    *out = mcensus_rank2_decomposition{};
    out->loops = d.loops.mask();
    out->block_count = d.blocks.size();
    for (std::size_t i = 0; i < d.blocks.size(); ++i) out->blocks[i] = d.blocks[i].mask();
  });
}

mcensus_status mcensus_rank2_compose(const mcensus_rank2_decomposition* decomposition, int n,
                                     char** hex) {
  MCENSUS_REQUIRE(decomposition != nullptr && hex != nullptr, "null argument");
  MCENSUS_REQUIRE(decomposition->block_count <= 64, "too many blocks");
  return guarded([&] {
    mcensus::Rank2Decomposition d;
    d.loops = mcensus::ElementSet(decomposition->loops);
    for (std::size_t i = 0; i < decomposition->block_count; ++i) {
      d.blocks.emplace_back(decomposition->blocks[i]);
    }
    *hex = dup_string(mcensus::compose_rank2(d, n).to_hex());
  });
}

mcensus_status mcensus_rank2_partition_count(int n, char** out) {
  MCENSUS_REQUIRE(out != nullptr, "null argument");
  return guarded([&] { *out = dup_string(decimal(mcensus::rank2_partition_count(n))); });
}

mcensus_status mcensus_bell_number(int n, char** out) {
  MCENSUS_REQUIRE(out != nullptr, "null argument");
  return guarded([&] { *out = dup_string(decimal(mcensus::bell_number(n))); });
}

mcensus_status mcensus_shearer(const mcensus_census* census, int t, mcensus_shearer_result* out) {
  MCENSUS_REQUIRE(census != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    const auto rec = mcensus::shearer_check(census->census, t);
    *out = {rec.lhs, rec.rhs, rec.holds ? 1 : 0, rec.multiplicity, rec.cover_size};
  });
}

mcensus_status mcensus_counts_build(int max_n, unsigned workers, mcensus_counts** out) {
  MCENSUS_REQUIRE(out != nullptr, "null output handle");
  return guarded([&] {
    mcensus::DfsOptions options;
    options.workers = workers == 0 ? 1 : workers;
    *out = new mcensus_counts{mcensus::count_all(max_n, options)};
  });
}

int mcensus_counts_max_n(const mcensus_counts* counts) { return counts ? counts->table.max_n() : -1; }

mcensus_status mcensus_counts_entry(const mcensus_counts* counts, int n, int r, char** out) {
  MCENSUS_REQUIRE(counts != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = dup_string(decimal(counts->table.entry(n, r))); });
}

mcensus_status mcensus_counts_total(const mcensus_counts* counts, int n, char** out) {
  MCENSUS_REQUIRE(counts != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = dup_string(decimal(counts->table.total(n))); });
}

void mcensus_counts_free(mcensus_counts* counts) { delete counts; }

mcensus_status mcensus_report_build(const mcensus_counts* counts, mcensus_report** out) {
  MCENSUS_REQUIRE(counts != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    const mcensus::BoundReport report = mcensus::full_report(counts->table);
    auto handle = std::make_unique<mcensus_report>();
    for (const mcensus::BoundRow& row : report.rows) {
      handle->rows.push_back({row.name, decimal(row.lhs), decimal(row.rhs), row.slack, row.n,
                              row.r, row.t, row.holds});
    }
    handle->all_hold = report.all_hold();
    for (const auto& a : mcensus::asymptotic_table(counts->table)) {
      handle->asymptotic.push_back({a.n, decimal(a.m_n), a.loglog_m, a.upper_form, a.knuth_form});
    }
    *out = handle.release();
  });
}

size_t mcensus_report_size(const mcensus_report* report) { return report ? report->rows.size() : 0; }

mcensus_status mcensus_report_row(const mcensus_report* report, size_t index, mcensus_bound_row* out) {
  MCENSUS_REQUIRE(report != nullptr && out != nullptr, "null argument");
  if (index >= report->rows.size()) return fail(MCENSUS_OUT_OF_RANGE, "row index out of range");
  const auto& row = report->rows[index];
  *out = {row.name.c_str(), row.n, row.r, row.t, row.lhs.c_str(), row.rhs.c_str(),
          row.holds ? 1 : 0, row.slack.c_str()};
  return MCENSUS_OK;
}

int mcensus_report_all_hold(const mcensus_report* report) { return report && report->all_hold ? 1 : 0; }

size_t mcensus_report_asymptotic_size(const mcensus_report* report) {
  return report ? report->asymptotic.size() : 0;
}

mcensus_status mcensus_report_asymptotic_row(const mcensus_report* report, size_t index,
                                             mcensus_asymptotic_row* out) {
  MCENSUS_REQUIRE(report != nullptr && out != nullptr, "null argument");
  if (index >= report->asymptotic.size()) return fail(MCENSUS_OUT_OF_RANGE, "row index out of range");
  const auto& a = report->asymptotic[index];
  *out = {a.n, a.m_n.c_str(), a.loglog_m, a.upper_form, a.knuth_form};
  return MCENSUS_OK;
}

void mcensus_report_free(mcensus_report* report) { delete report; }

mcensus_status mcensus_verify_file(const char* path, mcensus_diagnostics** out) {
  MCENSUS_REQUIRE(path != nullptr && out != nullptr, "null argument");
  std::ifstream in(path, std::ios::binary);
  if (!in) return fail(MCENSUS_IO_ERROR, std::string("cannot open ") + path);
  return guarded([&] {
    const mcensus::CensusFile file = mcensus::parse_census_file(in);
    auto diag = std::make_unique<mcensus_diagnostics>();
    diag->n = file.n;
    diag->r = file.r;
    diag->rows = file.rows.size();
    for (const auto& row : file.rows) {
      if (auto v = mcensus::exchange_witness(row.family)) {
        diag->violations.push_back({row.line, row.family.to_hex(), *v});
      }
    }
    *out = diag.release();
  });
}

int mcensus_diagnostics_n(const mcensus_diagnostics* d) { return d ? d->n : -1; }
int mcensus_diagnostics_r(const mcensus_diagnostics* d) { return d ? d->r : -1; }
size_t mcensus_diagnostics_rows(const mcensus_diagnostics* d) { return d ? d->rows : 0; }
size_t mcensus_diagnostics_violation_count(const mcensus_diagnostics* d) {
  return d ? d->violations.size() : 0;
}

mcensus_status mcensus_diagnostics_violation(const mcensus_diagnostics* d, size_t index,
                                             mcensus_row_violation* out) {
  MCENSUS_REQUIRE(d != nullptr && out != nullptr, "null argument");
  if (index >= d->violations.size()) return fail(MCENSUS_OUT_OF_RANGE, "violation index out of range");
  const auto& v = d->violations[index];
  *out = {v.line, v.hex.c_str(), {v.witness.base.mask(), v.witness.other.mask(), v.witness.element}};
  return MCENSUS_OK;
}

void mcensus_diagnostics_free(mcensus_diagnostics* d) { delete d; }

}  // extern "C"
