#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "kplex/search.hpp"

namespace kplex {

// One (instance, k, algorithm, seed) run.
struct RunRecord {
  std::string instance;
  int k = 0;
  std::string algo;
  std::uint64_t seed = 0;
  int best = 0;
  double time_to_best = 0.0;
  double total_time = 0.0;
  std::int64_t iterations = 0;
  std::int64_t restarts = 0;
  bool optimal = false;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

// Copies the report's numbers; timings are rounded to milliseconds, or
// zeroed when `with_timing` is false.
RunRecord make_record(std::string instance, int k, std::string algo, std::uint64_t seed,
                      const SolveReport& report, bool with_timing = true);

// instance,k,algo,seed,best,time_to_best,total_time,iterations,restarts,optimal
std::string csv_header();
std::string to_csv(const RunRecord& r);
std::string to_jsonl(const RunRecord& r);

// Accepts either format; detection is by the first non-blank character.
// Throws ParseError on malformed rows.
std::vector<RunRecord> read_records(std::istream& in);

struct SummaryRow {
  std::string instance;
  int k = 0;
  std::string algo;
  int runs = 0;
  int best = 0;
  double mean_best = 0.0;
  double mean_time_to_best = 0.0;
};

// Groups by (instance, k, algo) in first-appearance order.
std::vector<SummaryRow> summarize(std::span<const RunRecord> records);

// "best(mean)" with two decimals, e.g. "25(24.80)".
std::string format_cell(const SummaryRow& row);

void write_summary(std::ostream& out, std::span<const SummaryRow> rows);

}  // namespace kplex
