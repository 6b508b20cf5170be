#include "kplex/records.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "kplex/errors.hpp"

namespace kplex {
namespace {

using ordered_json = nlohmann::ordered_json;

double round_ms(double seconds) { return std::round(seconds * 1000.0) / 1000.0; }

std::string fixed3(double x) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << x;
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back() += c;
    }
  }
  return fields;
}

template <typename T>
T parse_number(const std::string& s, std::size_t line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("record line " + std::to_string(line_no) + ": bad number '" + s + "'");
  }
  return value;
}

bool parse_bool(const std::string& s, std::size_t line_no) {
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  throw ParseError("record line " + std::to_string(line_no) + ": bad boolean '" + s + "'");
}

RunRecord from_json(const std::string& line, std::size_t line_no) {
  try {
    const auto j = nlohmann::json::parse(line);
    RunRecord r;
    r.instance = j.at("instance").get<std::string>();
    r.k = j.at("k").get<int>();
    r.algo = j.at("algo").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.best = j.at("best").get<int>();
    r.time_to_best = j.at("time_to_best").get<double>();
    r.total_time = j.at("total_time").get<double>();
    r.iterations = j.at("iterations").get<std::int64_t>();
    r.restarts = j.at("restarts").get<std::int64_t>();
    r.optimal = j.at("optimal").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("record line " + std::to_string(line_no) + ": " + e.what());
  }
}

RunRecord from_csv(const std::string& line, std::size_t line_no) {
  const auto f = split_csv(line);
  if (f.size() != 10) {
    throw ParseError("record line " + std::to_string(line_no) + ": expected 10 fields");
  }
  RunRecord r;
  r.instance = f[0];
  r.k = parse_number<int>(f[1], line_no);
  r.algo = f[2];
  r.seed = parse_number<std::uint64_t>(f[3], line_no);
  r.best = parse_number<int>(f[4], line_no);
  r.time_to_best = parse_number<double>(f[5], line_no);
  r.total_time = parse_number<double>(f[6], line_no);
  r.iterations = parse_number<std::int64_t>(f[7], line_no);
  r.restarts = parse_number<std::int64_t>(f[8], line_no);
  r.optimal = parse_bool(f[9], line_no);
  return r;
}

}  // namespace

RunRecord make_record(std::string instance, int k, std::string algo, std::uint64_t seed,
                      const SolveReport& report, bool with_timing) {
  RunRecord r;
  r.instance = std::move(instance);
  r.k = k;
  r.algo = std::move(algo);
  r.seed = seed;
  r.best = report.best_size;
  r.time_to_best = with_timing ? round_ms(report.time_to_best) : 0.0;
  r.total_time = with_timing ? round_ms(report.total_time) : 0.0;
  r.iterations = report.iterations;
  r.restarts = report.restarts;
  r.optimal = report.proven_optimal;
  return r;
}

std::string csv_header() {
  return "instance,k,algo,seed,best,time_to_best,total_time,iterations,restarts,optimal";
}

std::string to_csv(const RunRecord& r) {
  std::ostringstream out;
  out << csv_field(r.instance) << ',' << r.k << ',' << csv_field(r.algo) << ',' << r.seed << ','
      << r.best << ',' << fixed3(r.time_to_best) << ',' << fixed3(r.total_time) << ','
      << r.iterations << ',' << r.restarts << ',' << (r.optimal ? "true" : "false");
  return out.str();
}

std::string to_jsonl(const RunRecord& r) {
  ordered_json j;
  j["instance"] = r.instance;
  j["k"] = r.k;
  j["algo"] = r.algo;
  j["seed"] = r.seed;
  j["best"] = r.best;
  j["time_to_best"] = r.time_to_best;
  j["total_time"] = r.total_time;
  j["iterations"] = r.iterations;
  j["restarts"] = r.restarts;
  j["optimal"] = r.optimal;
  return j.dump();
}

std::vector<RunRecord> read_records(std::istream& in) {
  std::vector<RunRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '{') {
      records.push_back(from_json(line, line_no));
    } else if (line.rfind("instance,", first) == first) {
      continue;  // CSV header
    } else {
      records.push_back(from_csv(line, line_no));
    }
  }
  return records;
}

std::vector<SummaryRow> summarize(std::span<const RunRecord> records) {
  std::vector<SummaryRow> rows;
  std::map<std::tuple<std::string, int, std::string>, std::size_t> slot;
  for (const auto& r : records) {
    auto [it, fresh] = slot.try_emplace({r.instance, r.k, r.algo}, rows.size());
    if (fresh) rows.push_back({r.instance, r.k, r.algo, 0, r.best, 0.0, 0.0});
    auto& row = rows[it->second];
    ++row.runs;
    row.best = std::max(row.best, r.best);
    row.mean_best += r.best;
    row.mean_time_to_best += r.time_to_best;
  }
  for (auto& row : rows) {
    row.mean_best /= row.runs;
    row.mean_time_to_best /= row.runs;
  }
  return rows;
}

std::string format_cell(const SummaryRow& row) {
  std::ostringstream out;
  out << row.best << '(' << std::fixed << std::setprecision(2) << row.mean_best << ')';
  return out.str();
}

void write_summary(std::ostream& out, std::span<const SummaryRow> rows) {
  out << std::left << std::setw(24) << "instance" << std::setw(4) << "k" << std::setw(10)
      << "algo" << std::setw(6) << "runs" << std::setw(14) << "best(avg)" << "avg_ttb\n";
  for (const auto& row : rows) {
    out << std::left << std::setw(24) << row.instance << std::setw(4) << row.k << std::setw(10)
        << row.algo << std::setw(6) << row.runs << std::setw(14) << format_cell(row)
        << fixed3(row.mean_time_to_best) << '\n';
  }
}

}  // namespace kplex
