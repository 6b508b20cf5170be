// kplexls: maximum k-plex local search from the command line.
//
//   kplexls solve --graph g.clq --k 2 --algo bdcc --seed 1 --cutoff 5
//   kplexls bench --list instances.txt --k 2,3,4 --runs 5 --cutoff 60 --out results.csv
//   kplexls summarize results.csv

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "kplex/errors.hpp"
#include "kplex/graph.hpp"
#include "kplex/hyper.hpp"
#include "kplex/oracle.hpp"
#include "kplex/records.hpp"
#include "kplex/search.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kInputError = 2;

struct SolverFlags {
  std::vector<std::string> algos{"bdcc"};
  double cutoff = 1000.0;
  int depth = 1000;
  double alpha = 0.5;
  double epsilon = 0.2;
  double temp0 = 1000.0;
  double gamma = 0.99;
  std::uint64_t seed = 1;
  int runs = 1;
  std::int64_t max_restarts = 0;
  std::string out;
  std::string format;
  bool no_timing = false;
  int threads = 1;
};

void add_solver_flags(CLI::App& cmd, SolverFlags& f) {
  cmd.add_option("--algo", f.algos, "bdcc, bdcch, bdcc-scc or exact")
      ->delimiter(',')
      ->check(CLI::IsMember({"bdcc", "bdcch", "bdcc-scc", "exact"}));
  cmd.add_option("--cutoff", f.cutoff, "wall-clock budget per run in seconds")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--depth", f.depth, "iteration limit L of one search call")
      ->check(CLI::Range(1, std::numeric_limits<int>::max()));
  cmd.add_option("--alpha", f.alpha, "bandit stepsize")->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--epsilon", f.epsilon, "exploration rate")->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--temp0", f.temp0, "initial hyperheuristic temperature")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--gamma", f.gamma, "hyperheuristic cooling rate")
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--seed", f.seed, "seed of the first run; run i uses seed + i");
  cmd.add_option("--runs", f.runs, "independent runs per cell")
      ->check(CLI::Range(1, std::numeric_limits<int>::max()));
  cmd.add_option("--max-restarts", f.max_restarts,
                 "stop after this many search calls (0 = cutoff only)")
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--out", f.out, "write records to this file");
  cmd.add_option("--format", f.format, "record format (default: from --out extension)")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  cmd.add_flag("--no-timing", f.no_timing, "write zero timings for byte-stable output");
  cmd.add_option("--threads", f.threads, "parallel independent runs")
      ->check(CLI::Range(1, 1024));
}

struct Cell {
  fs::path graph_path;
  std::string instance;
  int k;
  std::string algo;
  std::uint64_t seed;
};

kplex::RunRecord run_cell(const Cell& cell, const kplex::Graph& g, const SolverFlags& f,
                          std::vector<kplex::Vertex>* solution) {
  using Clock = std::chrono::steady_clock;
  if (cell.algo == "exact") {
    const auto start = Clock::now();
    const auto result = kplex::exact_max_kplex(g, cell.k);
    kplex::SolveReport report;
    report.best = result.witness;
    report.best_size = result.opt_size;
    report.proven_optimal = true;
    report.total_time = report.time_to_best =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (solution != nullptr) *solution = report.best;
    return kplex::make_record(cell.instance, cell.k, cell.algo, cell.seed, report,
                              !f.no_timing);
  }
  kplex::SearchConfig config;
  config.k = cell.k;
  config.depth = f.depth;
  config.alpha = f.alpha;
  config.epsilon = f.epsilon;
  config.cutoff = f.cutoff;
  config.seed = cell.seed;
  config.max_restarts = f.max_restarts;
  config.temp0 = f.temp0;
  config.gamma = f.gamma;
  if (cell.algo == "bdcc-scc") config.strategy = kplex::ForbidStrategy::Scc;
  const auto report =
      cell.algo == "bdcch" ? kplex::solve_bdcch(g, config) : kplex::solve_bdcc(g, config);
  if (solution != nullptr) *solution = report.best;
  return kplex::make_record(cell.instance, cell.k, cell.algo, cell.seed, report, !f.no_timing);
}

void print_table(std::ostream& out, const std::vector<kplex::RunRecord>& records) {
  out << std::left << std::setw(24) << "instance" << std::setw(4) << "k" << std::setw(10)
      << "algo" << std::setw(8) << "seed" << std::setw(6) << "best" << std::setw(10) << "ttb(s)"
      << std::setw(10) << "total(s)" << std::setw(12) << "iterations" << std::setw(10)
      << "restarts" << "optimal\n";
  for (const auto& r : records) {
    out << std::left << std::setw(24) << r.instance << std::setw(4) << r.k << std::setw(10)
        << r.algo << std::setw(8) << r.seed << std::setw(6) << r.best << std::fixed
        << std::setprecision(3) << std::setw(10) << r.time_to_best << std::setw(10)
        << r.total_time << std::setw(12) << r.iterations << std::setw(10) << r.restarts
        << (r.optimal ? "yes" : "no") << '\n';
  }
}

void write_records(const SolverFlags& f, const std::vector<kplex::RunRecord>& records) {
  if (f.out.empty()) return;
  std::string format = f.format;
  if (format.empty()) format = fs::path(f.out).extension() == ".jsonl" ? "jsonl" : "csv";
  std::ofstream out(f.out, std::ios::binary);
  if (!out) throw kplex::GraphInputError("cannot write " + f.out);
  if (format == "csv") out << kplex::csv_header() << '\n';
  for (const auto& r : records) {
    out << (format == "csv" ? kplex::to_csv(r) : kplex::to_jsonl(r)) << '\n';
  }
}

// Runs every cell; graphs are loaded once and shared read-only. Output order
// follows the cell order regardless of thread count.
std::vector<kplex::RunRecord> run_cells(const std::vector<Cell>& cells, const SolverFlags& f,
                                        std::vector<kplex::Vertex>* first_solution) {
  std::map<fs::path, kplex::Graph> graphs;
  for (const auto& c : cells) {
    if (!graphs.contains(c.graph_path)) graphs.emplace(c.graph_path, kplex::load_graph(c.graph_path));
  }
  std::vector<kplex::RunRecord> records(cells.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        records[i] = run_cell(cells[i], graphs.at(cells[i].graph_path), f,
                              i == 0 ? first_solution : nullptr);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const int threads = std::min<int>(f.threads, static_cast<int>(cells.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return records;
}

std::vector<fs::path> read_instance_list(const fs::path& list) {
  std::ifstream in(list);
  if (!in) throw kplex::GraphInputError("cannot open " + list.string());
  std::vector<fs::path> paths;
  std::string line;
  while (std::getline(in, line)) {
    const auto a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    const auto b = line.find_last_not_of(" \t\r");
    fs::path p = line.substr(a, b - a + 1);
    if (p.is_relative()) p = list.parent_path() / p;
    paths.push_back(p);
  }
  if (paths.empty()) throw kplex::GraphInputError("instance list " + list.string() + " is empty");
  return paths;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum k-plex local search (BDCC / BDCC-H)"};
  app.require_subcommand(1);

  SolverFlags solve_flags;
  std::string graph_path;
  int k = 0;
  bool exact = false;
  bool show_solution = false;
  auto* solve = app.add_subcommand("solve", "solve one graph");
  solve->add_option("--graph", graph_path, "graph file (.clq/.dimacs or edge list)")
      ->required();
  solve->add_option("--k", k, "k-plex parameter")->required()->check(CLI::Range(1, std::numeric_limits<int>::max()));
  solve->add_flag("--exact", exact, "same as --algo exact");
  solve->add_flag("--show-solution", show_solution, "print the best k-plex (1-based ids)");
  add_solver_flags(*solve, solve_flags);

  SolverFlags bench_flags;
  std::string list_path;
  std::vector<int> ks;
  auto* bench = app.add_subcommand("bench", "run every (instance, k, algo, seed) cell");
  bench->add_option("--list", list_path, "file with one graph path per line")->required();
  bench->add_option("--k", ks, "comma-separated k values")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(1, std::numeric_limits<int>::max()));
  add_solver_flags(*bench, bench_flags);

  std::string records_path;
  auto* summary = app.add_subcommand("summarize", "aggregate bench records");
  summary->add_option("records", records_path, "CSV or JSON-lines records")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*solve) {
      if (exact) solve_flags.algos = {"exact"};
      std::vector<Cell> cells;
      const fs::path path = graph_path;
      for (const auto& algo : solve_flags.algos) {
        for (int r = 0; r < solve_flags.runs; ++r) {
          cells.push_back({path, path.stem().string(), k, algo, solve_flags.seed + r});
        }
      }
      std::vector<kplex::Vertex> solution;
      const auto records = run_cells(cells, solve_flags, &solution);
      print_table(std::cout, records);
      if (show_solution) {
        std::cout << "solution:";
        for (auto v : solution) std::cout << ' ' << v + 1;
        std::cout << '\n';
      }
      write_records(solve_flags, records);
    } else if (*bench) {
      std::vector<Cell> cells;
      for (const auto& path : read_instance_list(list_path)) {
        for (int kv : ks) {
          for (const auto& algo : bench_flags.algos) {
            for (int r = 0; r < bench_flags.runs; ++r) {
              cells.push_back({path, path.stem().string(), kv, algo, bench_flags.seed + r});
            }
          }
        }
      }
      const auto records = run_cells(cells, bench_flags, nullptr);
      print_table(std::cout, records);
      write_records(bench_flags, records);
    } else if (*summary) {
      std::ifstream in(records_path);
      if (!in) throw kplex::GraphInputError("cannot open " + records_path);
      const auto records = kplex::read_records(in);
      if (records.empty()) {
        std::cerr << "kplexls: no records in " << records_path << '\n';
        return kInputError;
      }
      const auto rows = kplex::summarize(records);
      kplex::write_summary(std::cout, rows);
    }
  } catch (const kplex::GraphInputError& e) {
    std::cerr << "kplexls: " << e.what() << '\n';
    return kInputError;
  } catch (const kplex::ConfigError& e) {
    std::cerr << "kplexls: " << e.what() << '\n';
    return kInputError;
  } catch (const kplex::SizeError& e) {
    std::cerr << "kplexls: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "kplexls: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
