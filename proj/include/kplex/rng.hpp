#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace kplex {

using Rng = std::mt19937_64;

inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline double uniform_unit(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

// Single-pass uniform choice among tied best candidates (reservoir of size 1).
// Call offer() for each tied element; returns true when the new one should
// replace the current pick.
class TieBreaker {
 public:
  void reset() { seen_ = 0; }
  bool offer(Rng& rng) {
    ++seen_;
    return seen_ == 1 || uniform_index(rng, seen_) == 0;
  }

 private:
  std::size_t seen_ = 0;
};

}  // namespace kplex
