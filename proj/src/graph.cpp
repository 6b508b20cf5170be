#include "kplex/graph.hpp"

#include <algorithm>
#include <string>

#include "kplex/errors.hpp"

namespace kplex {

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : n_(n) {
  if (n < 0) throw RangeError("negative vertex count");
  std::vector<std::pair<Vertex, Vertex>> normalized;
  normalized.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw RangeError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") outside vertex range [0, " + std::to_string(n) + ")");
    }
    if (u == v) continue;
    normalized.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
  m_ = static_cast<std::int64_t>(normalized.size());

  std::vector<std::int64_t> deg(n, 0);
  for (auto [u, v] : normalized) {
    ++deg[u];
    ++deg[v];
  }
  begin_.assign(n, 0);
  end_.assign(n, 0);
  std::int64_t offset = 0;
  for (int v = 0; v < n; ++v) {
    begin_[v] = end_[v] = offset;
    offset += deg[v];
  }
  adjacency_.resize(offset);
  // Sorted pairs with u < v make both endpoint lists come out sorted.
  for (auto [u, v] : normalized) adjacency_[end_[u]++] = v;
  for (auto [u, v] : normalized) adjacency_[end_[v]++] = u;
  for (int v = 0; v < n; ++v) {
    std::sort(adjacency_.begin() + begin_[v], adjacency_.begin() + end_[v]);
  }
  alive_.assign(n, 1);
  rebuild_live();
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nu = neighbors(u);
  auto nv = neighbors(v);
  if (nu.size() > nv.size()) std::swap(nu, nv), std::swap(u, v);
  return std::binary_search(nu.begin(), nu.end(), v);
}

void Graph::rebuild_live() {
  live_.clear();
  for (int v = 0; v < n_; ++v) {
    if (alive_[v]) live_.push_back(v);
  }
}

int Graph::peel(int k, int lb) {
  const int threshold = lb - k + 1;
  if (threshold <= 0) return 0;

  std::vector<int> deg(n_);
  std::vector<Vertex> worklist;
  for (Vertex v : live_) {
    deg[v] = degree(v);
    if (deg[v] < threshold) {
      alive_[v] = 0;
      worklist.push_back(v);
    }
  }
  for (std::size_t head = 0; head < worklist.size(); ++head) {
    for (Vertex u : neighbors(worklist[head])) {
      if (alive_[u] && --deg[u] < threshold) {
        alive_[u] = 0;
        worklist.push_back(u);
      }
    }
  }
  if (worklist.empty()) return 0;

  m_ = 0;
  for (Vertex v : live_) {
    if (!alive_[v]) {
      end_[v] = begin_[v];
      continue;
    }
    auto first = adjacency_.begin() + begin_[v];
    auto last = std::remove_if(first, adjacency_.begin() + end_[v],
                               [this](Vertex u) { return !alive_[u]; });
    end_[v] = begin_[v] + (last - first);
    m_ += end_[v] - begin_[v];
  }
  m_ /= 2;
  rebuild_live();
  return static_cast<int>(worklist.size());
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(m_);
  for (Vertex v : live_) {
    for (Vertex u : neighbors(v)) {
      if (v < u) out.emplace_back(v, u);
    }
  }
  return out;
}

Graph peel(Graph g, int k, int lb) {
  g.peel(k, lb);
  return g;
}

}  // namespace kplex
