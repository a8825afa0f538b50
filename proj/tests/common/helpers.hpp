#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <numeric>
#include <queue>
#include <random>
#include <string>
#include <unistd.h>
#include <vector>

#include "multichrome/graph.hpp"
#include "multichrome/multiplex.hpp"

namespace testing {

using multichrome::edge;
using multichrome::graph;
using multichrome::node_t;

inline graph make(std::vector<edge> edges, bool directed = false, node_t n = 0) {
  return graph::from_edges(edges, directed, n);
}

inline graph path_graph(node_t n) {
  std::vector<edge> e;
  for (node_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return make(e, false, n);
}

inline graph star_graph(node_t leaves) {
  std::vector<edge> e;
  for (node_t i = 1; i <= leaves; ++i) e.push_back({0, i});
  return make(e, false, leaves + 1);
}

inline graph complete_graph(node_t n) {
  std::vector<edge> e;
  for (node_t i = 0; i < n; ++i)
    for (node_t j = i + 1; j < n; ++j) e.push_back({i, j});
  return make(e, false, n);
}

inline graph random_graph(node_t n, double p, bool directed, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<edge> e;
  for (node_t i = 0; i < n; ++i)
    for (node_t j = directed ? 0 : i + 1; j < n; ++j)
      if (i != j && u(rng) < p) e.push_back({i, j});
  return make(e, directed, n);
}

inline std::vector<node_t> random_permutation(node_t n, std::uint64_t seed) {
  std::vector<node_t> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline graph relabel(const graph& g, const std::vector<node_t>& perm) {
  std::vector<edge> e;
  for (const auto& x : g.edges()) e.push_back({perm[x.src], perm[x.dst]});
  return make(e, g.directed(), g.node_count());
}

// All-pairs BFS distances and shortest-path counts.
struct all_pairs {
  std::vector<std::vector<int>> dist;
  std::vector<std::vector<double>> paths;
};

inline all_pairs bfs_all_pairs(const graph& g) {
  const auto n = static_cast<std::size_t>(g.node_count());
  all_pairs ap{std::vector<std::vector<int>>(n, std::vector<int>(n, -1)),
               std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0))};
  for (node_t s = 0; s < g.node_count(); ++s) {
    auto& d = ap.dist[s];
    auto& c = ap.paths[s];
    d[s] = 0;
    c[s] = 1;
    std::queue<node_t> q;
    q.push(s);
    while (!q.empty()) {
      const node_t v = q.front();
      q.pop();
      for (node_t w : g.neighbors(v)) {
        if (d[w] < 0) {
          d[w] = d[v] + 1;
          q.push(w);
        }
        if (d[w] == d[v] + 1) c[w] += c[v];
      }
    }
  }
  return ap;
}

// Betweenness by enumerating every ordered pair (s, t) and every middle v with
// d(s,v) + d(v,t) = d(s,t). Undirected graphs count each unordered pair once.
inline std::vector<double> brute_force_betweenness(const graph& g) {
  const auto ap = bfs_all_pairs(g);
  const node_t n = g.node_count();
  std::vector<double> bc(static_cast<std::size_t>(n), 0.0);
  for (node_t s = 0; s < n; ++s)
    for (node_t t = 0; t < n; ++t) {
      if (s == t || ap.dist[s][t] < 0) continue;
      for (node_t v = 0; v < n; ++v) {
        if (v == s || v == t || ap.dist[s][v] < 0 || ap.dist[v][t] < 0) continue;
        if (ap.dist[s][v] + ap.dist[v][t] == ap.dist[s][t])
          bc[v] += ap.paths[s][v] * ap.paths[v][t] / ap.paths[s][t];
      }
    }
  if (!g.directed())
    for (auto& x : bc) x /= 2.0;
  return bc;
}

inline multichrome::contagion_labeling labels_of(node_t n, std::vector<node_t> a, std::vector<node_t> b) {
  multichrome::contagion_labeling l(n);
  for (node_t v : a) l.is_A[v] = 1;
  for (node_t v : b) l.is_B[v] = 1;
  return l;
}

// Fresh empty directory under the system temp dir, removed on destruction.
class temp_dir {
 public:
  explicit temp_dir(const std::string& tag) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("multichrome_test_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~temp_dir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  temp_dir(const temp_dir&) = delete;
  temp_dir& operator=(const temp_dir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace testing
