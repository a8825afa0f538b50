#include "multichrome/graph.hpp"

#include <algorithm>
#include <numeric>

#include "multichrome/error.hpp"
#include "multichrome/rng.hpp"

namespace multichrome {
namespace {

// Counting-sort rows, then sort and dedup each row in place.
void fill_csr(std::span<const edge> arcs, node_t n, std::vector<std::int64_t>& offsets,
              std::vector<node_t>& targets) {
  offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& a : arcs) ++offsets[a.src + 1];
  for (node_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  targets.resize(arcs.size());
  std::vector<std::int64_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& a : arcs) targets[cursor[a.src]++] = a.dst;

  std::int64_t write = 0;
  for (node_t v = 0; v < n; ++v) {
    const auto begin = targets.begin() + offsets[v];
    const auto end = targets.begin() + offsets[v + 1];
    std::sort(begin, end);
    const auto last = std::unique(begin, end);
    offsets[v] = write;
    write = static_cast<std::int64_t>(std::copy(begin, last, targets.begin() + write) -
                                      targets.begin());
  }
  offsets[n] = write;
  targets.resize(static_cast<std::size_t>(write));
}

}  // namespace

graph graph::from_edges(std::span<const edge> edges, bool directed, node_t node_count) {
  node_t n = node_count;
  for (const auto& e : edges) {
    if (e.src < 0 || e.dst < 0) throw validation_error("negative node id");
    n = std::max({n, static_cast<node_t>(e.src + 1), static_cast<node_t>(e.dst + 1)});
  }

  std::vector<edge> arcs;
  arcs.reserve(directed ? edges.size() : 2 * edges.size());
  for (const auto& e : edges) {
    if (e.src == e.dst) continue;
    arcs.push_back(e);
    if (!directed) arcs.push_back({e.dst, e.src});
  }

  graph g;
  g.directed_ = directed;
  fill_csr(arcs, n, g.offsets_, g.targets_);
  if (directed) {
    for (auto& a : arcs) std::swap(a.src, a.dst);
    fill_csr(arcs, n, g.in_offsets_, g.in_targets_);
    g.edge_count_ = g.targets_.size();
  } else {
    g.edge_count_ = g.targets_.size() / 2;
  }
  return g;
}

graph build_graph(std::span<const edge> edges, bool directed) {
  return graph::from_edges(edges, directed);
}

std::vector<std::size_t> graph::degrees() const {
  std::vector<std::size_t> d(static_cast<std::size_t>(node_count()));
  for (node_t v = 0; v < node_count(); ++v) d[v] = degree(v);
  return d;
}

bool graph::has_edge(node_t src, node_t dst) const noexcept {
  if (src < 0 || src >= node_count()) return false;
  const auto row = neighbors(src);
  return std::binary_search(row.begin(), row.end(), dst);
}

std::vector<edge> graph::edges() const {
  std::vector<edge> out;
  out.reserve(edge_count_);
  for (node_t v = 0; v < node_count(); ++v)
    for (node_t w : neighbors(v))
      if (directed_ || v < w) out.push_back({v, w});
  return out;
}

graph graph::as_undirected() const {
  if (!directed_) return *this;
  const auto e = edges();
  return from_edges(e, false, node_count());
}

graph graph::induced(std::span<const std::uint8_t> keep, std::vector<node_t>* kept) const {
  std::vector<node_t> new_id(static_cast<std::size_t>(node_count()), -1);
  std::vector<node_t> old_id;
  for (node_t v = 0; v < node_count(); ++v) {
    if (keep[v]) {
      new_id[v] = static_cast<node_t>(old_id.size());
      old_id.push_back(v);
    }
  }
  std::vector<edge> sub;
  for (node_t v : old_id)
    for (node_t w : neighbors(v))
      if (new_id[w] >= 0 && (directed_ || v < w)) sub.push_back({new_id[v], new_id[w]});
  auto g = from_edges(sub, directed_, static_cast<node_t>(old_id.size()));
  if (kept) *kept = std::move(old_id);
  return g;
}

components connected_components(const graph& g) {
  const node_t n = g.node_count();
  components out;
  out.labels.assign(static_cast<std::size_t>(n), -1);
  std::vector<node_t> stack;
  for (node_t root = 0; root < n; ++root) {
    if (out.labels[root] >= 0) continue;
    const node_t id = out.count++;
    out.labels[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      const node_t v = stack.back();
      stack.pop_back();
      auto visit = [&](node_t w) {
        if (out.labels[w] < 0) {
          out.labels[w] = id;
          stack.push_back(w);
        }
      };
      for (node_t w : g.neighbors(v)) visit(w);
      if (g.directed())
        for (node_t w : g.in_neighbors(v)) visit(w);
    }
  }
  return out;
}

double density(const graph& g) {
  const double n = g.node_count();
  if (n < 2) throw domain_error("density requires at least 2 nodes");
  const double e = static_cast<double>(g.edge_count());
  return g.directed() ? e / (n * (n - 1)) : 2.0 * e / (n * (n - 1));
}

namespace {

// Single-source Brandes stage: BFS for path counts, then dependency
// accumulation in reverse BFS order.
struct brandes_workspace {
  std::vector<node_t> order;
  std::vector<std::int64_t> dist;
  std::vector<double> sigma;
  std::vector<double> delta;

  explicit brandes_workspace(node_t n)
      : dist(static_cast<std::size_t>(n)),
        sigma(static_cast<std::size_t>(n)),
        delta(static_cast<std::size_t>(n)) {
    order.reserve(static_cast<std::size_t>(n));
  }

  void accumulate(const graph& g, node_t s, std::vector<double>& bc) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();

    dist[s] = 0;
    sigma[s] = 1.0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const node_t v = order[head];
      for (node_t w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const node_t w = *it;
      // Predecessors of w are the in-neighbors one level closer to s.
      for (node_t v : g.in_neighbors(w))
        if (dist[v] >= 0 && dist[v] + 1 == dist[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) bc[w] += delta[w];
    }
  }
};

}  // namespace

std::vector<double> betweenness(const graph& g, std::optional<node_t> sample_pivots,
                                std::uint64_t seed) {
  const node_t n = g.node_count();
  std::vector<double> bc(static_cast<std::size_t>(n), 0.0);
  if (n == 0) return bc;
  if (sample_pivots && *sample_pivots < 1) throw validation_error("sample_pivots must be >= 1");

  brandes_workspace ws(n);
  double scale = g.directed() ? 1.0 : 0.5;
  if (!sample_pivots || *sample_pivots >= n) {
    for (node_t s = 0; s < n; ++s) ws.accumulate(g, s, bc);
  } else {
    const node_t k = *sample_pivots;
    std::vector<node_t> nodes(static_cast<std::size_t>(n));
    std::iota(nodes.begin(), nodes.end(), 0);
    rng_t rng(seed);
    for (node_t i = 0; i < k; ++i) {
      const auto j = i + static_cast<node_t>(uniform_index(rng, static_cast<std::uint64_t>(n - i)));
      std::swap(nodes[i], nodes[j]);
      ws.accumulate(g, nodes[i], bc);
    }
    scale *= static_cast<double>(n) / static_cast<double>(k);
  }
  for (auto& b : bc) b *= scale;
  return bc;
}

std::vector<node_t> core_numbers(const graph& input) {
  const graph g = input.as_undirected();
  const node_t n = g.node_count();
  std::vector<node_t> deg(static_cast<std::size_t>(n));
  node_t max_deg = 0;
  for (node_t v = 0; v < n; ++v) {
    deg[v] = static_cast<node_t>(g.degree(v));
    max_deg = std::max(max_deg, deg[v]);
  }

  // Bucket sort by degree; pos/vert give O(1) moves between buckets.
  std::vector<node_t> bin(static_cast<std::size_t>(max_deg) + 1, 0);
  for (node_t v = 0; v < n; ++v) ++bin[deg[v]];
  node_t start = 0;
  for (auto& b : bin) {
    const node_t count = b;
    b = start;
    start += count;
  }
  std::vector<node_t> pos(static_cast<std::size_t>(n));
  std::vector<node_t> vert(static_cast<std::size_t>(n));
  for (node_t v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = v;
  }
  for (node_t d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
  if (!bin.empty()) bin[0] = 0;

  for (node_t i = 0; i < n; ++i) {
    const node_t v = vert[i];
    for (node_t u : g.neighbors(v)) {
      if (deg[u] > deg[v]) {
        const node_t du = deg[u];
        const node_t pu = pos[u];
        const node_t pw = bin[du];
        const node_t w = vert[pw];
        if (u != w) {
          pos[u] = pw;
          vert[pu] = w;
          pos[w] = pu;
          vert[pw] = u;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  return deg;
}

centrality_report centrality(const graph& g, std::optional<node_t> sample_pivots,
                             std::uint64_t seed) {
  centrality_report r;
  r.betweenness = betweenness(g, sample_pivots, seed);
  r.core_number = core_numbers(g);
  const auto n = static_cast<std::size_t>(g.node_count());
  r.in_degree.resize(n);
  r.out_degree.resize(n);
  for (node_t v = 0; v < g.node_count(); ++v) {
    r.in_degree[v] = g.in_degree(v);
    r.out_degree[v] = g.degree(v);
  }
  return r;
}

}  // namespace multichrome
