#include "gpow/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gpow {

Graph Graph::build(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 1) throw std::invalid_argument("Graph: vertex count must be >= 1");
  if (n > kMaxVertices)
    throw std::invalid_argument("Graph: vertex count exceeds maximum " +
                                std::to_string(kMaxVertices));
  std::vector<VertexSet> adj(n, VertexSet(n));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("Graph: endpoint out of range in edge (" +
                                  std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v)
      throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
    adj[u].set(v);
    adj[v].set(u);
  }
  return Graph(n, std::move(adj));
}

Graph Graph::from_adjacency(std::vector<VertexSet> rows) {
  int n = int(rows.size());
  if (n < 1) throw std::invalid_argument("Graph: vertex count must be >= 1");
  for (int v = 0; v < n; ++v) {
    if (rows[v].universe() != n)
      throw std::invalid_argument("Graph: row universe mismatch");
    if (rows[v].test(v))
      throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(v));
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rows[u].test(v) != rows[v].test(u))
        throw std::invalid_argument("Graph: asymmetric adjacency at (" +
                                    std::to_string(u) + "," + std::to_string(v) + ")");
  return Graph(n, std::move(rows));
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    adj_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  int n = g.vertex_count();
  s.degrees.reserve(n);
  long long sum = 0;
  for (int v = 0; v < n; ++v) {
    int d = g.degree(v);
    s.degrees.push_back(d);
    sum += d;
  }
  s.min_degree = *std::min_element(s.degrees.begin(), s.degrees.end());
  s.edge_count = sum / 2;
  return s;
}

bool is_connected(const Graph& g) {
  return ball(g, VertexSet::singleton(g.vertex_count(), 0), g.vertex_count()).count() ==
         g.vertex_count();
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) {
  VertexSet out = x;
  x.for_each([&](int v) { out |= g.neighbors(v); });
  return out;
}

VertexSet ball(const Graph& g, const VertexSet& x, int r) {
  if (r < 0) throw std::invalid_argument("ball: radius must be >= 0");
  VertexSet reached = x;
  VertexSet frontier = x;
  for (int step = 0; step < r && frontier.any(); ++step) {
    VertexSet next(g.vertex_count());
    frontier.for_each([&](int v) { next |= g.neighbors(v); });
    next -= reached;
    reached |= next;
    frontier = std::move(next);
  }
  return reached;
}

std::vector<Distance> distances_from(const Graph& g, int v) {
  int n = g.vertex_count();
  if (v < 0 || v >= n) throw std::out_of_range("distances_from: vertex out of range");
  std::vector<Distance> dist(n);
  VertexSet reached(n);
  VertexSet frontier(n);
  reached.set(v);
  frontier.set(v);
  dist[v] = 0;
  int d = 0;
  while (frontier.any()) {
    VertexSet next(n);
    frontier.for_each([&](int u) { next |= g.neighbors(u); });
    next -= reached;
    ++d;
    next.for_each([&](int u) { dist[u] = d; });
    reached |= next;
    frontier = std::move(next);
  }
  return dist;
}

Distance diameter(const Graph& g) {
  int n = g.vertex_count();
  int best = 0;
  for (int v = 0; v < n; ++v) {
    auto dist = distances_from(g, v);
    for (int u = 0; u < n; ++u) {
      if (!dist[u]) return std::nullopt;  // disconnected
      best = std::max(best, *dist[u]);
    }
  }
  return best;
}

Graph power(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("power: k must be >= 1");
  int n = g.vertex_count();
  std::vector<VertexSet> rows;
  rows.reserve(n);
  for (int v = 0; v < n; ++v) {
    VertexSet row = ball(g, VertexSet::singleton(n, v), k);
    row.reset(v);
    rows.push_back(std::move(row));
  }
  return Graph::from_adjacency(std::move(rows));
}

}  // namespace gpow
