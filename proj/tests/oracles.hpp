#pragma once

// Test-only oracles. These deliberately avoid the library's bit-parallel
// code paths: queue BFS on adjacency lists, union-find connectivity, and
// a from-scratch graph6 encoder.

#include <numeric>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "gpow/graph.hpp"

namespace oracle {

inline std::vector<std::vector<int>> adjacency_lists(
    int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

// BFS distances; -1 = unreachable.
inline std::vector<int> bfs(int n, const std::vector<std::pair<int, int>>& edges, int src) {
  auto adj = adjacency_lists(n, edges);
  std::vector<int> dist(n, -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : adj[v])
      if (dist[u] == -1) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
  }
  return dist;
}

inline std::vector<int> bfs(const gpow::Graph& g, int src) {
  return bfs(g.vertex_count(), g.edges(), src);
}

// -1 when disconnected.
inline int diameter(const gpow::Graph& g) {
  int n = g.vertex_count();
  int best = 0;
  for (int v = 0; v < n; ++v)
    for (int d : bfs(g, v)) {
      if (d == -1) return -1;
      best = std::max(best, d);
    }
  return best;
}

inline bool connected_union_find(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : edges) parent[find(u)] = find(v);
  for (int v = 1; v < n; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

// Independent graph6 encoder: materialize the column-major upper-triangle
// bit string, then pack 6 at a time.
inline std::string graph6(const gpow::Graph& g) {
  int n = g.vertex_count();
  std::vector<int> bits;
  for (int c = 1; c < n; ++c)
    for (int r = 0; r < c; ++r) bits.push_back(g.has_edge(r, c) ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  std::string out;
  out.push_back(char(63 + n));
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int val = 0;
    for (int b = 0; b < 6; ++b) val = val * 2 + bits[i + b];
    out.push_back(char(63 + val));
  }
  return out;
}

// Convenience builders.
inline gpow::Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return gpow::Graph::build(n, e);
}

inline gpow::Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return gpow::Graph::build(n, e);
}

inline gpow::Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return gpow::Graph::build(n, e);
}

}  // namespace oracle
