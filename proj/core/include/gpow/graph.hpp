#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gpow/vertex_set.hpp"

namespace gpow {

// BFS distance; disengaged means unreachable (different component).
using Distance = std::optional<int>;

// Immutable undirected simple graph, one bit row per vertex.
class Graph {
 public:
  // Builds from an unordered edge list; duplicates are merged, both
  // orientations of a pair are accepted. Throws on out-of-range endpoints
  // and self-loops.
  static Graph build(int n, std::span<const std::pair<int, int>> edges);
  static Graph build(int n, std::initializer_list<std::pair<int, int>> edges) {
    return build(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
  }

  // Adopts prebuilt rows; validates symmetry and irreflexivity.
  static Graph from_adjacency(std::vector<VertexSet> rows);

  int vertex_count() const { return n_; }
  const VertexSet& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return adj_.at(v).count(); }
  bool has_edge(int u, int v) const { return adj_.at(u).test(v); }

  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

 private:
  Graph(int n, std::vector<VertexSet> adj) : n_(n), adj_(std::move(adj)) {}

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

struct DegreeStats {
  int min_degree = 0;
  std::vector<int> degrees;
  long long edge_count = 0;
};

DegreeStats degree_stats(const Graph& g);

bool is_connected(const Graph& g);

// N(X): X together with every vertex adjacent to X.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& x);

// N^r(X): vertices at distance <= r from X, by r rounds of frontier
// expansion OR-ing adjacency rows.
VertexSet ball(const Graph& g, const VertexSet& x, int r);

std::vector<Distance> distances_from(const Graph& g, int v);

// Maximum pairwise distance; unreachable iff g is disconnected.
Distance diameter(const Graph& g);

// G^k: joins pairs at distance 1..k. Depth-capped BFS per vertex.
Graph power(const Graph& g, int k);

}  // namespace gpow
