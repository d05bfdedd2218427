#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gpow/graph.hpp"
#include "gpow/rational.hpp"

namespace gpow {

// Directed graph as out-neighborhood bit rows. At most one arc per
// ordered pair, no loops; both directions of a pair may be present in
// general, but orientations of simple graphs never have both.
class Digraph {
 public:
  // Throws on out-of-range endpoints, self-loops, and duplicate arcs.
  static Digraph build(int n, std::span<const std::pair<int, int>> arcs);
  static Digraph build(int n, std::initializer_list<std::pair<int, int>> arcs) {
    return build(n, std::span<const std::pair<int, int>>(arcs.begin(), arcs.size()));
  }
  static Digraph from_out_rows(std::vector<VertexSet> rows);

  int vertex_count() const { return n_; }
  const VertexSet& out(int v) const { return out_.at(v); }
  bool has_arc(int u, int v) const { return out_.at(u).test(v); }
  long long arc_count() const;
  std::vector<std::pair<int, int>> arcs() const;
  bool is_orientation() const;  // never both (u,v) and (v,u)

  bool operator==(const Digraph& o) const { return n_ == o.n_ && out_ == o.out_; }

 private:
  Digraph(int n, std::vector<VertexSet> out) : n_(n), out_(std::move(out)) {}
  int n_ = 0;
  std::vector<VertexSet> out_;
};

// D^2: arc (u,w) iff directed distance from u to w is 1 or 2.
Digraph digraph_square(const Digraph& d);

// d if every in-degree and out-degree equals d; absent otherwise.
std::optional<int> balanced_degree(const Digraph& d);

// Unordered pairs {u,w} with an arc in at least one direction.
long long pair_count(const Digraph& d);

// Enumerates every orientation of E(g) with in-degree = out-degree at each
// vertex, exactly once, by edge-order backtracking with imbalance pruning.
// Graphs with an odd-degree vertex yield nothing.
void eulerian_orientations(const Graph& g, const std::function<void(const Digraph&)>& visit);

enum class SquareCount { Arcs, Pairs };

struct OrientationWitness {
  std::vector<std::pair<int, int>> arcs;
  long long e = 0;
  long long e_square = 0;
};

struct OrientationScanSummary {
  long long graphs_examined = 0;
  long long orientations_examined = 0;
  std::vector<OrientationWitness> violations;  // e(D^2) < 2 e(D)
  std::optional<Rational> min_ratio;           // exact min of e(D^2)/e(D)
  std::vector<OrientationWitness> argmin;
  bool argmin_truncated = false;
  SquareCount count_mode = SquareCount::Arcs;
};

// Tests e(D^2) >= 2 e(D) over every Eulerian orientation of every graph in
// the source. When require_regular, only orientations with a constant
// balanced degree d are recorded.
OrientationScanSummary conjecture_scan(std::span<const Graph> source, bool require_regular,
                                       SquareCount mode = SquareCount::Arcs,
                                       std::size_t argmin_cap = 16);

std::string orientation_summary_json(const OrientationScanSummary& s);

}  // namespace gpow
