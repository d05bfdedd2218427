#include "gpow/digraph.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace gpow {

Digraph Digraph::build(int n, std::span<const std::pair<int, int>> arcs) {
  if (n < 1) throw std::invalid_argument("Digraph: vertex count must be >= 1");
  if (n > kMaxVertices) throw std::invalid_argument("Digraph: vertex count exceeds maximum");
  std::vector<VertexSet> out(n, VertexSet(n));
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("Digraph: endpoint out of range in arc (" +
                                  std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v)
      throw std::invalid_argument("Digraph: self-loop at vertex " + std::to_string(u));
    if (out[u].test(v))
      throw std::invalid_argument("Digraph: duplicate arc (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    out[u].set(v);
  }
  return Digraph(n, std::move(out));
}

Digraph Digraph::from_out_rows(std::vector<VertexSet> rows) {
  int n = int(rows.size());
  if (n < 1) throw std::invalid_argument("Digraph: vertex count must be >= 1");
  for (int v = 0; v < n; ++v) {
    if (rows[v].universe() != n) throw std::invalid_argument("Digraph: row universe mismatch");
    if (rows[v].test(v)) throw std::invalid_argument("Digraph: self-loop");
  }
  return Digraph(n, std::move(rows));
}

long long Digraph::arc_count() const {
  long long c = 0;
  for (const auto& row : out_) c += row.count();
  return c;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    out_[u].for_each([&](int v) { out.emplace_back(u, v); });
  return out;
}

bool Digraph::is_orientation() const {
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (out_[u].test(v) && out_[v].test(u)) return false;
  return true;
}

Digraph digraph_square(const Digraph& d) {
  int n = d.vertex_count();
  std::vector<VertexSet> rows;
  rows.reserve(n);
  for (int u = 0; u < n; ++u) {
    VertexSet row = d.out(u);
    d.out(u).for_each([&](int w) { row |= d.out(w); });
    row.reset(u);
    rows.push_back(std::move(row));
  }
  return Digraph::from_out_rows(std::move(rows));
}

std::optional<int> balanced_degree(const Digraph& d) {
  int n = d.vertex_count();
  std::vector<int> in(n, 0);
  for (int u = 0; u < n; ++u) d.out(u).for_each([&](int v) { ++in[v]; });
  int deg = d.out(0).count();
  for (int v = 0; v < n; ++v)
    if (d.out(v).count() != deg || in[v] != deg) return std::nullopt;
  return deg;
}

long long pair_count(const Digraph& d) {
  int n = d.vertex_count();
  long long c = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (d.has_arc(u, v) || d.has_arc(v, u)) ++c;
  return c;
}

void eulerian_orientations(const Graph& g,
                           const std::function<void(const Digraph&)>& visit) {
  int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) % 2 != 0) return;  // no balanced orientation exists

  auto edges = g.edges();
  int m = int(edges.size());
  std::vector<int> remaining(n, 0);  // undecided incident edges
  for (auto [u, v] : edges) ++remaining[u], ++remaining[v];
  std::vector<int> imbalance(n, 0);  // out - in among decided arcs
  std::vector<bool> forward(m, false);

  auto feasible = [&](int v) { return std::abs(imbalance[v]) <= remaining[v]; };

  std::function<void(int)> go = [&](int i) {
    if (i == m) {
      std::vector<std::pair<int, int>> arcs;
      arcs.reserve(m);
      for (int j = 0; j < m; ++j)
        arcs.push_back(forward[j] ? edges[j] : std::pair{edges[j].second, edges[j].first});
      visit(Digraph::build(n, arcs));
      return;
    }
    auto [u, v] = edges[i];
    --remaining[u];
    --remaining[v];
    for (bool dir : {true, false}) {
      int du = dir ? 1 : -1;
      imbalance[u] += du;
      imbalance[v] -= du;
      if (feasible(u) && feasible(v)) {
        forward[i] = dir;
        go(i + 1);
      }
      imbalance[u] -= du;
      imbalance[v] += du;
    }
    ++remaining[u];
    ++remaining[v];
  };
  go(0);
}

OrientationScanSummary conjecture_scan(std::span<const Graph> source, bool require_regular,
                                       SquareCount mode, std::size_t argmin_cap) {
  OrientationScanSummary s;
  s.count_mode = mode;
  for (const Graph& g : source) {
    ++s.graphs_examined;
    eulerian_orientations(g, [&](const Digraph& d) {
      ++s.orientations_examined;
      if (require_regular && !balanced_degree(d)) return;
      long long e = d.arc_count();
      if (e == 0) return;  // ratio undefined; inequality vacuous
      Digraph sq = digraph_square(d);
      long long e2 = mode == SquareCount::Arcs ? sq.arc_count() : pair_count(sq);
      OrientationWitness w{d.arcs(), e, e2};
      if (e2 < 2 * e) s.violations.push_back(w);
      Rational ratio(e2, e);
      if (!s.min_ratio || ratio < *s.min_ratio) {
        s.min_ratio = ratio;
        s.argmin.clear();
        s.argmin_truncated = false;
        s.argmin.push_back(std::move(w));
      } else if (ratio == *s.min_ratio) {
        if (s.argmin.size() < argmin_cap)
          s.argmin.push_back(std::move(w));
        else
          s.argmin_truncated = true;
      }
    });
  }
  return s;
}

std::string orientation_summary_json(const OrientationScanSummary& s) {
  std::ostringstream out;
  auto emit_witness = [&](const OrientationWitness& w) {
    out << "{\"arcs\":[";
    for (std::size_t i = 0; i < w.arcs.size(); ++i) {
      if (i) out << ",";
      out << "[" << w.arcs[i].first << "," << w.arcs[i].second << "]";
    }
    out << "],\"e\":" << w.e << ",\"e_square\":" << w.e_square << "}";
  };
  out << "{\"graphs_examined\":" << s.graphs_examined
      << ",\"orientations_examined\":" << s.orientations_examined
      << ",\"count_mode\":\"" << (s.count_mode == SquareCount::Arcs ? "arcs" : "pairs")
      << "\",\"violations\":[";
  for (std::size_t i = 0; i < s.violations.size(); ++i) {
    if (i) out << ",";
    emit_witness(s.violations[i]);
  }
  out << "]";
  if (s.min_ratio)
    out << ",\"min_ratio_num\":" << s.min_ratio->num
        << ",\"min_ratio_den\":" << s.min_ratio->den;
  else
    out << ",\"min_ratio_num\":null,\"min_ratio_den\":null";
  out << ",\"argmin\":[";
  for (std::size_t i = 0; i < s.argmin.size(); ++i) {
    if (i) out << ",";
    emit_witness(s.argmin[i]);
  }
  out << "],\"argmin_truncated\":" << (s.argmin_truncated ? "true" : "false") << "}";
  return out.str();
}

}  // namespace gpow
