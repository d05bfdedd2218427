#include "gpow/extremal.hpp"

#include <stdexcept>

#include "gpow/certifier.hpp"

namespace gpow {

Graph build_extremal(int k) {
  if (k < 1) throw std::invalid_argument("build_extremal: k must be >= 1");
  int n = 8 * k + 3;
  if (n > kMaxVertices) throw std::invalid_argument("build_extremal: k too large");

  // Layer boundaries: [lo, hi] inclusive.
  struct Layer {
    int lo, hi;
  };
  Layer h1{0, 2 * k};
  Layer h2{2 * k + 1, 4 * k};
  Layer h3{4 * k + 1, 4 * k + 1};
  Layer h4{4 * k + 2, 6 * k + 1};
  Layer h5{6 * k + 2, 8 * k + 2};

  std::vector<std::pair<int, int>> edges;

  auto clique = [&](Layer l) {
    for (int u = l.lo; u <= l.hi; ++u)
      for (int v = u + 1; v <= l.hi; ++v) edges.emplace_back(u, v);
  };
  // K_{2k} minus the matching on consecutive local pairs (2j, 2j+1).
  auto clique_minus_matching = [&](Layer l) {
    for (int u = l.lo; u <= l.hi; ++u)
      for (int v = u + 1; v <= l.hi; ++v) {
        int lu = u - l.lo, lv = v - l.lo;
        if (lv == lu + 1 && lu % 2 == 0) continue;  // removed matching edge
        edges.emplace_back(u, v);
      }
  };
  auto join = [&](Layer a, Layer b) {
    for (int u = a.lo; u <= a.hi; ++u)
      for (int v = b.lo; v <= b.hi; ++v) edges.emplace_back(u, v);
  };

  clique(h1);
  clique_minus_matching(h2);
  clique_minus_matching(h4);
  clique(h5);
  join(h1, h2);
  join(h2, h3);
  join(h3, h4);
  join(h4, h5);
  return Graph::build(n, edges);
}

ExtremalExpectation extremal_expectations(int k) {
  if (k < 1) throw std::invalid_argument("extremal_expectations: k must be >= 1");
  long long kk = k;
  ExtremalExpectation x;
  x.k = kk;
  x.v = 8 * kk + 3;
  x.reg_degree = 4 * kk;
  x.e = 16 * kk * kk + 6 * kk;
  x.e_cube = 28 * kk * kk + 16 * kk + 2;
  x.hi_count = 4 * kk + 1;
  x.hi_degree = 8 * kk + 2;
  x.lo_count = 4 * kk + 2;
  x.lo_degree = 6 * kk + 1;
  return x;
}

ExtremalReport validate_extremal(int k) {
  ExtremalReport r;
  r.k = k;
  r.expected = extremal_expectations(k);
  Graph g = build_extremal(k);
  auto stats = degree_stats(g);

  r.actual_v = g.vertex_count();
  r.actual_e = stats.edge_count;
  r.actual_diam = diameter(g);
  r.regular = true;
  for (int d : stats.degrees)
    if (d != r.expected.reg_degree) r.regular = false;

  auto cube = cube_degrees(g);
  long long sum = 0;
  for (int d : cube) {
    sum += d;
    if (d == r.expected.hi_degree)
      ++r.actual_hi_count;
    else if (d == r.expected.lo_degree)
      ++r.actual_lo_count;
  }
  r.actual_e_cube = sum / 2;

  auto mismatch = [&](const std::string& what) { r.mismatches.push_back(what); };
  if (r.actual_v != r.expected.v) mismatch("vertex count");
  if (!r.regular) mismatch("regularity 4k");
  if (r.actual_e != r.expected.e) mismatch("edge count");
  if (r.actual_e_cube != r.expected.e_cube) mismatch("cube edge count");
  if (!r.actual_diam || *r.actual_diam != 4) mismatch("diameter 4");
  if (r.actual_hi_count != r.expected.hi_count) mismatch("count of cube degree 8k+2");
  if (r.actual_lo_count != r.expected.lo_count) mismatch("count of cube degree 6k+1");
  if (r.actual_hi_count + r.actual_lo_count != r.actual_v)
    mismatch("cube degrees outside {8k+2, 6k+1}");

  r.tightness = Rational(8 * r.actual_e_cube, 7 * r.expected.reg_degree * r.expected.v);
  r.ok = r.mismatches.empty();
  return r;
}

}  // namespace gpow
