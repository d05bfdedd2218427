#include "gpow/certifier.hpp"

#include <sstream>
#include <stdexcept>

namespace gpow {

namespace {

void require_hypotheses(const Graph& g, bool need_diameter3) {
  if (!is_connected(g)) throw std::invalid_argument("certifier: graph must be connected");
  if (need_diameter3) {
    Distance d = diameter(g);
    if (!d || *d < 3)
      throw std::invalid_argument("certifier: graph must have diameter >= 3");
  }
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (int v = 0; v < n; ++v) {
    auto row = distances_from(g, v);
    for (int u = 0; u < n; ++u) dist[v][u] = row[u].value_or(-1);
  }
  return dist;
}

}  // namespace

std::vector<int> cube_degrees(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> out(n);
  for (int v = 0; v < n; ++v)
    out[v] = ball(g, VertexSet::singleton(n, v), 3).count() - 1;
  return out;
}

VertexSet doubling_set(const Graph& g) {
  require_hypotheses(g, /*need_diameter3=*/false);
  int n = g.vertex_count();
  int delta = degree_stats(g).min_degree;
  VertexSet z(n);
  auto cube = cube_degrees(g);
  for (int v = 0; v < n; ++v)
    if (cube[v] >= 2 * delta) z.set(v);
  return z;
}

Decomposition decompose(const Graph& g) {
  require_hypotheses(g, /*need_diameter3=*/true);
  return decompose_with_doubling(g, doubling_set(g));
}

Decomposition decompose_with_doubling(const Graph& g, const VertexSet& z) {
  require_hypotheses(g, /*need_diameter3=*/true);
  int n = g.vertex_count();
  Decomposition d;
  d.delta = degree_stats(g).min_degree;
  d.doubling = z;
  d.z_size = z.count();

  // Components of the induced subgraph G - Z.
  VertexSet rest = z.complement();
  while (rest.any()) {
    int seed = rest.first();
    VertexSet comp(n);
    VertexSet frontier(n);
    comp.set(seed);
    frontier.set(seed);
    while (frontier.any()) {
      VertexSet next(n);
      frontier.for_each([&](int v) { next |= g.neighbors(v); });
      next &= rest;
      next -= comp;
      comp |= next;
      frontier = std::move(next);
    }
    rest -= comp;
    d.x_blocks.push_back(std::move(comp));
  }

  // Touching relation on blocks via closed neighborhoods in the full graph.
  int m = int(d.x_blocks.size());
  std::vector<VertexSet> nbhd;
  nbhd.reserve(m);
  for (const auto& x : d.x_blocks) nbhd.push_back(closed_neighborhood(g, x));
  std::vector<std::vector<bool>> rel(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) rel[i][j] = nbhd[i].intersects(nbhd[j]);

  // Transitivity is a theorem (claim 4), not an assumption: record the
  // first violating triple instead of silently taking transitive closure.
  for (int i = 0; i < m && !d.transitivity_violation; ++i)
    for (int j = 0; j < m && !d.transitivity_violation; ++j)
      for (int k = 0; k < m; ++k)
        if (rel[i][j] && rel[j][k] && !rel[i][k]) {
          d.transitivity_violation = {i, j, k};
          break;
        }

  // Classes as connected components of the relation graph.
  std::vector<int> cls(m, -1);
  for (int i = 0; i < m; ++i) {
    if (cls[i] != -1) continue;
    int id = int(d.classes.size());
    d.classes.emplace_back();
    std::vector<int> stack{i};
    cls[i] = id;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      d.classes[id].push_back(cur);
      for (int j = 0; j < m; ++j)
        if (rel[cur][j] && cls[j] == -1) {
          cls[j] = id;
          stack.push_back(j);
        }
    }
  }

  for (const auto& members : d.classes) {
    VertexSet yb(n);
    for (int i : members) yb |= d.x_blocks[i];
    d.y_sizes.push_back(yb.count());
    d.y_total += yb.count();
    d.y_blocks.push_back(std::move(yb));
  }
  d.ell = int(d.y_blocks.size());
  return d;
}

ClaimResults verify_claims(const Graph& g, const Decomposition& d) {
  int n = g.vertex_count();
  ClaimResults res;
  auto dist = all_pairs_distances(g);
  auto fail = [&](int claim, std::vector<int> witness, std::string detail) {
    auto& c = res.claims[claim - 1];
    if (!c.pass) return;  // keep the first witness
    c.pass = false;
    c.witness = std::move(witness);
    c.detail = std::move(detail);
  };

  // (1) internal vertices of geodesic length-3 paths are doubling.
  for (int u = 0; u < n && res.claims[0].pass; ++u)
    for (int up = 0; up < n && res.claims[0].pass; ++up) {
      if (dist[u][up] != 3) continue;
      for (int w = 0; w < n; ++w) {
        if (w == u || w == up) continue;
        int a = dist[u][w], b = dist[w][up];
        if (a >= 1 && a <= 2 && a + b == 3 && !d.doubling.test(w)) {
          fail(1, {u, w, up}, "internal vertex of a geodesic of length 3 not in Z");
          break;
        }
      }
    }

  // (2) members of one X block share N^2.
  for (std::size_t i = 0; i < d.x_blocks.size() && res.claims[1].pass; ++i) {
    auto members = d.x_blocks[i].to_vector();
    if (members.size() < 2) continue;
    VertexSet ref = ball(g, VertexSet::singleton(n, members[0]), 2);
    for (std::size_t j = 1; j < members.size(); ++j)
      if (ball(g, VertexSet::singleton(n, members[j]), 2) != ref) {
        fail(2, {members[0], members[j]}, "N^2 differs inside X block " + std::to_string(i));
        break;
      }
  }

  // (3) N^2 agrees across touching blocks.
  {
    std::vector<VertexSet> nbhd;
    for (const auto& x : d.x_blocks) nbhd.push_back(closed_neighborhood(g, x));
    int m = int(d.x_blocks.size());
    for (int i = 0; i < m && res.claims[2].pass; ++i)
      for (int j = i + 1; j < m && res.claims[2].pass; ++j) {
        if (!nbhd[i].intersects(nbhd[j])) continue;
        for (int v : d.x_blocks[i].to_vector()) {
          VertexSet bv = ball(g, VertexSet::singleton(n, v), 2);
          bool bad = false;
          for (int vp : d.x_blocks[j].to_vector())
            if (ball(g, VertexSet::singleton(n, vp), 2) != bv) {
              fail(3, {v, vp}, "N^2 differs across touching blocks");
              bad = true;
              break;
            }
          if (bad) break;
        }
      }

    // (4) transitivity of the touching relation.
    if (d.transitivity_violation) {
      auto [a, b, c] = *d.transitivity_violation;
      fail(4, {a, b, c}, "touching relation is not transitive on these block indices");
    } else {
      for (int i = 0; i < m && res.claims[3].pass; ++i)
        for (int j = 0; j < m && res.claims[3].pass; ++j)
          for (int k = 0; k < m; ++k)
            if (nbhd[i].intersects(nbhd[j]) && nbhd[j].intersects(nbhd[k]) &&
                !nbhd[i].intersects(nbhd[k])) {
              fail(4, {i, j, k}, "touching relation is not transitive on these block indices");
              break;
            }
    }
  }

  // (5) N(Y_i) induces a clique in G^2.
  for (std::size_t i = 0; i < d.y_blocks.size() && res.claims[4].pass; ++i) {
    auto members = closed_neighborhood(g, d.y_blocks[i]).to_vector();
    for (std::size_t a = 0; a < members.size() && res.claims[4].pass; ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        int da = dist[members[a]][members[b]];
        if (da < 0 || da > 2) {
          fail(5, {members[a], members[b]},
               "pair in N(Y_" + std::to_string(i) + ") beyond distance 2");
          break;
        }
      }
  }

  // (6) cube degree >= delta + y_i on Y_i, and the proof's witness vertex
  // u in N^2(Y_i) \ N(Y_i) exists.
  {
    auto cube = cube_degrees(g);
    for (std::size_t i = 0; i < d.y_blocks.size() && res.claims[5].pass; ++i) {
      for (int v : d.y_blocks[i].to_vector())
        if (cube[v] < d.delta + d.y_sizes[i]) {
          fail(6, {v}, "cube degree below delta + y_i in Y_" + std::to_string(i));
          break;
        }
      if (!res.claims[5].pass) break;
      VertexSet outer = ball(g, d.y_blocks[i], 2) - closed_neighborhood(g, d.y_blocks[i]);
      if (outer.none())
        fail(6, {int(i)}, "no vertex in N^2(Y_i) \\ N(Y_i) for Y_" + std::to_string(i));
    }
  }

  // (7) z >= delta*ell - y, plus the two sub-facts used in its proof.
  {
    for (std::size_t i = 0; i < d.y_blocks.size() && res.claims[6].pass; ++i) {
      VertexSet ny = closed_neighborhood(g, d.y_blocks[i]);
      if ((ny & d.doubling).count() < d.delta - d.y_sizes[i])
        fail(7, {int(i)}, "|N(Y_i) cap Z| < delta - y_i");
    }
    for (std::size_t i = 0; i < d.y_blocks.size() && res.claims[6].pass; ++i)
      for (std::size_t j = i + 1; j < d.y_blocks.size(); ++j)
        if (closed_neighborhood(g, d.y_blocks[i])
                .intersects(closed_neighborhood(g, d.y_blocks[j]))) {
          fail(7, {int(i), int(j)}, "closed neighborhoods of distinct Y blocks intersect");
          break;
        }
    if (res.claims[6].pass && d.z_size < d.delta * d.ell - d.y_total)
      fail(7, {}, "z < delta*ell - y");
  }

  return res;
}

Certificate certify(const Graph& g) {
  return certify_with_doubling(g, doubling_set(g));
}

Certificate certify_with_doubling(const Graph& g, const VertexSet& z) {
  Certificate cert;
  cert.decomposition = decompose_with_doubling(g, z);
  cert.claims = verify_claims(g, cert.decomposition);
  const auto& d = cert.decomposition;

  long long sum_deg = 0;
  for (int dv : cube_degrees(g)) sum_deg += dv;
  cert.chain_lhs4 = 4 * sum_deg;

  long long inner = 2LL * d.delta * d.z_size;
  long long sum_sq = 0;
  for (int yi : d.y_sizes) {
    inner += (long long)yi * (d.delta + yi);
    sum_sq += (long long)yi * yi;
  }
  cert.chain_bound4 = 4 * inner;
  cert.chain_rhs4 = 7LL * d.delta * g.vertex_count();
  cert.cs_ok = d.ell == 0 || (long long)d.ell * sum_sq >= (long long)d.y_total * d.y_total;

  cert.pass = cert.claims.all_pass() && cert.cs_ok &&
              cert.chain_lhs4 >= cert.chain_bound4 &&
              cert.chain_bound4 >= cert.chain_rhs4;
  return cert;
}

std::string certificate_json(const Certificate& c) {
  std::ostringstream out;
  auto emit_set = [&](const VertexSet& s) {
    out << "[";
    bool first = true;
    s.for_each([&](int v) {
      if (!first) out << ",";
      out << v;
      first = false;
    });
    out << "]";
  };
  auto emit_blocks = [&](const std::vector<VertexSet>& blocks) {
    out << "[";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (i) out << ",";
      emit_set(blocks[i]);
    }
    out << "]";
  };
  const auto& d = c.decomposition;
  out << "{\"delta\":" << d.delta << ",\"z\":";
  emit_set(d.doubling);
  out << ",\"x_blocks\":";
  emit_blocks(d.x_blocks);
  out << ",\"y_blocks\":";
  emit_blocks(d.y_blocks);
  out << ",\"ell\":" << d.ell << ",\"y\":" << d.y_total << ",\"z_size\":" << d.z_size;
  out << ",\"claims\":{";
  for (int i = 1; i <= 7; ++i) {
    if (i > 1) out << ",";
    const auto& cl = c.claims.claim(i);
    out << "\"c" << i << "\":{\"verdict\":\"" << (cl.pass ? "pass" : "fail") << "\"";
    if (!cl.pass) {
      out << ",\"witness\":[";
      for (std::size_t j = 0; j < cl.witness.size(); ++j) {
        if (j) out << ",";
        out << cl.witness[j];
      }
      out << "],\"detail\":\"" << cl.detail << "\"";
    }
    out << "}";
  }
  out << "},\"chain_lhs4\":" << c.chain_lhs4 << ",\"chain_bound4\":" << c.chain_bound4
      << ",\"chain_rhs4\":" << c.chain_rhs4 << ",\"cs_ok\":" << (c.cs_ok ? "true" : "false")
      << ",\"pass\":" << (c.pass ? "true" : "false") << "}";
  return out.str();
}

}  // namespace gpow
