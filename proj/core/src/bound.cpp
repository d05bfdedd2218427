#include "gpow/bound.hpp"

#include <sstream>
#include <stdexcept>

namespace gpow {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: return "not_applicable";
  }
  return "?";
}

BoundReport bound_report(const Graph& g) {
  BoundReport r;
  r.n = g.vertex_count();
  auto stats = degree_stats(g);
  r.e = stats.edge_count;
  r.delta = stats.min_degree;
  r.diam = diameter(g);
  r.e_cube = degree_stats(power(g, 3)).edge_count;
  r.lhs8 = 8 * r.e_cube;
  r.rhs7dn = 7LL * r.delta * r.n;
  r.applicable = r.diam.has_value() && *r.diam >= 3;
  if (!r.applicable)
    r.status = Status::NotApplicable;
  else
    r.status = r.lhs8 >= r.rhs7dn ? Status::Pass : Status::Fail;
  if (r.e > 0) r.hegarty_ratio = Rational(r.e_cube, r.e);
  return r;
}

std::string bound_report_json(const BoundReport& r) {
  std::ostringstream out;
  out << "{\"n\":" << r.n << ",\"e\":" << r.e << ",\"delta\":" << r.delta << ",\"diam\":";
  if (r.diam)
    out << *r.diam;
  else
    out << "null";
  out << ",\"e_cube\":" << r.e_cube << ",\"lhs8\":" << r.lhs8 << ",\"rhs7dn\":" << r.rhs7dn
      << ",\"status\":\"" << to_string(r.status) << "\"";
  if (r.hegarty_ratio)
    out << ",\"ratio_num\":" << r.hegarty_ratio->num << ",\"ratio_den\":"
        << r.hegarty_ratio->den;
  else
    out << ",\"ratio_num\":null,\"ratio_den\":null";
  out << "}";
  return out.str();
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; (long long)d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Graph cayley_graph(int p, const std::set<int>& s) {
  if (!is_prime(p) || p == 2)
    throw std::invalid_argument("cayley_graph: p must be an odd prime");
  for (int x : s) {
    if (x <= 0 || x >= p)
      throw std::invalid_argument("cayley_graph: connection set element " +
                                  std::to_string(x) + " outside 1..p-1");
    if (!s.count(p - x))
      throw std::invalid_argument("cayley_graph: connection set not symmetric (missing " +
                                  std::to_string(p - x) + ")");
  }
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < p; ++x)
    for (int d : s) edges.emplace_back(x, (x + d) % p);
  return Graph::build(p, edges);
}

CayleyCheck cauchy_davenport_check(int p, const std::set<int>& s, int k,
                                   DiameterPredicate predicate) {
  if (k < 2) throw std::invalid_argument("cauchy_davenport_check: k must be >= 2");
  CayleyCheck c;
  c.p = p;
  c.s = s;
  c.k = k;
  c.predicate = predicate;
  Graph g = cayley_graph(p, s);
  c.diam = diameter(g);
  c.e = degree_stats(g).edge_count;
  c.e_k = degree_stats(power(g, k)).edge_count;
  bool applicable = false;
  if (c.diam.has_value()) {
    switch (predicate) {
      case DiameterPredicate::AtLeastK: applicable = *c.diam >= k; break;
      case DiameterPredicate::LessThanK: applicable = *c.diam < k; break;
      case DiameterPredicate::GreaterThanK: applicable = *c.diam > k; break;
    }
  }
  if (!applicable)
    c.status = Status::NotApplicable;
  else
    c.status = c.e_k >= (long long)k * c.e ? Status::Pass : Status::Fail;
  return c;
}

}  // namespace gpow
