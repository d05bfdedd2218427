#pragma once

#include <optional>
#include <set>
#include <string>

#include "gpow/graph.hpp"
#include "gpow/rational.hpp"

namespace gpow {

// Three-valued verdict so scans can count categories separately.
enum class Status { Pass, Fail, NotApplicable };

std::string to_string(Status s);

// Exact scaled-integer comparison 8*e(G^3) vs 7*delta*v(G).
struct BoundReport {
  int n = 0;
  long long e = 0;
  int delta = 0;
  Distance diam;
  long long e_cube = 0;
  bool applicable = false;  // connected and diameter >= 3
  long long lhs8 = 0;       // 8 * e_cube
  long long rhs7dn = 0;     // 7 * delta * n
  Status status = Status::NotApplicable;
  std::optional<Rational> hegarty_ratio;  // e_cube / e, absent when e = 0

  bool passed() const { return status == Status::Pass; }
};

BoundReport bound_report(const Graph& g);

// One JSON object per line; field names are part of the interface.
std::string bound_report_json(const BoundReport& r);

// Circulant Cayley graph on Z_p: x ~ y iff (x - y) mod p lies in s.
Graph cayley_graph(int p, const std::set<int>& s);

// Applicability hypotheses for the Cauchy-Davenport corollary. LessThanK
// is the statement as printed, AtLeastK flips it; both admit saturated
// counterexamples (G^k complete with p-1 < k|S|). GreaterThanK keeps G^k
// incomplete, which is exactly where the sumset bound cannot truncate.
enum class DiameterPredicate { AtLeastK, LessThanK, GreaterThanK };

struct CayleyCheck {
  int p = 0;
  std::set<int> s;
  int k = 0;
  Distance diam;
  long long e = 0;
  long long e_k = 0;
  Status status = Status::NotApplicable;
  DiameterPredicate predicate = DiameterPredicate::AtLeastK;
};

// Checks e(G^k) >= k*e(G) in exact integers on the Cayley graph of (p, s),
// under the chosen diameter applicability predicate.
CayleyCheck cauchy_davenport_check(int p, const std::set<int>& s, int k,
                                   DiameterPredicate predicate = DiameterPredicate::AtLeastK);

bool is_prime(int p);

}  // namespace gpow
