#pragma once

#include <string>
#include <vector>

#include "gpow/graph.hpp"
#include "gpow/rational.hpp"

namespace gpow {

// Closed forms for the five-layer tight family.
struct ExtremalExpectation {
  long long k = 0;
  long long v = 0;           // 8k+3
  long long reg_degree = 0;  // 4k
  long long e = 0;           // 16k^2 + 6k
  long long e_cube = 0;      // 28k^2 + 16k + 2
  long long hi_count = 0;    // 4k+1 vertices of cube degree 8k+2
  long long hi_degree = 0;
  long long lo_count = 0;    // 4k+2 vertices of cube degree 6k+1
  long long lo_degree = 0;
};

// Layers in order: K_{2k+1}, K_{2k} minus a perfect matching, one vertex,
// mirrored; complete joins between consecutive layers. Deterministic
// vertex layout, matching removed on consecutive local pairs.
Graph build_extremal(int k);

ExtremalExpectation extremal_expectations(int k);

struct ExtremalReport {
  int k = 0;
  ExtremalExpectation expected;
  long long actual_v = 0;
  long long actual_e = 0;
  long long actual_e_cube = 0;
  Distance actual_diam;
  bool regular = false;
  long long actual_hi_count = 0;
  long long actual_lo_count = 0;
  Rational tightness;  // 8*e_cube / (7*4k*(8k+3))
  std::vector<std::string> mismatches;
  bool ok = false;
};

// Builds G_k and compares every measured quantity against the closed forms.
ExtremalReport validate_extremal(int k);

}  // namespace gpow
