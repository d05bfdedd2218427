#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gpow/bound.hpp"
#include "gpow/graph.hpp"

namespace gpow {

// The proof's partition of V(G): doubling set Z, components X_i of G - Z,
// the touching relation on components, and unions Y_i of its classes.
struct Decomposition {
  int delta = 0;
  VertexSet doubling;                      // Z
  std::vector<VertexSet> x_blocks;         // components of G - Z
  std::vector<std::vector<int>> classes;   // partition of X-block indices
  std::vector<VertexSet> y_blocks;         // one union per class
  int ell = 0;                             // number of Y blocks
  std::vector<int> y_sizes;
  int y_total = 0;                         // sum of y_sizes
  int z_size = 0;                          // |Z|
  // Set when the touching relation failed transitivity: the violating
  // block-index triple (i, j, k) with i~j, j~k but not i~k.
  std::optional<std::array<int, 3>> transitivity_violation;
};

struct ClaimResult {
  bool pass = true;
  std::vector<int> witness;  // offending vertices / block indices, first-found
  std::string detail;
};

struct ClaimResults {
  std::array<ClaimResult, 7> claims;  // claims (1)..(7)

  const ClaimResult& claim(int i) const { return claims.at(i - 1); }
  bool all_pass() const {
    for (const auto& c : claims)
      if (!c.pass) return false;
    return true;
  }
};

struct Certificate {
  Decomposition decomposition;
  ClaimResults claims;
  long long chain_lhs4 = 0;    // 4 * sum of cube degrees
  long long chain_bound4 = 0;  // 4 * (2*delta*z + sum y_i*(delta+y_i))
  long long chain_rhs4 = 0;    // 7 * delta * n
  bool cs_ok = false;          // ell * sum(y_i^2) >= y^2, vacuous when ell = 0
  bool pass = false;
};

// Z: vertices with deg_{G^3}(v) >= 2*delta. Requires a connected graph.
VertexSet doubling_set(const Graph& g);

// Requires connected and diameter >= 3 (the theorem's hypotheses).
Decomposition decompose(const Graph& g);

// Same machinery with a caller-supplied Z; used to check that corrupting
// the doubling set surfaces as a failing claim or chain.
Decomposition decompose_with_doubling(const Graph& g, const VertexSet& z);

ClaimResults verify_claims(const Graph& g, const Decomposition& d);

Certificate certify(const Graph& g);
Certificate certify_with_doubling(const Graph& g, const VertexSet& z);

// One JSON object per line, self-contained for an independent re-checker.
std::string certificate_json(const Certificate& c);

std::vector<int> cube_degrees(const Graph& g);

}  // namespace gpow
