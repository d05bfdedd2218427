#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gpow/graph.hpp"
#include "gpow/rational.hpp"

namespace gpow {

// Every labeled simple connected graph on n vertices, exactly once, by
// iterating all 2^C(n,2) edge masks and filtering connected. n <= 8; the
// CLI gates n = 8 behind a long-run flag.
void enumerate_connected(int n, const std::function<void(const Graph&)>& visit);

long long count_connected(int n);

struct ScanOptions {
  bool with_certificates = false;
  int workers = 1;
  std::size_t argmin_cap = 16;
};

struct ScanSummary {
  long long examined = 0;
  long long applicable = 0;  // connected and diameter >= 3
  long long passed = 0;
  long long failed = 0;
  std::optional<Rational> min_ratio;  // exact min of 8 e(G^3) / (7 delta n)
  std::vector<std::string> argmin;    // graph6 of the minimizers, ties kept
  bool argmin_truncated = false;
  bool certifier_cross_checked = false;
  // Branch coverage of the certificate chain, tracked when certificates run.
  long long ell_zero_count = 0;
  long long ell_ge2_count = 0;
};

// Runs bound_report (and optionally certify) per graph. A disagreement
// between certificate and bound report is an internal inconsistency and
// throws; theorem violations are data, not errors.
ScanSummary ratio_scan(std::span<const Graph> source, const ScanOptions& opt = {});

// Exhaustive scan over all labeled connected graphs on n vertices,
// partitioned over edge-mask ranges; result independent of worker count.
ScanSummary ratio_scan_connected(int n, const ScanOptions& opt = {});

std::string scan_summary_json(const ScanSummary& s);

}  // namespace gpow
