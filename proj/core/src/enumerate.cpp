#include "gpow/enumerate.hpp"

#include <sstream>
#include <stdexcept>
#include <thread>

#include "gpow/bound.hpp"
#include "gpow/certifier.hpp"
#include "gpow/graph_io.hpp"

namespace gpow {

namespace {

struct PairTable {
  std::vector<std::pair<int, int>> pairs;
  explicit PairTable(int n) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
};

Graph graph_from_mask(int n, const PairTable& table, std::uint64_t mask) {
  std::vector<VertexSet> rows(n, VertexSet(n));
  for (std::size_t i = 0; i < table.pairs.size(); ++i)
    if ((mask >> i) & 1) {
      auto [u, v] = table.pairs[i];
      rows[u].set(v);
      rows[v].set(u);
    }
  return Graph::from_adjacency(std::move(rows));
}

void scan_mask_range(int n, const PairTable& table, std::uint64_t lo, std::uint64_t hi,
                     const std::function<void(const Graph&)>& visit) {
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    Graph g = graph_from_mask(n, table, mask);
    if (is_connected(g)) visit(g);
  }
}

void accumulate(ScanSummary& s, const Graph& g, const BoundReport& r,
                const ScanOptions& opt) {
  ++s.examined;
  if (!r.applicable) return;
  ++s.applicable;
  if (r.status == Status::Pass)
    ++s.passed;
  else
    ++s.failed;

  if (opt.with_certificates) {
    Certificate cert = certify(g);
    if (cert.pass != (r.status == Status::Pass))
      throw std::logic_error("ratio_scan: certificate disagrees with bound report");
    if (cert.decomposition.ell == 0) ++s.ell_zero_count;
    if (cert.decomposition.ell >= 2) ++s.ell_ge2_count;
  }

  Rational ratio(r.lhs8, r.rhs7dn);
  if (!s.min_ratio || ratio < *s.min_ratio) {
    s.min_ratio = ratio;
    s.argmin.clear();
    s.argmin_truncated = false;
    s.argmin.push_back(emit_graph6(g));
  } else if (ratio == *s.min_ratio) {
    if (s.argmin.size() < opt.argmin_cap)
      s.argmin.push_back(emit_graph6(g));
    else
      s.argmin_truncated = true;
  }
}

// Merge in partition order; argmin stays deterministic.
void merge(ScanSummary& into, const ScanSummary& part, std::size_t argmin_cap) {
  into.examined += part.examined;
  into.applicable += part.applicable;
  into.passed += part.passed;
  into.failed += part.failed;
  into.ell_zero_count += part.ell_zero_count;
  into.ell_ge2_count += part.ell_ge2_count;
  if (!part.min_ratio) return;
  if (!into.min_ratio || *part.min_ratio < *into.min_ratio) {
    into.min_ratio = part.min_ratio;
    into.argmin = part.argmin;
    into.argmin_truncated = part.argmin_truncated;
  } else if (*part.min_ratio == *into.min_ratio) {
    for (const auto& g6 : part.argmin) {
      if (into.argmin.size() < argmin_cap)
        into.argmin.push_back(g6);
      else
        into.argmin_truncated = true;
    }
    into.argmin_truncated = into.argmin_truncated || part.argmin_truncated;
  }
}

}  // namespace

void enumerate_connected(int n, const std::function<void(const Graph&)>& visit) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("enumerate_connected: n must be in 1..8");
  PairTable table(n);
  std::uint64_t total = std::uint64_t{1} << table.pairs.size();
  scan_mask_range(n, table, 0, total, visit);
}

long long count_connected(int n) {
  long long c = 0;
  enumerate_connected(n, [&](const Graph&) { ++c; });
  return c;
}

ScanSummary ratio_scan(std::span<const Graph> source, const ScanOptions& opt) {
  ScanSummary s;
  s.certifier_cross_checked = opt.with_certificates;
  for (const Graph& g : source) {
    if (!is_connected(g)) {
      ++s.examined;  // inapplicable, still counted
      continue;
    }
    accumulate(s, g, bound_report(g), opt);
  }
  return s;
}

ScanSummary ratio_scan_connected(int n, const ScanOptions& opt) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("ratio_scan_connected: n must be in 1..8");
  PairTable table(n);
  std::uint64_t total = std::uint64_t{1} << table.pairs.size();
  int workers = std::max(1, opt.workers);

  std::vector<ScanSummary> parts(workers);
  std::vector<std::thread> threads;
  std::uint64_t chunk = (total + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    std::uint64_t lo = std::min<std::uint64_t>(w * chunk, total);
    std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, total);
    threads.emplace_back([&, w, lo, hi] {
      scan_mask_range(n, table, lo, hi, [&](const Graph& g) {
        accumulate(parts[w], g, bound_report(g), opt);
      });
    });
  }
  for (auto& t : threads) t.join();

  ScanSummary s;
  s.certifier_cross_checked = opt.with_certificates;
  for (const auto& part : parts) merge(s, part, opt.argmin_cap);
  return s;
}

std::string scan_summary_json(const ScanSummary& s) {
  std::ostringstream out;
  out << "{\"examined\":" << s.examined << ",\"applicable\":" << s.applicable
      << ",\"passed\":" << s.passed << ",\"failed\":" << s.failed;
  if (s.min_ratio)
    out << ",\"min_ratio_num\":" << s.min_ratio->num
        << ",\"min_ratio_den\":" << s.min_ratio->den;
  else
    out << ",\"min_ratio_num\":null,\"min_ratio_den\":null";
  out << ",\"argmin\":[";
  for (std::size_t i = 0; i < s.argmin.size(); ++i) {
    if (i) out << ",";
    out << "\"";
    for (char c : s.argmin[i]) {  // graph6 bytes include backslash
      if (c == '\\') out << '\\';
      out << c;
    }
    out << "\"";
  }
  out << "],\"argmin_truncated\":" << (s.argmin_truncated ? "true" : "false")
      << ",\"certifier_cross_checked\":" << (s.certifier_cross_checked ? "true" : "false")
      << "}";
  return out.str();
}

}  // namespace gpow
