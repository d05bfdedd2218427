// gpow: command-line front end for the graph-powers verification toolkit.
//
// Exit codes: 0 all checks passed (or nothing to check), 1 at least one
// fail verdict or conjecture violation, 2 usage or input error.

#include <unistd.h>

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gpow/bound.hpp"
#include "gpow/certifier.hpp"
#include "gpow/digraph.hpp"
#include "gpow/enumerate.hpp"
#include "gpow/extremal.hpp"
#include "gpow/graph_io.hpp"

namespace {

using namespace gpow;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Auto-detects the input format by its first significant byte: a digit or
// the "directed" keyword means edge list (one graph), anything else is
// one graph6 record per line.
std::vector<Graph> read_graphs(const std::string& text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace((unsigned char)text[pos])) {
      ++pos;
      continue;
    }
    if (text[pos] == '#') {  // comment line
      while (pos < text.size() && text[pos] != '\n') ++pos;
      continue;
    }
    break;
  }
  if (pos >= text.size()) return {};

  if (std::isdigit((unsigned char)text[pos]) || text.compare(pos, 8, "directed") == 0) {
    TextGraphRecord rec = parse_edge_list(text);
    if (rec.directed)
      throw FormatError("directed edge list where an undirected graph is expected");
    return {Graph::build(rec.n, rec.pairs)};
  }

  std::vector<Graph> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

bool use_color() {
  return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout));
}

std::string verdict_cell(bool ok) {
  if (!use_color()) return ok ? "PASS" : "FAIL";
  return ok ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

int cmd_power(const std::string& input, int k) {
  for (const Graph& g : read_graphs(slurp(input)))
    std::cout << emit_graph6(power(g, k)) << "\n";
  return kExitOk;
}

int cmd_check(const std::string& input, const std::string& format) {
  bool any_fail = false;
  for (const Graph& g : read_graphs(slurp(input))) {
    BoundReport r = bound_report(g);
    any_fail = any_fail || r.status == Status::Fail;
    if (format == "json") {
      std::cout << bound_report_json(r) << "\n";
    } else {
      std::cout << "n=" << r.n << " e=" << r.e << " delta=" << r.delta
                << " e_cube=" << r.e_cube << " 8e3=" << r.lhs8 << " 7dn=" << r.rhs7dn
                << " ";
      if (r.status == Status::NotApplicable)
        std::cout << "N/A (diameter < 3 or disconnected)";
      else
        std::cout << verdict_cell(r.status == Status::Pass);
      std::cout << "\n";
    }
  }
  return any_fail ? kExitFail : kExitOk;
}

int cmd_certify(const std::string& input) {
  bool any_fail = false;
  for (const Graph& g : read_graphs(slurp(input))) {
    Certificate c = certify(g);
    any_fail = any_fail || !c.pass;
    std::cout << certificate_json(c) << "\n";
  }
  return any_fail ? kExitFail : kExitOk;
}

int cmd_extremal(int k, bool validate, bool edges) {
  if (validate) {
    ExtremalReport r = validate_extremal(k);
    std::cout << "k=" << r.k << " v=" << r.actual_v << " e=" << r.actual_e
              << " e_cube=" << r.actual_e_cube << " diam="
              << (r.actual_diam ? std::to_string(*r.actual_diam) : "inf")
              << " regular=" << (r.regular ? "yes" : "no")
              << " tightness=" << r.tightness.str() << " " << verdict_cell(r.ok) << "\n";
    for (const auto& m : r.mismatches) std::cerr << "mismatch: " << m << "\n";
    return r.ok ? kExitOk : kExitFail;
  }
  Graph g = build_extremal(k);
  if (edges)
    std::cout << emit_edge_list(g);
  else
    std::cout << emit_graph6(g) << "\n";
  return kExitOk;
}

int cmd_scan(int n, bool from_stdin, bool with_certs, int workers, bool long_run,
             const std::string& format) {
  ScanOptions opt;
  opt.with_certificates = with_certs;
  opt.workers = workers;
  ScanSummary s;
  if (from_stdin) {
    auto graphs = read_graphs(slurp("-"));
    s = ratio_scan(graphs, opt);
  } else {
    if (n > 8) {
      std::cerr << "scan: n=" << n
                << " exceeds the supported exhaustive range (max 8; n=8 requires "
                   "--long-run)\n";
      return kExitUsage;
    }
    if (n == 8 && !long_run) {
      std::cerr << "scan: n=8 enumerates 2^28 edge masks; pass --long-run to confirm\n";
      return kExitUsage;
    }
    s = ratio_scan_connected(n, opt);
  }
  if (format == "json") {
    std::cout << scan_summary_json(s) << "\n";
  } else {
    std::cout << "examined    " << s.examined << "\n"
              << "applicable  " << s.applicable << "\n"
              << "passed      " << s.passed << "\n"
              << "failed      " << s.failed << "\n";
    if (s.min_ratio) {
      std::cout << "min ratio   " << s.min_ratio->str() << "\n" << "argmin     ";
      for (const auto& g6 : s.argmin) std::cout << " " << g6;
      if (s.argmin_truncated) std::cout << " ...";
      std::cout << "\n";
    }
    std::cout << "verdict     " << verdict_cell(s.failed == 0) << "\n";
  }
  return s.failed == 0 ? kExitOk : kExitFail;
}

int cmd_cayley(int p, const std::string& set_spec, int k, const std::string& predicate) {
  std::set<int> s;
  std::stringstream ss(set_spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      s.insert(std::stoi(tok));
    } catch (const std::exception&) {
      throw FormatError("cayley: bad connection-set element '" + tok + "'");
    }
  }
  DiameterPredicate pred = DiameterPredicate::AtLeastK;
  if (predicate == "lt") pred = DiameterPredicate::LessThanK;
  if (predicate == "gt") pred = DiameterPredicate::GreaterThanK;
  CayleyCheck c = cauchy_davenport_check(p, s, k, pred);
  std::cout << "{\"p\":" << c.p << ",\"k\":" << c.k << ",\"diam\":";
  if (c.diam)
    std::cout << *c.diam;
  else
    std::cout << "null";
  std::cout << ",\"e\":" << c.e << ",\"e_k\":" << c.e_k << ",\"status\":\""
            << to_string(c.status) << "\",\"predicate\":\""
            << (pred == DiameterPredicate::AtLeastK
                    ? "diam>=k"
                    : pred == DiameterPredicate::LessThanK ? "diam<k" : "diam>k")
            << "\"}\n";
  return c.status == Status::Fail ? kExitFail : kExitOk;
}

int cmd_orient_scan(int n, bool require_regular, const std::string& count_mode) {
  std::vector<Graph> graphs;
  enumerate_connected(n, [&](const Graph& g) { graphs.push_back(g); });
  auto mode = count_mode == "pairs" ? SquareCount::Pairs : SquareCount::Arcs;
  OrientationScanSummary s = conjecture_scan(graphs, require_regular, mode);
  std::cout << orientation_summary_json(s) << "\n";
  return s.violations.empty() ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph powers verification toolkit"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "json";
  int k = 1, n = 5, p = 5, workers = 1;
  std::string set_spec, predicate = "ge", count_mode = "arcs";
  bool validate = false, edges = false, from_stdin = false, with_certs = false,
       long_run = false, require_regular = false;

  auto* power_cmd = app.add_subcommand("power", "emit the k-th power of each input graph");
  power_cmd->add_option("--k", k, "power exponent")->required()->check(CLI::PositiveNumber);
  power_cmd->add_option("--input", input, "input path (default stdin)");

  auto* check_cmd = app.add_subcommand("check", "bound report 8e(G^3) vs 7*delta*n per graph");
  check_cmd->add_option("--input", input, "input path (default stdin)");
  check_cmd->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  auto* certify_cmd = app.add_subcommand("certify", "proof certificate per input graph");
  certify_cmd->add_option("--input", input, "input path (default stdin)");

  auto* extremal_cmd = app.add_subcommand("extremal", "build or validate the tight family G_k");
  extremal_cmd->add_option("--k", k, "family index")->required()->check(CLI::PositiveNumber);
  extremal_cmd->add_flag("--validate", validate, "compare against the closed forms");
  extremal_cmd->add_flag("--edges", edges, "emit as edge list instead of graph6");

  auto* scan_cmd = app.add_subcommand("scan", "ratio scan over a graph population");
  auto* scan_n = scan_cmd->add_option("--n", n, "exhaustive over labeled connected graphs");
  auto* scan_stdin = scan_cmd->add_flag("--stdin", from_stdin, "read graph6 lines from stdin");
  scan_n->excludes(scan_stdin);
  scan_cmd->add_flag("--certify", with_certs, "also run the certifier on each graph");
  scan_cmd->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  scan_cmd->add_flag("--long-run", long_run, "allow the n=8 exhaustive scan");
  scan_cmd->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  auto* cayley_cmd = app.add_subcommand("cayley", "Cauchy-Davenport check on a circulant");
  cayley_cmd->add_option("--p", p, "odd prime modulus")->required();
  cayley_cmd->add_option("--set", set_spec, "comma-separated symmetric connection set")
      ->required();
  cayley_cmd->add_option("--k", k, "power exponent")->required()->check(CLI::PositiveNumber);
  cayley_cmd->add_option("--predicate", predicate, "applicability: ge (diam>=k), lt (diam<k), gt (diam>k)")
      ->check(CLI::IsMember({"ge", "lt", "gt"}));

  auto* orient_cmd =
      app.add_subcommand("orient-scan", "digraph-square conjecture over balanced orientations");
  orient_cmd->add_option("--n", n, "vertex count, exhaustive over connected graphs")
      ->required()
      ->check(CLI::Range(1, 6));
  orient_cmd->add_flag("--require-regular", require_regular,
                       "only orientations with one balanced degree d");
  orient_cmd->add_option("--count", count_mode, "square edge counting: arcs or pairs")
      ->check(CLI::IsMember({"arcs", "pairs"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (power_cmd->parsed()) return cmd_power(input, k);
    if (check_cmd->parsed()) return cmd_check(input, format);
    if (certify_cmd->parsed()) return cmd_certify(input);
    if (extremal_cmd->parsed()) return cmd_extremal(k, validate, edges);
    if (scan_cmd->parsed()) {
      if (!*scan_n && !from_stdin) {
        std::cerr << "scan: pass --n N or --stdin\n";
        return kExitUsage;
      }
      return cmd_scan(n, from_stdin, with_certs, workers, long_run, format);
    }
    if (cayley_cmd->parsed()) return cmd_cayley(p, set_spec, k, predicate);
    if (orient_cmd->parsed()) return cmd_orient_scan(n, require_regular, count_mode);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
