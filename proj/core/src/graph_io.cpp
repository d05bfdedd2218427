#include "gpow/graph_io.hpp"

#include <charconv>
#include <sstream>

namespace gpow {

namespace {

constexpr int kGraph6Bias = 63;
constexpr int kGraph6Max = 126;

int triangle_bits(int n) { return n * (n - 1) / 2; }

int body_bytes(int n) { return (triangle_bits(n) + 5) / 6; }

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw FormatError("graph6: empty record");
  for (unsigned char c : line)
    if (c < kGraph6Bias || c > kGraph6Max)
      throw FormatError("graph6: byte " + std::to_string(int(c)) +
                        " outside printable range 63..126");
  if (line[0] == kGraph6Max)
    throw FormatError("graph6: multi-byte vertex count header is unsupported");
  int n = line[0] - kGraph6Bias;
  if (n < 1) throw FormatError("graph6: vertex count must be >= 1");
  if (int(line.size()) != 1 + body_bytes(n))
    throw FormatError("graph6: record length " + std::to_string(line.size()) +
                      " does not match vertex count " + std::to_string(n));

  std::vector<VertexSet> rows(n, VertexSet(n));
  int bit = 0;
  int total = triangle_bits(n);
  for (std::size_t i = 1; i < line.size(); ++i) {
    int group = line[i] - kGraph6Bias;
    for (int b = 5; b >= 0; --b, ++bit) {
      bool on = (group >> b) & 1;
      if (bit >= total) {
        if (on) throw FormatError("graph6: nonzero padding bits");
        continue;
      }
      if (on) {
        // Column-major upper triangle: bit index -> pair (r, c), c > r.
        int idx = bit;
        int c = 1;
        while (idx >= c) idx -= c, ++c;
        int r = idx;
        rows[r].set(c);
        rows[c].set(r);
      }
    }
  }
  return Graph::from_adjacency(std::move(rows));
}

std::string emit_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > 62) throw FormatError("graph6: vertex count > 62 unsupported");
  std::string out;
  out.push_back(char(n + kGraph6Bias));
  int group = 0;
  int filled = 0;
  for (int c = 1; c < n; ++c) {
    for (int r = 0; r < c; ++r) {
      group = (group << 1) | (g.has_edge(r, c) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(char(group + kGraph6Bias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(char((group << (6 - filled)) + kGraph6Bias));
  return out;
}

TextGraphRecord parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  TextGraphRecord rec;
  bool have_header = false;

  auto parse_int = [](const std::string& tok) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw FormatError("edge list: malformed integer '" + tok + "'");
    return value;
  };

  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;      // blank
    if (first[0] == '#') continue;     // comment

    if (!have_header) {
      if (first == "directed") {
        rec.directed = true;
        if (!(ls >> first)) throw FormatError("edge list: missing vertex count");
      }
      rec.n = parse_int(first);
      if (rec.n < 1) throw FormatError("edge list: vertex count must be >= 1");
      std::string extra;
      if (ls >> extra) throw FormatError("edge list: trailing tokens after header");
      have_header = true;
      continue;
    }

    std::string second;
    if (!(ls >> second)) throw FormatError("edge list: expected two endpoints, got one");
    int u = parse_int(first);
    int v = parse_int(second);
    std::string extra;
    if (ls >> extra) throw FormatError("edge list: trailing tokens after pair");
    if (u < 0 || u >= rec.n || v < 0 || v >= rec.n)
      throw FormatError("edge list: endpoint out of range in pair " + std::to_string(u) +
                        " " + std::to_string(v));
    if (u == v) throw FormatError("edge list: self-loop at vertex " + std::to_string(u));
    rec.pairs.emplace_back(u, v);
  }
  if (!have_header) throw FormatError("edge list: missing header line");
  return rec;
}

std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace gpow
