#include "nutgraph/codec.hpp"

#include <sstream>

namespace nut {

namespace {

void put_size(std::string& out, long n) {
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int s = 12; s >= 0; s -= 6) out += static_cast<char>(((n >> s) & 63) + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int s = 30; s >= 0; s -= 6) out += static_cast<char>(((n >> s) & 63) + 63);
  }
}

// Returns the decoded vertex count and advances `pos` past the header.
long get_size(std::string_view s, size_t& pos) {
  auto byte = [&](size_t i) -> long {
    if (i >= s.size()) throw FormatError("truncated size header");
    long c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw FormatError("invalid character in size header");
    return c - 63;
  };
  if (byte(pos) != 63) {
    return byte(pos++);
  }
  if (byte(pos + 1) != 63) {
    long n = 0;
    for (int k = 1; k <= 3; ++k) n = (n << 6) | byte(pos + k);
    pos += 4;
    if (n <= 62) throw FormatError("non-minimal size header");
    return n;
  }
  long n = 0;
  for (int k = 2; k <= 7; ++k) n = (n << 6) | byte(pos + k);
  pos += 8;
  if (n <= 258047) throw FormatError("non-minimal size header");
  return n;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const long n = g.order();
  std::string out;
  put_size(out, n);
  const long bits = n * (n - 1) / 2;
  std::vector<unsigned char> packed((bits + 5) / 6, 0);
  for (auto [u, v] : g.edges()) {
    // column v, row u < v
    const long k = static_cast<long>(v) * (v - 1) / 2 + u;
    packed[k / 6] |= static_cast<unsigned char>(1u << (5 - k % 6));
  }
  for (unsigned char c : packed) out += static_cast<char>(c + 63);
  return out;
}

Graph from_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  size_t pos = 0;
  const long n = get_size(line, pos);
  const long bits = n * (n - 1) / 2;
  const size_t groups = static_cast<size_t>((bits + 5) / 6);
  if (line.size() - pos != groups)
    throw FormatError("graph6 body has " + std::to_string(line.size() - pos) + " bytes, expected " +
                      std::to_string(groups));
  std::vector<Edge> edges;
  long k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k) {
      long c = static_cast<unsigned char>(line[pos + k / 6]);
      if (c < 63 || c > 126) throw FormatError("invalid graph6 character");
      if (((c - 63) >> (5 - k % 6)) & 1) edges.emplace_back(u, v);
    }
  if (bits % 6) {
    long c = static_cast<unsigned char>(line.back()) - 63;
    if (c < 0 || c > 63) throw FormatError("invalid graph6 character");
    const int pad = static_cast<int>(6 - bits % 6);
    if (c & ((1 << pad) - 1)) throw FormatError("nonzero padding bits");
  }
  return Graph(static_cast<int>(n), edges);
}

Graph from_sparse6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(">>sparse6<<")) line.remove_prefix(11);
  if (line.empty() || line[0] != ':') throw FormatError("sparse6 line must start with ':'");
  size_t pos = 1;
  const long n = get_size(line, pos);
  int k = 0;
  while ((1L << k) < n) ++k;

  std::vector<int> bits;
  for (size_t i = pos; i < line.size(); ++i) {
    int c = static_cast<unsigned char>(line[i]) - 63;
    if (c < 0 || c > 63) throw FormatError("invalid sparse6 character");
    for (int b = 5; b >= 0; --b) bits.push_back((c >> b) & 1);
  }
  std::vector<Edge> edges;
  long v = 0;
  size_t i = 0;
  while (i + 1 + k <= bits.size()) {
    const int b = bits[i++];
    long x = 0;
    for (int j = 0; j < k; ++j) x = (x << 1) | bits[i++];
    if (b) ++v;
    if (v >= n) break;
    if (x > v) {
      v = x;
    } else {
      edges.emplace_back(static_cast<int>(x), static_cast<int>(v));
    }
  }
  return Graph(static_cast<int>(n), edges);
}

Graph decode_graph_line(std::string_view line) {
  line = trim(line);
  if (line.starts_with(">>sparse6<<") || line.starts_with(":")) return from_sparse6(line);
  return from_graph6(line);
}

std::vector<Graph> read_graph_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    out.push_back(decode_graph_line(line));
  }
  return out;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::vector<long> numbers;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    long x;
    while (ls >> x) numbers.push_back(x);
    if (!ls.eof()) throw FormatError("edge list: non-numeric token in '" + line + "'");
  }
  if (numbers.empty()) throw FormatError("edge list: missing vertex count");
  if (numbers.size() % 2 == 0) throw FormatError("edge list: dangling endpoint");
  std::vector<Edge> edges;
  for (size_t i = 1; i + 1 < numbers.size(); i += 2)
    edges.emplace_back(static_cast<int>(numbers[i]), static_cast<int>(numbers[i + 1]));
  return Graph(static_cast<int>(numbers[0]), edges);
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace nut
