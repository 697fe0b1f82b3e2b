#ifndef ALLIANCE_GRAPH_IO_HPP
#define ALLIANCE_GRAPH_IO_HPP

#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alliance/graph.hpp"

namespace alliance {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string_view trim_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

/// Decodes one graph6 short-form record (n <= 62).
inline Graph parse_graph6(std::string_view text) {
  text = detail::trim_line_end(text);
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  if (text.empty()) throw ParseError("graph6: empty input");
  for (unsigned char c : text)
    if (c < 63 || c > 126) throw ParseError("graph6: non-printable byte " + std::to_string(int(c)));

  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n > kMaxOrder) throw ParseError("graph6: order byte out of range (long form unsupported)");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t groups = (bits + 5) / 6;
  const std::string_view payload = text.substr(1);
  if (payload.size() < groups) throw ParseError("graph6: payload too short");
  if (payload.size() > groups) throw ParseError("graph6: payload too long");

  std::vector<Mask> rows(static_cast<std::size_t>(n), 0);
  std::size_t pos = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++pos) {
      const int group = static_cast<unsigned char>(payload[pos / 6]) - 63;
      if (group >> (5 - pos % 6) & 1) {
        rows[i] |= Mask{1} << j;
        rows[j] |= Mask{1} << i;
      }
    }
  }
  for (; pos < groups * 6; ++pos) {
    const int group = static_cast<unsigned char>(payload[pos / 6]) - 63;
    if (group >> (5 - pos % 6) & 1) throw ParseError("graph6: set bit in padding");
  }
  return Graph(n, std::move(rows));
}

/// Encodes g in graph6 short form, without header or newline.
inline std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = acc << 1 | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

/// Reads a newline-separated graph6 corpus; blank lines are skipped.
inline std::vector<Graph> parse_graph6_corpus(std::string_view text) {
  std::vector<Graph> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = detail::trim_line_end(line);
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

/// Parses the 0-indexed edge-list format: a header line "n m" followed by
/// exactly m lines "u v".
inline Graph parse_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = detail::trim_line_end(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.find_first_not_of(" \t") != std::string_view::npos) lines.push_back(line);
  }
  if (lines.empty()) throw ParseError("edge list: missing header line");

  auto read_pair = [](std::string_view line, std::size_t line_no) {
    std::pair<long long, long long> out;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    auto skip_ws = [&] { while (p != end && (*p == ' ' || *p == '\t')) ++p; };
    skip_ws();
    auto r1 = std::from_chars(p, end, out.first);
    if (r1.ec != std::errc{}) throw ParseError("edge list: malformed line " + std::to_string(line_no));
    p = r1.ptr;
    skip_ws();
    auto r2 = std::from_chars(p, end, out.second);
    if (r2.ec != std::errc{} || r2.ptr == r1.ptr) throw ParseError("edge list: malformed line " + std::to_string(line_no));
    p = r2.ptr;
    skip_ws();
    if (p != end) throw ParseError("edge list: malformed line " + std::to_string(line_no));
    return out;
  };

  const auto [n, m] = read_pair(lines[0], 1);
  if (n < 0 || m < 0) throw ParseError("edge list: negative header value");
  if (n > kMaxOrder) throw CapacityError("edge list: order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw ParseError("edge list: header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(lines.size() - 1));

  std::set<std::pair<long long, long long>> seen;
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto [u, v] = read_pair(lines[i], i + 1);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("edge list: endpoint out of range on line " + std::to_string(i + 1));
    if (u == v) throw ParseError("edge list: self-loop on line " + std::to_string(i + 1));
    if (!seen.insert(std::minmax(u, v)).second)
      throw ParseError("edge list: duplicate edge on line " + std::to_string(i + 1));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

inline std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  const auto e = g.edges();
  os << g.order() << ' ' << e.size() << '\n';
  for (auto [u, v] : e) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace alliance

#endif  // ALLIANCE_GRAPH_IO_HPP
