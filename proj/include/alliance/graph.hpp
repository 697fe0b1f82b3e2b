#ifndef ALLIANCE_GRAPH_HPP
#define ALLIANCE_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace alliance {

/// Bit set over vertex indices; bit v set means vertex v is a member.
using Mask = std::uint64_t;

/// Maximum graph order (graph6 short form).
inline constexpr int kMaxOrder = 62;

inline constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// Thrown when an operation would exceed the supported vertex capacity or
/// the configured brute-force cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph on vertices 0..n-1 stored as one adjacency bit
/// row per vertex. Immutable once constructed.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph of order n.
  explicit Graph(int n) : n_(check_order(n)), rows_(static_cast<std::size_t>(n), 0) {}

  /// Validates symmetry, absence of self-loops and that rows stay within n.
  Graph(int n, std::vector<Mask> rows) : n_(check_order(n)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != n_)
      throw std::invalid_argument("Graph: row count differs from order");
    const Mask all = full_mask(n_);
    for (int v = 0; v < n_; ++v) {
      const Mask row = rows_[v];
      if (row & ~all) throw std::invalid_argument("Graph: neighbor outside vertex range");
      if (row >> v & 1) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(v));
      for (Mask r = row; r; r &= r - 1) {
        const int u = std::countr_zero(r);
        if (!(rows_[u] >> v & 1)) throw std::invalid_argument("Graph: adjacency is not symmetric");
      }
    }
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    check_order(n);
    std::vector<Mask> rows(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("Graph: endpoint out of range");
      if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
      rows[u] |= Mask{1} << v;
      rows[v] |= Mask{1} << u;
    }
    return Graph(n, std::move(rows));
  }

  int order() const { return n_; }
  int size() const {
    int twice = 0;
    for (Mask r : rows_) twice += std::popcount(r);
    return twice / 2;
  }

  Mask neighbors(int v) const { return rows_[v]; }
  Mask vertices() const { return full_mask(n_); }
  const std::vector<Mask>& rows() const { return rows_; }

  bool adjacent(int u, int v) const { return rows_[u] >> v & 1; }
  int degree(int v) const { return std::popcount(rows_[v]); }

  /// Number of neighbors of v inside the set.
  int degree_in(int v, Mask set) const { return std::popcount(rows_[v] & set); }

  int max_degree() const {
    int d = 0;
    for (Mask r : rows_) d = std::max(d, std::popcount(r));
    return d;
  }
  int min_degree() const {
    if (n_ == 0) return 0;
    int d = n_;
    for (Mask r : rows_) d = std::min(d, std::popcount(r));
    return d;
  }

  std::vector<int> degree_sequence() const {
    std::vector<int> out;
    out.reserve(rows_.size());
    for (Mask r : rows_) out.push_back(std::popcount(r));
    return out;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < n_; ++v)
      for (int u = v + 1; u < n_; ++u)
        if (adjacent(v, u)) out.emplace_back(v, u);
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static int check_order(int n) {
    if (n < 0) throw std::invalid_argument("Graph: negative order");
    if (n > kMaxOrder) throw CapacityError("Graph: order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
    return n;
  }

  int n_ = 0;
  std::vector<Mask> rows_;
};

enum class Family { empty, path, cycle, complete, complete_minus_edge, star, wheel };

struct GraphFamily {
  Family tag;
  int n;
};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::empty: return "empty";
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::complete_minus_edge: return "complete-minus-edge";
    case Family::star: return "star";
    case Family::wheel: return "wheel";
  }
  return "?";
}

inline int family_min_order(Family f) {
  switch (f) {
    case Family::empty: return 0;
    case Family::path: return 1;
    case Family::cycle: return 3;
    case Family::complete: return 0;
    case Family::complete_minus_edge: return 2;
    case Family::star: return 1;
    case Family::wheel: return 4;
  }
  return 0;
}

/// Family generator with canonical labels. The cycle C_n has vertex i
/// adjacent to i +- 1 (mod n); the wheel W_n has center 0 and rim 1..n-1
/// in index order; the star S_n has center 0; K_n/e misses the edge {0,1}.
inline Graph generate(GraphFamily family) {
  const int n = family.n;
  if (n < family_min_order(family.tag))
    throw std::invalid_argument("generate: " + std::string(family_name(family.tag)) + " requires n >= " +
                                std::to_string(family_min_order(family.tag)));
  std::vector<std::pair<int, int>> e;
  switch (family.tag) {
    case Family::empty:
      break;
    case Family::path:
      for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      break;
    case Family::cycle:
      for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
      break;
    case Family::complete:
    case Family::complete_minus_edge:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (family.tag == Family::complete || !(i == 0 && j == 1)) e.emplace_back(i, j);
      break;
    case Family::star:
      for (int i = 1; i < n; ++i) e.emplace_back(0, i);
      break;
    case Family::wheel:
      for (int i = 1; i < n; ++i) {
        e.emplace_back(0, i);
        e.emplace_back(i, i == n - 1 ? 1 : i + 1);
      }
      break;
  }
  return Graph::from_edges(n, e);
}

/// Join g1 + g2: g1 keeps labels 0..n1-1, g2 is shifted by n1, and every
/// cross pair becomes adjacent.
inline Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order(), n2 = g2.order();
  if (n1 + n2 > kMaxOrder) throw CapacityError("join: combined order exceeds capacity");
  std::vector<Mask> rows(static_cast<std::size_t>(n1 + n2));
  const Mask part1 = full_mask(n1);
  const Mask part2 = full_mask(n2) << n1;
  for (int v = 0; v < n1; ++v) rows[v] = g1.neighbors(v) | part2;
  for (int v = 0; v < n2; ++v) rows[n1 + v] = (g2.neighbors(v) << n1) | part1;
  return Graph(n1 + n2, std::move(rows));
}

inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order(), n2 = g2.order();
  if (n1 + n2 > kMaxOrder) throw CapacityError("disjoint_union: combined order exceeds capacity");
  std::vector<Mask> rows(static_cast<std::size_t>(n1 + n2));
  for (int v = 0; v < n1; ++v) rows[v] = g1.neighbors(v);
  for (int v = 0; v < n2; ++v) rows[n1 + v] = g2.neighbors(v) << n1;
  return Graph(n1 + n2, std::move(rows));
}

/// Connected components as vertex masks, ordered by smallest member.
inline std::vector<Mask> components(const Graph& g) {
  std::vector<Mask> out;
  Mask remaining = g.vertices();
  while (remaining) {
    Mask comp = remaining & -remaining;
    Mask frontier = comp;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
      frontier = next & ~comp;
      comp |= frontier;
    }
    out.push_back(comp);
    remaining &= ~comp;
  }
  return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

}  // namespace alliance

#endif  // ALLIANCE_GRAPH_HPP
