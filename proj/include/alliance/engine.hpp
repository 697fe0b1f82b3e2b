#ifndef ALLIANCE_ENGINE_HPP
#define ALLIANCE_ENGINE_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "alliance/graph.hpp"
#include "alliance/polynomial.hpp"

namespace alliance {

inline constexpr int kDefaultBruteForceCap = 24;

/// Subset of the vertices of a host graph.
struct VertexSubset {
  Mask bits = 0;

  bool empty() const { return bits == 0; }
  int size() const { return std::popcount(bits); }
  bool contains(int v) const { return bits >> v & 1; }
  /// Complement relative to the host graph's vertex set.
  VertexSubset complement(const Graph& host) const { return {host.vertices() & ~bits}; }

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;
};

/// Maximal k such that every member has at least k more neighbors inside s
/// than outside it.
inline AllianceIndex exact_alliance_index(const Graph& g, VertexSubset s) {
  if (s.empty()) throw std::invalid_argument("exact_alliance_index: empty subset");
  int k = g.max_degree();
  for (Mask m = s.bits; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    const int inside = g.degree_in(v, s.bits);
    k = std::min(k, 2 * inside - g.degree(v));
  }
  return {k};
}

/// True iff s induces a connected subgraph. The empty set is not connected.
inline bool is_connected_subset(const Graph& g, VertexSubset s) {
  if (s.empty()) return false;
  Mask reached = s.bits & -s.bits;
  Mask frontier = reached;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    frontier = next & s.bits & ~reached;
    reached |= frontier;
  }
  return reached == s.bits;
}

struct EngineOptions {
  int cap = kDefaultBruteForceCap;
  unsigned threads = 1;  // 0 selects hardware concurrency
};

namespace detail {

/// Per-index counts for a contiguous range of subset masks. Slot i holds the
/// count for index i - kMaxOrder.
using IndexHistogram = std::array<std::uint64_t, 2 * kMaxOrder + 1>;

inline void scan_masks(const Graph& g, Mask first, Mask last, IndexHistogram& hist) {
  const int n = g.order();
  std::array<int, kMaxOrder> deg{};
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  for (Mask s = first; s < last; ++s) {
    if (!is_connected_subset(g, {s})) continue;
    int k = kMaxOrder;
    for (Mask m = s; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      k = std::min(k, 2 * std::popcount(g.neighbors(v) & s) - deg[v]);
    }
    ++hist[static_cast<std::size_t>(k + kMaxOrder)];
  }
}

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace detail

/// Alliance polynomial by exhaustive scan of all nonempty subsets: every
/// connected S adds one to the coefficient of x^(n + k_S).
///
/// The mask range [1, 2^n) is split into contiguous blocks, one per worker;
/// block histograms are summed, so the result does not depend on the
/// number of workers.
inline AlliancePolynomial alliance_polynomial(const Graph& g, const EngineOptions& opts = {}) {
  const int n = g.order();
  if (opts.cap > kMaxOrder) throw std::invalid_argument("alliance_polynomial: cap above " + std::to_string(kMaxOrder));
  if (n > opts.cap)
    throw CapacityError("alliance_polynomial: order " + std::to_string(n) + " exceeds brute-force cap " +
                        std::to_string(opts.cap));

  const Mask end = Mask{1} << n;
  const Mask total = end - 1;
  const unsigned workers = static_cast<unsigned>(
      std::min<Mask>(detail::resolve_threads(opts.threads), std::max<Mask>(total, 1)));

  std::vector<detail::IndexHistogram> partial(workers, detail::IndexHistogram{});
  if (workers == 1) {
    detail::scan_masks(g, 1, end, partial[0]);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const auto wide = static_cast<unsigned __int128>(total);
      const Mask lo = 1 + static_cast<Mask>(wide * w / workers);
      const Mask hi = 1 + static_cast<Mask>(wide * (w + 1) / workers);
      pool.emplace_back([&g, lo, hi, &hist = partial[w]] { detail::scan_masks(g, lo, hi, hist); });
    }
  }

  AlliancePolynomial p(n);
  for (std::size_t slot = 0; slot < partial[0].size(); ++slot) {
    Count c = 0;
    for (const auto& h : partial) c += h[slot];
    p.add_term(n + static_cast<int>(slot) - kMaxOrder, c);
  }
  return p;
}

}  // namespace alliance

#endif  // ALLIANCE_ENGINE_HPP
