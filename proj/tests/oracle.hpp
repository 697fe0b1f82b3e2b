// Test-only reference computations. Deliberately naive: adjacency matrices,
// explicit vertex lists, and the defensive-alliance predicate taken literally.
#ifndef ALLIANCE_TESTS_ORACLE_HPP
#define ALLIANCE_TESTS_ORACLE_HPP

#include <map>
#include <queue>
#include <vector>

#include "alliance/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const alliance::Graph& g) {
  Matrix a(g.order(), std::vector<bool>(g.order(), false));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

inline std::vector<int> members(int n, unsigned long long s) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (s >> v & 1ULL) out.push_back(v);
  return out;
}

inline bool connected(const Matrix& a, const std::vector<int>& s) {
  if (s.empty()) return false;
  std::vector<bool> in(a.size(), false), seen(a.size(), false);
  for (int v : s) in[v] = true;
  std::queue<int> q;
  q.push(s[0]);
  seen[s[0]] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (std::size_t u = 0; u < a.size(); ++u)
      if (a[v][u] && in[u] && !seen[u]) {
        seen[u] = true;
        ++count;
        q.push(static_cast<int>(u));
      }
  }
  return count == s.size();
}

/// delta_S(v) >= delta_{S-bar}(v) + k for every v in S.
inline bool is_defensive_alliance(const Matrix& a, const std::vector<int>& s, int k) {
  std::vector<bool> in(a.size(), false);
  for (int v : s) in[v] = true;
  for (int v : s) {
    int inside = 0, outside = 0;
    for (std::size_t u = 0; u < a.size(); ++u)
      if (a[v][u]) (in[u] ? inside : outside)++;
    if (inside < outside + k) return false;
  }
  return true;
}

inline int max_degree(const Matrix& a) {
  int d = 0;
  for (const auto& row : a) {
    int c = 0;
    for (bool b : row) c += b;
    d = std::max(d, c);
  }
  return d;
}

/// Largest k in [-Delta, Delta] for which s is a defensive k-alliance.
inline int exact_index(const Matrix& a, const std::vector<int>& s) {
  const int dmax = max_degree(a);
  for (int k = dmax; k >= -dmax; --k)
    if (is_defensive_alliance(a, s, k)) return k;
  return -dmax - 1;  // unreachable for nonempty s
}

/// exponent -> count, straight from the definition.
inline std::map<int, unsigned long long> alliance_polynomial(const alliance::Graph& g) {
  const Matrix a = matrix_of(g);
  const int n = g.order();
  std::map<int, unsigned long long> out;
  for (unsigned long long s = 1; s < (1ULL << n); ++s) {
    const auto m = members(n, s);
    if (connected(a, m)) ++out[n + exact_index(a, m)];
  }
  return out;
}

}  // namespace oracle

#endif  // ALLIANCE_TESTS_ORACLE_HPP
