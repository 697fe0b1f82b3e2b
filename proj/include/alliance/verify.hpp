#ifndef ALLIANCE_VERIFY_HPP
#define ALLIANCE_VERIFY_HPP

#include <algorithm>
#include <bit>
#include <concepts>
#include <cstdint>
#include <iterator>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "alliance/closed_forms.hpp"
#include "alliance/engine.hpp"
#include "alliance/graph.hpp"
#include "alliance/polynomial.hpp"

namespace alliance {

struct CheckEntry {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Named list of pass/fail entries; a harness never throws on a failed
/// check, it records it.
struct CheckReport {
  std::string name;
  std::vector<CheckEntry> entries;

  void add(std::string entry, bool ok, std::string detail = {}) {
    entries.push_back({std::move(entry), ok, std::move(detail)});
  }
  void merge(const CheckReport& other) {
    for (const auto& e : other.entries) entries.push_back({other.name + "/" + e.name, e.passed, e.detail});
  }
  bool passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.passed; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const CheckEntry& e) { return !e.passed; }));
  }
};

// ---------------------------------------------------------------------------
// Join decomposition

struct JoinReport {
  AlliancePolynomial lhs;
  AlliancePolynomial part1;
  AlliancePolynomial part2;
  AlliancePolynomial residual;
  AlliancePolynomial direct_residual;  // enumerated over subsets meeting both parts
  Count residual_at_one = 0;
  Count expected_at_one = 0;
  int residual_degree = 0;
  int union_degree = 0;

  bool residual_matches_direct() const { return residual == direct_residual; }
  bool at_one_matches() const { return residual_at_one == expected_at_one; }
  /// Recorded for inspection only; not part of passed().
  bool degree_claim_holds() const { return residual_degree == union_degree; }
  bool passed() const { return residual_matches_direct() && at_one_matches(); }
};

/// Splits A(g1 + g2) into A(g1) + A(g2) + residual and recomputes the
/// residual directly from the subsets meeting both parts. Throws
/// std::domain_error if the residual would have a negative coefficient.
inline JoinReport check_join_theorem(const Graph& g1, const Graph& g2, const EngineOptions& opts = {}) {
  const int n1 = g1.order(), n2 = g2.order();
  if (n1 + n2 > opts.cap) throw CapacityError("check_join_theorem: combined order exceeds brute-force cap");
  const Graph joined = join(g1, g2);
  const int n = n1 + n2;

  JoinReport r;
  r.lhs = alliance_polynomial(joined, opts);
  r.part1 = alliance_polynomial(g1, opts);
  r.part2 = alliance_polynomial(g2, opts);
  r.residual = subtract(r.lhs, add(r.part1, r.part2, n), n);

  r.direct_residual = AlliancePolynomial(n);
  for (Mask s1 = 1; s1 < (Mask{1} << n1); ++s1)
    for (Mask s2 = 1; s2 < (Mask{1} << n2); ++s2) {
      const AllianceIndex k = exact_alliance_index(joined, {s1 | s2 << n1});
      r.direct_residual.add_term(n + k.value, 1);
    }

  r.residual_at_one = eval_at_one(r.residual);
  r.expected_at_one = (pow2(n1) - 1) * (pow2(n2) - 1);
  r.residual_degree = r.residual.is_zero() ? 0 : degrees(r.residual).max;
  const AlliancePolynomial un = alliance_polynomial(disjoint_union(g1, g2), opts);
  r.union_degree = un.is_zero() ? 0 : degrees(un).max;
  return r;
}

// ---------------------------------------------------------------------------
// General properties of the alliance polynomial

/// Counts connected induced subgraphs by growing connected sets from their
/// smallest vertex; never looks at alliance indices.
inline Count count_connected_induced_subgraphs(const Graph& g) {
  std::uint64_t total = 0;
  auto grow = [&](auto& self, Mask closed, Mask ext, Mask allowed) -> void {
    ++total;
    while (ext) {
      const Mask w = ext & -ext;
      ext &= ~w;
      const Mask nw = g.neighbors(std::countr_zero(w));
      self(self, closed | nw | w, ext | (nw & ~closed & allowed), allowed);
    }
  };
  for (int v = 0; v < g.order(); ++v) {
    const Mask above = g.vertices() & ~full_mask(v + 1);
    const Mask nv = g.neighbors(v);
    grow(grow, nv | Mask{1} << v, nv & above, above);
  }
  return total;
}

/// Number of connected components in which every vertex has degree d.
inline int count_regular_components(const Graph& g, int d) {
  int count = 0;
  for (Mask comp : components(g)) {
    bool regular = true;
    for (Mask m = comp; m; m &= m - 1) regular = regular && g.degree(std::countr_zero(m)) == d;
    count += regular;
  }
  return count;
}

inline CheckReport check_basic_properties(const Graph& g, const EngineOptions& opts = {}) {
  CheckReport rep{"basic-properties", {}};
  const int n = g.order();
  if (n == 0) {
    rep.add("nonempty", true, "order 0, nothing to check");
    return rep;
  }
  const AlliancePolynomial p = alliance_polynomial(g, opts);
  const int dmax = g.max_degree(), dmin = g.min_degree();
  const auto deg = g.degree_sequence();
  const auto with_degree = [&](int d) { return Count(std::count(deg.begin(), deg.end(), d)); };

  const Count c_lo = p.coefficient(n - dmax);
  rep.add("i.max-degree-vertices", c_lo == with_degree(dmax),
          "coeff " + to_string(c_lo) + " vs " + to_string(with_degree(dmax)));
  const Count c_lo1 = p.coefficient(n - dmax + 1);
  rep.add("i.max-degree-minus-one-vertices", c_lo1 == with_degree(dmax - 1),
          "coeff " + to_string(c_lo1) + " vs " + to_string(with_degree(dmax - 1)));

  const Count at_one = eval_at_one(p);
  const Count connected = count_connected_induced_subgraphs(g);
  rep.add("ii.below-2^n", at_one < pow2(static_cast<unsigned>(n)), "A(1) = " + to_string(at_one));
  rep.add("ii.connected-induced-subgraphs", at_one == connected,
          "A(1) = " + to_string(at_one) + ", counted " + to_string(connected));

  const Count c_hi = p.coefficient(n + dmax);
  const Count regular = count_regular_components(g, dmax);
  rep.add("iii.regular-components", c_hi == regular, "coeff " + to_string(c_hi) + " vs " + to_string(regular));

  const Degrees d = degrees(p);
  rep.add("iv.min-degree", d.min == n - dmax, "Deg_min " + std::to_string(d.min));
  if (is_connected(g)) {
    rep.add("iv.degree-bounds", n + dmin <= d.max && d.max <= n + dmax, "Deg " + std::to_string(d.max));
  } else {
    rep.add("iv.degree-bounds", d.max <= n + dmax, "disconnected; upper bound only, Deg " + std::to_string(d.max));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Labeled graph corpora

inline constexpr int kMaxSweepOrder = 7;

inline std::uint64_t labeled_graph_count(int n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

/// Graph whose edge set is the bit pattern `edges` over pairs (i, j), i < j,
/// listed column by column as in graph6.
inline Graph graph_from_edge_mask(int n, std::uint64_t edges) {
  std::vector<Mask> rows(static_cast<std::size_t>(n), 0);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (edges >> bit & 1) {
        rows[i] |= Mask{1} << j;
        rows[j] |= Mask{1} << i;
      }
  return Graph(n, std::move(rows));
}

/// Random-access view over every labeled simple graph with order in
/// [min_order, max_order], ordered by order then by edge mask.
class LabeledGraphSweep {
 public:
  LabeledGraphSweep(int min_order, int max_order) : min_(min_order), max_(max_order) {
    if (min_order < 0 || min_order > max_order) throw std::invalid_argument("LabeledGraphSweep: bad order range");
    if (max_order > kMaxSweepOrder)
      throw std::invalid_argument("LabeledGraphSweep: orders above " + std::to_string(kMaxSweepOrder) +
                                  " need an external corpus");
    std::uint64_t acc = 0;
    for (int n = min_; n <= max_; ++n) {
      offsets_.push_back(acc);
      acc += labeled_graph_count(n);
    }
    size_ = acc;
  }

  std::uint64_t size() const { return size_; }

  int order_at(std::uint64_t i) const {
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), i);
    return min_ + static_cast<int>(std::distance(offsets_.begin(), it)) - 1;
  }

  Graph operator[](std::uint64_t i) const {
    const int n = order_at(i);
    return graph_from_edge_mask(n, i - offsets_[static_cast<std::size_t>(n - min_)]);
  }

  class iterator {
   public:
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const LabeledGraphSweep* s, std::uint64_t i) : sweep_(s), i_(i) {}
    Graph operator*() const { return (*sweep_)[i_]; }
    iterator& operator++() { ++i_; return *this; }
    iterator operator++(int) { auto t = *this; ++i_; return t; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.i_ == b.i_; }

   private:
    const LabeledGraphSweep* sweep_ = nullptr;
    std::uint64_t i_ = 0;
  };
  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size_}; }

 private:
  int min_, max_;
  std::vector<std::uint64_t> offsets_;
  std::uint64_t size_ = 0;
};

/// All 2^(n(n-1)/2) labeled graphs on n vertices, n <= 7.
inline LabeledGraphSweep enumerate_labeled_graphs(int n) { return LabeledGraphSweep(n, n); }

/// Recognizes labelings of W_n (n >= 4) without isomorphism machinery: some
/// vertex is adjacent to all others, and the remaining vertices induce a
/// connected 2-regular graph.
inline bool is_wheel_labeling(const Graph& g) {
  const int n = g.order();
  if (n < 4) return false;
  for (int c = 0; c < n; ++c) {
    if (g.degree(c) != n - 1) continue;
    const Mask rim = g.vertices() & ~(Mask{1} << c);
    bool two_regular = true;
    for (Mask m = rim; m; m &= m - 1) two_regular = two_regular && g.degree_in(std::countr_zero(m), rim) == 2;
    if (two_regular && is_connected_subset(g, {rim})) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Characterization experiment

struct CollisionReport {
  /// Polynomial (terms only, the order tag is ignored) -> corpus positions.
  std::map<AlliancePolynomial::Terms, std::vector<std::uint64_t>> groups;
  std::vector<std::uint64_t> target_matches;
  std::vector<std::pair<std::uint64_t, std::string>> skipped;

  const std::vector<std::uint64_t>* group_of(const AlliancePolynomial& p) const {
    auto it = groups.find(p.terms());
    return it == groups.end() ? nullptr : &it->second;
  }
};

template <class Corpus>
concept IndexedCorpus = requires(const Corpus& c, std::uint64_t i) {
  { c.size() } -> std::convertible_to<std::uint64_t>;
  { c[i] } -> std::convertible_to<Graph>;
};

/// Groups the corpus by alliance polynomial and lists the positions whose
/// polynomial equals the target. Graphs above the cap are skipped and
/// reported. Blocks of the corpus are processed concurrently and merged in
/// block order, so group contents are sorted regardless of worker count.
template <IndexedCorpus Corpus>
CollisionReport characterize(const Corpus& corpus, const AlliancePolynomial& target, const EngineOptions& opts = {}) {
  const std::uint64_t total = static_cast<std::uint64_t>(corpus.size());
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(detail::resolve_threads(opts.threads), std::max<std::uint64_t>(total, 1)));
  EngineOptions inner = opts;
  inner.threads = 1;

  std::vector<CollisionReport> partial(workers);
  auto run = [&](unsigned w) {
    const std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
    CollisionReport& out = partial[w];
    for (std::uint64_t i = lo; i < hi; ++i) {
      const Graph g = corpus[i];
      if (g.order() > inner.cap) {
        out.skipped.emplace_back(i, "order " + std::to_string(g.order()) + " exceeds cap " + std::to_string(inner.cap));
        continue;
      }
      out.groups[alliance_polynomial(g, inner).terms()].push_back(i);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  CollisionReport rep = std::move(partial[0]);
  for (unsigned w = 1; w < workers; ++w) {
    for (auto& [key, ids] : partial[w].groups) {
      auto& dst = rep.groups[key];
      dst.insert(dst.end(), ids.begin(), ids.end());
    }
    rep.skipped.insert(rep.skipped.end(), partial[w].skipped.begin(), partial[w].skipped.end());
  }
  if (const auto* g = rep.group_of(target)) rep.target_matches = *g;
  return rep;
}

/// Sweeps all labeled graphs of order min_order..max_order and, for each
/// wheel order n in [max(4, min_order), max_order], checks that the graphs
/// attaining wheel_polynomial(n) are exactly the labelings of W_n.
inline CheckReport check_wheel_characterization(int min_order, int max_order, const EngineOptions& opts = {}) {
  CheckReport rep{"characterize", {}};
  const LabeledGraphSweep sweep(min_order, max_order);
  const CollisionReport groups = characterize(sweep, AlliancePolynomial{}, opts);
  for (int n = std::max(4, min_order); n <= max_order; ++n) {
    const AlliancePolynomial target = wheel_polynomial(n);
    const auto* matches = groups.group_of(target);
    std::uint64_t wheels = 0, others = 0, wrong_order = 0;
    if (matches)
      for (std::uint64_t id : *matches) {
        const Graph g = sweep[id];
        if (g.order() != n) ++wrong_order;
        else if (is_wheel_labeling(g)) ++wheels;
        else ++others;
      }
    std::uint64_t expected = 1;
    if (n >= 5) {
      for (int i = 2; i <= n; ++i) expected *= static_cast<std::uint64_t>(i);
      expected /= 2 * static_cast<std::uint64_t>(n - 1);
    }
    // Every labeling of W_n in the sweep must land in the target class.
    std::uint64_t all_wheels = 0;
    const std::uint64_t first = [&] {
      std::uint64_t off = 0;
      for (int m = min_order; m < n; ++m) off += labeled_graph_count(m);
      return off;
    }();
    for (std::uint64_t e = 0; e < labeled_graph_count(n); ++e)
      if (is_wheel_labeling(sweep[first + e])) ++all_wheels;

    const std::string tag = "W_" + std::to_string(n);
    rep.add(tag + ".matches-are-wheels", others == 0, std::to_string(others) + " non-wheel matches");
    rep.add(tag + ".wheel-count", wheels == expected && all_wheels == expected,
            std::to_string(wheels) + " matched, " + std::to_string(all_wheels) + " in sweep, expected " +
                std::to_string(expected));
    rep.add(tag + ".no-other-order", wrong_order == 0, std::to_string(wrong_order) + " matches of other orders");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Closed-form harnesses

inline CheckReport check_bcoeff_identity(int max_n) {
  CheckReport rep{"bcoeff", {}};
  for (int n = 4; n <= max_n; ++n)
    for (int k = 2; k <= n - 1; ++k) {
      const std::string tag = "b(" + std::to_string(n) + "," + std::to_string(k) + ")";
      try {
        const Count b = b_coeff(n, k);
        const Count oracle = cyclic_string_oracle(n, k);
        const Count cases = case_count_total(n, k);
        rep.add(tag, b == oracle && b == cases,
                "formula " + to_string(b) + ", strings " + to_string(oracle) + ", cases " + to_string(cases));
      } catch (const std::logic_error& e) {
        rep.add(tag, false, e.what());
      }
    }
  return rep;
}

/// a(m, r-1) >= b(m, r) for 3 <= r <= m-1 and 4 <= m <= max_m.
inline CheckReport check_a_dominates_b(int max_m, bool even_only = false) {
  CheckReport rep{even_only ? "a-dominates-b-even" : "a-dominates-b", {}};
  for (int m = 4; m <= max_m; ++m) {
    if (even_only && m % 2) continue;
    for (int r = 3; r <= m - 1; ++r) {
      const Count a = a_coeff(m, r - 1), b = b_coeff(m, r);
      rep.add("m=" + std::to_string(m) + ",r=" + std::to_string(r), a >= b,
              "a(m,r-1) = " + to_string(a) + ", b(m,r) = " + to_string(b));
    }
  }
  return rep;
}

/// Every even-order wheel up to n_max is unimodal with its mode at index -1
/// and has only odd exponents.
inline CheckReport check_wheel_unimodality(int n_max) {
  CheckReport rep{"unimodal", {}};
  for (int n = 4; n <= n_max; n += 2) {
    const AlliancePolynomial p = wheel_polynomial(n);
    const UnimodalityVerdict v = is_unimodal(p);
    const bool odd = std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.first % 2 == 1; });
    rep.add("W_" + std::to_string(n), v.unimodal && v.mode_exponent == n - 1 && odd,
            to_text(p) + (v.mode_exponent ? "; mode x^" + std::to_string(*v.mode_exponent) : "; not unimodal"));
  }
  return rep;
}

/// A(P_n) is unimodal exactly for 2 <= n <= 4.
inline CheckReport check_path_unimodality(int n_max, const EngineOptions& opts = {}) {
  CheckReport rep{"path-unimodal", {}};
  for (int n = 2; n <= n_max; ++n) {
    const AlliancePolynomial p = alliance_polynomial(generate({Family::path, n}), opts);
    const bool unimodal = is_unimodal(p).unimodal;
    rep.add("P_" + std::to_string(n), unimodal == (n <= 4), to_text(p));
  }
  return rep;
}

/// A(W_n; 1) = (n-1)(n-2) + 1 + 2^(n-1) and A(C_n; 1) = n^2 - n + 1.
inline CheckReport check_evaluation_identities(int n_max) {
  CheckReport rep{"eval-at-one", {}};
  for (int n = 4; n <= n_max; ++n) {
    const Count got = eval_at_one(wheel_polynomial(n));
    const Count want = Count(n - 1) * Count(n - 2) + 1 + pow2(static_cast<unsigned>(n - 1));
    rep.add("W_" + std::to_string(n), got == want, to_string(got) + " vs " + to_string(want));
  }
  for (int n = 3; n <= n_max; ++n) {
    const Count got = eval_at_one(cycle_polynomial(n));
    const Count want = Count(n) * Count(n) - Count(n) + 1;
    rep.add("C_" + std::to_string(n), got == want, to_string(got) + " vs " + to_string(want));
  }
  return rep;
}

/// Closed forms against the brute-force engine.
inline CheckReport check_closed_forms(int cycle_max, int wheel_max, const EngineOptions& opts = {}) {
  CheckReport rep{"closed-forms", {}};
  for (int n = 3; n <= cycle_max; ++n) {
    const auto engine = alliance_polynomial(generate({Family::cycle, n}), opts);
    rep.add("C_" + std::to_string(n), engine == cycle_polynomial(n), to_text(engine));
  }
  for (int n = 4; n <= wheel_max; ++n) {
    const auto engine = alliance_polynomial(generate({Family::wheel, n}), opts);
    rep.add("W_" + std::to_string(n), engine == wheel_polynomial(n), to_text(engine));
  }
  return rep;
}

namespace detail {

inline void compositions(int total, int min_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = min_part; part <= total; ++part) {
    cur.push_back(part);
    compositions(total - part, min_part, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// For each composition n_1 + ... + n_r = n - 1 into r >= 2 parts of size
/// >= 3 (n <= n_max): A(C_{n_1} u ... u C_{n_r}; 1) = sum (n_i^2 - n_i + 1)
/// and that sum is below (n-1)^2 - (n-1) + 1.
inline CheckReport check_disjoint_cycle_inequality(int n_max, const EngineOptions& opts = {}) {
  CheckReport rep{"disjoint-cycles", {}};
  for (int n = 7; n <= n_max; ++n) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    detail::compositions(n - 1, 3, cur, parts);
    for (const auto& comp : parts) {
      if (comp.size() < 2) continue;
      Graph g(0);
      Count sum = 0;
      std::string tag = "n=" + std::to_string(n) + ":";
      for (int part : comp) {
        g = disjoint_union(g, generate({Family::cycle, part}));
        sum += Count(part) * Count(part) - Count(part) + 1;
        tag += " " + std::to_string(part);
      }
      const Count at_one = eval_at_one(alliance_polynomial(g, opts));
      const Count single = Count(n - 1) * Count(n - 1) - Count(n - 1) + 1;
      rep.add(tag, at_one == sum && sum < single,
              "A(1) = " + to_string(at_one) + ", sum " + to_string(sum) + ", C_" + std::to_string(n - 1) + " gives " +
                  to_string(single));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Randomized suites

/// Random labeled graph on n vertices; the edge density is itself drawn from
/// the generator. Uses raw engine output only, so sequences are portable.
inline Graph random_graph(std::mt19937_64& rng, int n) {
  const std::uint64_t threshold = rng();
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() < threshold) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

inline std::vector<GraphFamily> families_up_to(int max_order) {
  std::vector<GraphFamily> out;
  for (Family f : {Family::empty, Family::path, Family::cycle, Family::complete, Family::complete_minus_edge,
                   Family::star, Family::wheel})
    for (int n = std::max(1, family_min_order(f)); n <= max_order; ++n) out.push_back({f, n});
  return out;
}

inline CheckReport check_lemma_suite(int random_count, int random_max_order, int family_max_order,
                                     std::uint64_t seed, const EngineOptions& opts = {}) {
  CheckReport rep{"lemma", {}};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_count; ++i) {
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(random_max_order));
    const Graph g = random_graph(rng, n);
    const CheckReport r = check_basic_properties(g, opts);
    rep.add("random#" + std::to_string(i), r.passed(),
            "n=" + std::to_string(n) + " m=" + std::to_string(g.size()) + " failures=" + std::to_string(r.failures()));
  }
  for (const GraphFamily& f : families_up_to(family_max_order)) {
    const CheckReport r = check_basic_properties(generate(f), opts);
    rep.add(std::string(family_name(f.tag)) + "_" + std::to_string(f.n), r.passed(),
            "failures=" + std::to_string(r.failures()));
  }
  return rep;
}

inline CheckReport check_join_suite(int random_pairs, int max_total, int wheel_max, std::uint64_t seed,
                                    const EngineOptions& opts = {}) {
  CheckReport rep{"join", {}};
  auto record = [&](const std::string& tag, const Graph& g1, const Graph& g2) {
    try {
      const JoinReport r = check_join_theorem(g1, g2, opts);
      rep.add(tag, r.passed(),
              "residual(1) = " + to_string(r.residual_at_one) + ", expected " + to_string(r.expected_at_one) +
                  (r.residual_matches_direct() ? "" : ", residual differs from direct enumeration"));
    } catch (const std::domain_error& e) {
      rep.add(tag, false, e.what());
    }
  };
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_pairs; ++i) {
    const int n1 = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_total - 1));
    const int n2 = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_total - n1));
    const Graph g1 = random_graph(rng, n1);
    const Graph g2 = random_graph(rng, n2);
    record("random#" + std::to_string(i) + " (" + std::to_string(n1) + "+" + std::to_string(n2) + ")", g1, g2);
  }
  for (int n = 4; n <= wheel_max; ++n)
    record("E_1+C_" + std::to_string(n - 1), generate({Family::empty, 1}), generate({Family::cycle, n - 1}));
  return rep;
}

}  // namespace alliance

#endif  // ALLIANCE_VERIFY_HPP
