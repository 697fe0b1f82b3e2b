#ifndef ALLIANCE_POLYNOMIAL_HPP
#define ALLIANCE_POLYNOMIAL_HPP

#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "alliance/integer.hpp"

namespace alliance {

/// Exact alliance index k of a vertex subset; the polynomial stores the
/// count of subsets with index k at exponent order + k.
struct AllianceIndex {
  int value = 0;
  friend auto operator<=>(const AllianceIndex&, const AllianceIndex&) = default;
};

/// Sparse polynomial with exact positive coefficients, tagged with the order
/// of the graph it belongs to. Absent exponents are zero.
class AlliancePolynomial {
 public:
  using Terms = std::map<int, Count>;

  AlliancePolynomial() = default;
  explicit AlliancePolynomial(int order) : order_(order) {}
  AlliancePolynomial(int order, Terms terms) : order_(order) {
    for (auto& [e, c] : terms) add_term(e, c);
  }
  AlliancePolynomial(int order, std::initializer_list<std::pair<int, Count>> terms) : order_(order) {
    for (const auto& [e, c] : terms) add_term(e, c);
  }

  int order() const { return order_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Count coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Count(0) : it->second;
  }

  /// Adds c to the coefficient of x^exponent; zero contributions are dropped.
  void add_term(int exponent, const Count& c) {
    if (c == 0) return;
    if (exponent < 0) throw std::invalid_argument("AlliancePolynomial: negative exponent");
    terms_[exponent] += c;
  }

  /// Same terms, ignoring the order tag.
  bool same_terms(const AlliancePolynomial& other) const { return terms_ == other.terms_; }

  friend bool operator==(const AlliancePolynomial&, const AlliancePolynomial&) = default;

 private:
  int order_ = 0;
  Terms terms_;
};

inline AlliancePolynomial add(const AlliancePolynomial& p, const AlliancePolynomial& q, int order) {
  AlliancePolynomial out(order, p.terms());
  for (const auto& [e, c] : q.terms()) out.add_term(e, c);
  return out;
}

/// Exact difference p - q; throws std::domain_error if any coefficient of
/// q exceeds the matching coefficient of p.
inline AlliancePolynomial subtract(const AlliancePolynomial& p, const AlliancePolynomial& q, int order) {
  AlliancePolynomial::Terms terms = p.terms();
  for (const auto& [e, c] : q.terms()) {
    auto it = terms.find(e);
    if (it == terms.end() || it->second < c)
      throw std::domain_error("subtract: negative coefficient at x^" + std::to_string(e));
    it->second -= c;
    if (it->second == 0) terms.erase(it);
  }
  return AlliancePolynomial(order, std::move(terms));
}

inline AlliancePolynomial subtract(const AlliancePolynomial& p, const AlliancePolynomial& q) {
  return subtract(p, q, p.order());
}

inline Count eval_at_one(const AlliancePolynomial& p) {
  Count sum = 0;
  for (const auto& [e, c] : p.terms()) sum += c;
  return sum;
}

inline Count coefficient_at_index(const AlliancePolynomial& p, AllianceIndex k) {
  const int e = p.order() + k.value;
  return e < 0 ? Count(0) : p.coefficient(e);
}

struct Degrees {
  int max;  // Deg
  int min;  // Deg_min
  friend bool operator==(const Degrees&, const Degrees&) = default;
};

inline Degrees degrees(const AlliancePolynomial& p) {
  if (p.is_zero()) throw std::domain_error("degrees: zero polynomial");
  return {p.terms().rbegin()->first, p.terms().begin()->first};
}

struct UnimodalityVerdict {
  bool unimodal = false;
  std::optional<int> mode_exponent;  // present iff unimodal
  bool strict_mode = false;
};

/// Tests the sequence of nonzero coefficients, in increasing exponent order,
/// for the unimodal shape. Absent exponents are skipped, so parity gaps never
/// break unimodality on their own.
inline UnimodalityVerdict is_unimodal(const AlliancePolynomial& p) {
  if (p.is_zero()) throw std::domain_error("is_unimodal: zero polynomial");
  std::vector<std::pair<int, Count>> seq(p.terms().begin(), p.terms().end());

  std::size_t peak = 0;
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (seq[i].second > seq[peak].second) peak = i;

  UnimodalityVerdict v;
  for (std::size_t i = 1; i <= peak; ++i)
    if (seq[i].second < seq[i - 1].second) return v;
  for (std::size_t i = peak + 1; i < seq.size(); ++i)
    if (seq[i].second > seq[i - 1].second) return v;

  v.unimodal = true;
  v.mode_exponent = seq[peak].first;
  v.strict_mode = peak + 1 >= seq.size() || seq[peak + 1].second < seq[peak].second;
  return v;
}

/// Canonical text form: "c*x^e" terms joined by " + " in ascending exponent
/// order; the zero polynomial prints as "0".
inline std::string to_text(const AlliancePolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + "*x^" + std::to_string(e);
  }
  return out;
}

}  // namespace alliance

#endif  // ALLIANCE_POLYNOMIAL_HPP
