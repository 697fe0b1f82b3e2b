#ifndef ALLIANCE_CLOSED_FORMS_HPP
#define ALLIANCE_CLOSED_FORMS_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "alliance/integer.hpp"
#include "alliance/polynomial.hpp"

namespace alliance {

namespace detail {

inline void require_wheel_range(const char* what, int n, int k) {
  if (n < 4) throw std::invalid_argument(std::string(what) + ": requires n >= 4");
  if (k < 2 || k > n - 1) throw std::invalid_argument(std::string(what) + ": requires 2 <= k <= n - 1");
}

}  // namespace detail

/// Number of wheel subsets containing the center with k vertices in total
/// whose rim part has no isolated vertex:
///
///   b(n, k) = (n - 1) * sum_{r=1}^{floor((k-1)/2)} C(n-k-1, r-1) C(k-1-r, r) / (k-1-r)
///
/// Every term is divided exactly; a non-integral total throws
/// std::logic_error.
inline Count b_coeff(int n, int k) {
  detail::require_wheel_range("b_coeff", n, k);
  Rational sum = 0;
  for (int r = 1; r <= (k - 1) / 2; ++r) {
    const Count top = binomial(n - k - 1, r - 1) * binomial(k - 1 - r, r);
    sum += Rational(boost::multiprecision::cpp_int(top), boost::multiprecision::cpp_int(k - 1 - r));
  }
  sum *= n - 1;
  if (denominator(sum) != 1)
    throw std::logic_error("b_coeff(" + std::to_string(n) + ", " + std::to_string(k) + ") is not an integer");
  return Count(numerator(sum));
}

/// a(n, k) = C(n-1, k-1) - b(n, k): subsets whose rim part has an isolated
/// vertex.
inline Count a_coeff(int n, int k) {
  detail::require_wheel_range("a_coeff", n, k);
  const Count all = binomial(n - 1, k - 1);
  const Count b = b_coeff(n, k);
  if (b > all)
    throw std::logic_error("a_coeff(" + std::to_string(n) + ", " + std::to_string(k) + ") would be negative");
  return all - b;
}

inline constexpr int kStringOracleMaxOrder = 26;

/// Brute-force count of labeled cyclic binary strings of length n - 1 with
/// k - 1 ones and no isolated one (no cyclic 0,1,0 window). Rotations are
/// counted separately.
inline Count cyclic_string_oracle(int n, int k) {
  detail::require_wheel_range("cyclic_string_oracle", n, k);
  if (n > kStringOracleMaxOrder) throw std::invalid_argument("cyclic_string_oracle: n above scan cap");
  const int len = n - 1;
  const std::uint32_t all = (std::uint32_t{1} << len) - 1;
  std::uint64_t count = 0;
  for (std::uint32_t s = 0; s <= all; ++s) {
    if (std::popcount(s) != k - 1) continue;
    const std::uint32_t left = ((s << 1) | (s >> (len - 1))) & all;
    const std::uint32_t right = ((s >> 1) | (s << (len - 1))) & all;
    if ((s & ~left & ~right) == 0) ++count;
  }
  return count;
}

/// Counts of the four string shapes (leading 0; 10..1; 11..0; 11..1) for r
/// blocks of ones. Beyond r = floor((k-1)/2) every count is zero.
struct CaseCounts {
  Count first_zero;
  Count one_zero;
  Count one_one_zero;
  Count one_one_one;

  Count total() const { return first_zero + one_zero + one_one_zero + one_one_one; }
  friend bool operator==(const CaseCounts&, const CaseCounts&) = default;
};

inline CaseCounts case_counts(int n, int k, int r) {
  detail::require_wheel_range("case_counts", n, k);
  if (r < 1) throw std::invalid_argument("case_counts: requires r >= 1");
  return {
      binomial(n - k, r) * binomial(k - 2 - r, r - 1),
      binomial(n - k - 1, r - 1) * binomial(k - 2 - r, r - 1),
      binomial(n - k - 1, r - 1) * binomial(k - 2 - r, r - 1),
      binomial(n - k - 1, r - 1) * binomial(k - 2 - r, r),
  };
}

/// Sum of case_counts over every admissible number of blocks r.
inline Count case_count_total(int n, int k) {
  Count t = 0;
  for (int r = 1; r <= (k - 1) / 2; ++r) t += case_counts(n, k, r).total();
  return t;
}

struct WheelCoefficientTable {
  int n = 0;
  std::map<int, Count> a;
  std::map<int, Count> b;
  int xi = 0;  // 1 for odd n
};

inline WheelCoefficientTable wheel_coefficients(int n) {
  if (n < 4) throw std::invalid_argument("wheel_coefficients: requires n >= 4");
  WheelCoefficientTable t;
  t.n = n;
  t.xi = n % 2;
  for (int k = 2; k <= n - 1; ++k) {
    t.b[k] = b_coeff(n, k);
    t.a[k] = a_coeff(n, k);
  }
  return t;
}

/// n x^(n-2) + n(n-2) x^n + x^(n+2).
inline AlliancePolynomial cycle_polynomial(int n) {
  if (n < 3) throw std::invalid_argument("cycle_polynomial: requires n >= 3");
  return AlliancePolynomial(n, {{n - 2, Count(n)}, {n, Count(n) * Count(n - 2)}, {n + 2, Count(1)}});
}

inline AlliancePolynomial e1_polynomial() { return AlliancePolynomial(1, {{1, Count(1)}}); }

/// In K_n a subset of size k has index 2k - 1 - n.
inline AlliancePolynomial complete_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("complete_polynomial: requires n >= 1");
  AlliancePolynomial p(n);
  for (int k = 1; k <= n; ++k) p.add_term(2 * k - 1, binomial(n, k));
  return p;
}

/// Closed form for the wheel W_n assembled from its decomposition into the
/// center, the rim cycle and the subsets that meet both:
///
///   A(E_1) + A(C_{n-1}) + sum_{k=2}^{floor(n/2)} C(n-1, k-1) x^(2k-1)
///   + sum_{k=floor(n/2)+1}^{n-1} a(n,k) x^(n-1) + xi_n b(n, (n+1)/2) x^n
///   + sum_{k=ceil(n/2)+1}^{n-1} b(n,k) x^(n+1) + x^(n+3)
inline AlliancePolynomial wheel_polynomial(int n) {
  if (n < 4) throw std::invalid_argument("wheel_polynomial: requires n >= 4");
  const AlliancePolynomial rim = cycle_polynomial(n - 1);
  AlliancePolynomial p = add(e1_polynomial(), rim, n);

  for (int k = 2; k <= n / 2; ++k) p.add_term(2 * k - 1, binomial(n - 1, k - 1));
  for (int k = n / 2 + 1; k <= n - 1; ++k) p.add_term(n - 1, a_coeff(n, k));
  if (n % 2 == 1) p.add_term(n, b_coeff(n, (n + 1) / 2));
  for (int k = (n + 1) / 2 + 1; k <= n - 1; ++k) p.add_term(n + 1, b_coeff(n, k));
  p.add_term(n + 3, 1);
  return p;
}

}  // namespace alliance

#endif  // ALLIANCE_CLOSED_FORMS_HPP
