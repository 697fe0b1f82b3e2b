#ifndef ALLIANCE_INTEGER_HPP
#define ALLIANCE_INTEGER_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace alliance {

/// Exact nonnegative count. Overflow throws instead of wrapping.
using Count = boost::multiprecision::checked_uint128_t;

/// Exact rational used where a closed form divides term by term.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Count& c) { return c.str(); }

inline Count pow2(unsigned e) {
  if (e >= 128) throw std::overflow_error("pow2: exponent too large");
  return Count(1) << e;
}

/// Binomial coefficient with C(a, b) = 0 whenever a < 0, b < 0 or b > a.
inline Count binomial(long long a, long long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Count r = 1;
  for (long long i = 1; i <= b; ++i) {
    // r * (a - b + i) / i stays integral at every step.
    r = r * Count(a - b + i) / Count(i);
  }
  return r;
}

}  // namespace alliance

#endif  // ALLIANCE_INTEGER_HPP
