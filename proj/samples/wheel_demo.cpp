// Prints the alliance polynomial of a few wheels twice: once by exhaustive
// enumeration and once from the closed form.
#include <iostream>

#include "alliance/alliance.hpp"

int main() {
  using namespace alliance;
  for (int n = 4; n <= 10; ++n) {
    const AlliancePolynomial brute = alliance_polynomial(generate({Family::wheel, n}));
    const AlliancePolynomial closed = wheel_polynomial(n);
    std::cout << "W_" << n << ": " << to_text(brute) << (brute == closed ? "  [closed form agrees]" : "  [MISMATCH]")
              << '\n';
  }
  const AlliancePolynomial w8 = wheel_polynomial(8);
  const UnimodalityVerdict v = is_unimodal(w8);
  std::cout << "W_8 unimodal: " << std::boolalpha << v.unimodal << ", mode x^" << v.mode_exponent.value_or(-1) << '\n';
}
