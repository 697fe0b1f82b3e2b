#include <catch_amalgamated.hpp>

#include <random>

#include "alliance/closed_forms.hpp"
#include "alliance/engine.hpp"
#include "alliance/polynomial.hpp"

using namespace alliance;

namespace {

AlliancePolynomial random_poly(std::mt19937_64& rng) {
  AlliancePolynomial p(static_cast<int>(rng() % 10));
  const int terms = static_cast<int>(rng() % 6);
  for (int i = 0; i < terms; ++i) p.add_term(static_cast<int>(rng() % 20), Count(rng() % 1000));
  return p;
}

}  // namespace

TEST_CASE("add and subtract") {
  const AlliancePolynomial x(1, {{1, 1}});
  const AlliancePolynomial c4(4, {{2, 4}, {4, 8}, {6, 1}});
  CHECK(add(x, c4, 5) == AlliancePolynomial(5, {{1, 1}, {2, 4}, {4, 8}, {6, 1}}));
  CHECK(add(c4, AlliancePolynomial(4), 4) == c4);
  CHECK(add(AlliancePolynomial(1, {{1, 2}}), x, 1) == AlliancePolynomial(1, {{1, 3}}));

  const AlliancePolynomial w5(5, {{1, 1}, {2, 4}, {3, 4}, {4, 10}, {5, 4}, {6, 5}, {8, 1}});
  CHECK(subtract(subtract(w5, x), c4) == AlliancePolynomial(5, {{3, 4}, {4, 2}, {5, 4}, {6, 4}, {8, 1}}));
  CHECK(subtract(c4, c4).is_zero());
  CHECK_THROWS_AS(subtract(x, AlliancePolynomial(2, {{2, 1}})), std::domain_error);
  CHECK_THROWS_AS(subtract(x, AlliancePolynomial(1, {{1, 2}})), std::domain_error);
}

TEST_CASE("add is commutative and associative; subtract undoes add") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(add(p, q, 7) == add(q, p, 7));
    CHECK(add(add(p, q, 7), r, 7) == add(p, add(q, r, 7), 7));
    CHECK(subtract(add(p, q, p.order()), q) == p);
  }
}

TEST_CASE("evaluation at one") {
  CHECK(eval_at_one(cycle_polynomial(4)) == 13);
  CHECK(eval_at_one(alliance_polynomial(generate({Family::wheel, 6}))) == 53);
  CHECK(eval_at_one(AlliancePolynomial(3)) == 0);
}

TEST_CASE("coefficient by alliance index") {
  const auto w5 = alliance_polynomial(generate({Family::wheel, 5}));
  CHECK(coefficient_at_index(w5, {-4}) == 1);
  const auto c4 = cycle_polynomial(4);
  CHECK(coefficient_at_index(c4, {2}) == 1);
  CHECK(coefficient_at_index(c4, {0}) == 8);
  CHECK(coefficient_at_index(c4, {1}) == 0);
  CHECK(coefficient_at_index(c4, {-9}) == 0);
}

TEST_CASE("degrees") {
  CHECK(degrees(AlliancePolynomial(6, {{1, 1}, {3, 10}, {5, 30}, {7, 11}, {9, 1}})) == Degrees{9, 1});
  CHECK(degrees(cycle_polynomial(5)) == Degrees{7, 3});
  CHECK(degrees(AlliancePolynomial(1, {{1, 1}})) == Degrees{1, 1});
  CHECK_THROWS_AS(degrees(AlliancePolynomial(2)), std::domain_error);
}

TEST_CASE("unimodality over nonzero coefficients") {
  const AlliancePolynomial w6(6, {{1, 1}, {3, 10}, {5, 30}, {7, 11}, {9, 1}});
  const auto v = is_unimodal(w6);
  CHECK(v.unimodal);
  CHECK(v.mode_exponent == 5);
  CHECK(v.strict_mode);

  CHECK_FALSE(is_unimodal(alliance_polynomial(generate({Family::path, 5}))).unimodal);
  CHECK_FALSE(is_unimodal(alliance_polynomial(generate({Family::path, 5}))).mode_exponent.has_value());

  const auto single = is_unimodal(AlliancePolynomial(3, {{3, 1}}));
  CHECK(single.unimodal);
  CHECK(single.mode_exponent == 3);

  // Plateau: first maximum is the mode and it is not strict.
  const auto plateau = is_unimodal(AlliancePolynomial(4, {{1, 2}, {3, 5}, {5, 5}, {7, 1}}));
  CHECK(plateau.unimodal);
  CHECK(plateau.mode_exponent == 3);
  CHECK_FALSE(plateau.strict_mode);

  CHECK_FALSE(is_unimodal(AlliancePolynomial(4, {{1, 3}, {2, 1}, {3, 3}})).unimodal);
  CHECK_THROWS_AS(is_unimodal(AlliancePolynomial(1)), std::domain_error);
}

TEST_CASE("canonical text form") {
  CHECK(to_text(cycle_polynomial(4)) == "4*x^2 + 8*x^4 + 1*x^6");
  CHECK(to_text(AlliancePolynomial(3)) == "0");
}

TEST_CASE("coefficients are exact beyond 64 bits") {
  AlliancePolynomial p(1);
  const Count big = pow2(100);
  p.add_term(1, big);
  p.add_term(1, big);
  CHECK(p.coefficient(1) == pow2(101));
  CHECK(to_text(p) == "2535301200456458802993406410752*x^1");
  CHECK(binomial(61, 30) == Count(232714176627630544ULL));
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, 0) == 0);
}
