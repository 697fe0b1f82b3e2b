#include <catch_amalgamated.hpp>

#include <set>

#include "alliance/graph_io.hpp"
#include "alliance/verify.hpp"
#include "oracle.hpp"

using namespace alliance;

namespace {

const Graph e1 = generate({Family::empty, 1});

bool all_passed(const CheckReport& r) {
  for (const auto& e : r.entries) {
    INFO(r.name << "/" << e.name << ": " << e.detail);
    CHECK(e.passed);
  }
  return r.passed();
}

}  // namespace

TEST_CASE("join decomposition for E_1 + C_4") {
  const JoinReport r = check_join_theorem(e1, generate({Family::cycle, 4}));
  CHECK(r.lhs == alliance_polynomial(generate({Family::wheel, 5})));
  CHECK(r.residual == AlliancePolynomial(5, {{3, 4}, {4, 2}, {5, 4}, {6, 4}, {8, 1}}));
  CHECK(r.residual_at_one == 15);
  CHECK(r.expected_at_one == 15);
  CHECK(r.residual_matches_direct());
  CHECK(r.passed());
  // The degree claim is recorded, not enforced: residual reaches x^8 while
  // the disjoint union E_1 u C_4 tops out at x^7.
  CHECK(r.residual_degree == 8);
  CHECK(r.union_degree == 7);
  CHECK_FALSE(r.degree_claim_holds());
}

TEST_CASE("join decomposition small cases") {
  const JoinReport k2 = check_join_theorem(e1, e1);
  CHECK(k2.lhs == AlliancePolynomial(2, {{1, 2}, {3, 1}}));
  CHECK(k2.residual == AlliancePolynomial(2, {{3, 1}}));
  CHECK(k2.residual_at_one == 1);

  CHECK(check_join_theorem(e1, generate({Family::cycle, 5})).residual_at_one == 31);
  CHECK_THROWS_AS(check_join_theorem(generate({Family::path, 13}), generate({Family::path, 12})), CapacityError);
}

TEST_CASE("join suite on random pairs") { CHECK(all_passed(check_join_suite(40, 10, 10, 5))); }

TEST_CASE("connected induced subgraph counter") {
  CHECK(count_connected_induced_subgraphs(generate({Family::path, 4})) == 10);
  CHECK(count_connected_induced_subgraphs(generate({Family::complete, 5})) == 31);
  CHECK(count_connected_induced_subgraphs(generate({Family::empty, 6})) == 6);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 9));
    const auto a = oracle::matrix_of(g);
    unsigned long long want = 0;
    for (unsigned long long s = 1; s < (1ULL << g.order()); ++s) want += oracle::connected(a, oracle::members(g.order(), s));
    CHECK(count_connected_induced_subgraphs(g) == Count(want));
  }
}

TEST_CASE("basic properties on named examples") {
  const Graph c4 = generate({Family::cycle, 4});
  CHECK(all_passed(check_basic_properties(c4)));
  CHECK(coefficient_at_index(alliance_polynomial(c4), {2}) == 1);

  const auto w5 = alliance_polynomial(generate({Family::wheel, 5}));
  CHECK(w5.coefficient(1) == 1);
  CHECK(w5.coefficient(2) == 4);
  CHECK(all_passed(check_basic_properties(generate({Family::wheel, 5}))));

  const Graph c34 = disjoint_union(generate({Family::cycle, 3}), generate({Family::cycle, 4}));
  CHECK(coefficient_at_index(alliance_polynomial(c34), {2}) == 2);
  CHECK(count_regular_components(c34, 2) == 2);
  CHECK(all_passed(check_basic_properties(c34)));
}

TEST_CASE("lemma suite, reduced") { CHECK(all_passed(check_lemma_suite(100, 9, 9, 1))); }

TEST_CASE("labeled graph enumeration") {
  CHECK(enumerate_labeled_graphs(2).size() == 2);
  CHECK(enumerate_labeled_graphs(3).size() == 8);
  const auto four = enumerate_labeled_graphs(4);
  CHECK(four.size() == 64);
  int connected = 0;
  std::set<std::string> distinct;
  for (const Graph& g : four) {
    connected += is_connected_subset(g, {g.vertices()});
    distinct.insert(encode_graph6(g));
  }
  CHECK(connected == 38);
  CHECK(distinct.size() == 64);
  CHECK_THROWS_AS(enumerate_labeled_graphs(8), std::invalid_argument);

  const LabeledGraphSweep sweep(1, 4);
  CHECK(sweep.size() == 1 + 2 + 8 + 64);
  CHECK(sweep[0].order() == 1);
  CHECK(sweep[3].order() == 3);
  CHECK(sweep[sweep.size() - 1] == generate({Family::complete, 4}));
}

TEST_CASE("wheel labeling recognizer") {
  CHECK(is_wheel_labeling(generate({Family::wheel, 7})));
  CHECK(is_wheel_labeling(generate({Family::complete, 4})));
  CHECK_FALSE(is_wheel_labeling(generate({Family::complete, 5})));
  CHECK_FALSE(is_wheel_labeling(join(e1, disjoint_union(generate({Family::cycle, 3}), generate({Family::cycle, 3})))));
  CHECK_FALSE(is_wheel_labeling(generate({Family::cycle, 6})));
}

TEST_CASE("characterize over small corpora") {
  const auto four = characterize(enumerate_labeled_graphs(4), wheel_polynomial(4));
  REQUIRE(four.target_matches.size() == 1);
  CHECK(enumerate_labeled_graphs(4)[four.target_matches[0]] == generate({Family::complete, 4}));
  CHECK(four.skipped.empty());

  std::size_t grouped = 0;
  for (const auto& [terms, ids] : four.groups) grouped += ids.size();
  CHECK(grouped == 64);

  const std::vector<Graph> pair{generate({Family::cycle, 6}), generate({Family::wheel, 6})};
  const auto two = characterize(pair, wheel_polynomial(6));
  CHECK(two.target_matches == std::vector<std::uint64_t>{1});

  const std::vector<Graph> mixed{generate({Family::path, 30}), generate({Family::wheel, 5})};
  const auto skipped = characterize(mixed, wheel_polynomial(5));
  CHECK(skipped.skipped.size() == 1);
  CHECK(skipped.skipped[0].first == 0);
  CHECK(skipped.target_matches == std::vector<std::uint64_t>{1});
}

TEST_CASE("characterize is independent of worker count") {
  const auto sweep = enumerate_labeled_graphs(5);
  const auto one = characterize(sweep, wheel_polynomial(5), {kDefaultBruteForceCap, 1});
  const auto many = characterize(sweep, wheel_polynomial(5), {kDefaultBruteForceCap, 5});
  CHECK(one.groups == many.groups);
  CHECK(one.target_matches == many.target_matches);
  CHECK(one.target_matches.size() == 15);
}

TEST_CASE("wheel characterization up to order 5") { CHECK(all_passed(check_wheel_characterization(1, 5))); }

TEST_CASE("closed-form harnesses") {
  CHECK(all_passed(check_bcoeff_identity(12)));
  CHECK(all_passed(check_wheel_unimodality(24)));
  CHECK(all_passed(check_path_unimodality(10)));
  CHECK(all_passed(check_evaluation_identities(30)));
  CHECK(all_passed(check_closed_forms(12, 12)));
  CHECK(all_passed(check_a_dominates_b(24, /*even_only=*/true)));
  CHECK_FALSE(check_a_dominates_b(24).passed());
  CHECK(check_a_dominates_b(24).failures() == 1);
  CHECK(all_passed(check_disjoint_cycle_inequality(13)));
}

TEST_CASE("wheel unimodality spot values") {
  const auto w4 = is_unimodal(wheel_polynomial(4));
  CHECK(w4.mode_exponent == 3);
  const auto w6 = is_unimodal(wheel_polynomial(6));
  CHECK(w6.mode_exponent == 5);
}
