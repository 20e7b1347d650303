#include <doctest.h>

#include "ggslcs/congruence_quotient.hpp"
#include "ggslcs/lower_central.hpp"
#include "ggslcs/wreath.hpp"
#include "test_util.hpp"

using namespace ggs;

TEST_CASE("series of C_3 wr C_3 on nine points") {
  const Permutation sigma3 = Permutation::from_images({2, 3, 1});
  const PermGroup w = make_group(wreath_perm_generators({sigma3}, 3, 3));
  CHECK(w.order() == 81);
  const LowerCentralSeries series = lower_central_series(w, 3);
  CHECK(series.index_exponents() == std::vector<int>{2, 1, 1});
  CHECK(series.nilpotency_class() == 3);
}

TEST_CASE("abelian input has class one") {
  const Permutation x = Permutation::from_images({2, 3, 1, 4, 5, 6});
  const Permutation y = Permutation::from_images({1, 2, 3, 5, 6, 4});
  const LowerCentralSeries series = lower_central_series(make_group({x, y}), 3);
  CHECK(series.nilpotency_class() == 1);
  CHECK(series.index_exponents() == std::vector<int>{2});
}

TEST_CASE("non-nilpotent input is reported") {
  const Permutation rot = Permutation::from_images({2, 3, 1});
  const Permutation swap = Permutation::from_images({2, 1, 3});
  CHECK_THROWS_AS(lower_central_series(make_group({rot, swap}), 3), std::domain_error);
}

TEST_CASE("series terms nest, stay normal and account for the order") {
  for (const std::vector<int>& entries : {std::vector<int>{1, 0}, std::vector<int>{1, 1}}) {
    const CongruenceQuotient G(classify_vector(3, entries), 3);
    const LowerCentralSeries series = lower_central_series(G.group(), 3);
    int sum = 0;
    for (int e : series.index_exponents()) {
      CHECK(e > 0);
      sum += e;
    }
    CHECK(sum == *G.group().chain.order_valuation(3));
    for (int i = 1; i < series.term_count(); ++i) {
      CHECK(series.term(i + 1).order() < series.term(i).order());
      for (const auto& g : series.term(i + 1).generators) CHECK(series.term(i).contains(g));
      // invariance under conjugation by the ambient generators
      for (const auto& g : series.term(i).generators)
        for (const auto& c : series.term(1).generators)
          CHECK(series.term(i).contains(conjugate(g, c)));
    }
  }
}

TEST_CASE("oracle agrees with exhaustive recomputation on groups up to 3^6") {
  // level-2 quotient for p = 3, both an FG vector and the constant one
  for (const std::vector<int>& entries : {std::vector<int>{1, 0}, std::vector<int>{1, 1}}) {
    const CongruenceQuotient G(classify_vector(3, entries), 2);
    const LowerCentralSeries series = lower_central_series(G.group(), 3);
    std::set<Permutation> term = testutil::exhaustive_closure(G.group().generators);
    REQUIRE(term.size() == 81);
    for (int i = 1; i <= series.nilpotency_class(); ++i) {
      term = testutil::exhaustive_commutator_step(term, G.group().generators);
      CHECK(series.term(i + 1).order() == term.size());
      for (const auto& x : term) CHECK(series.term(i + 1).contains(x));
    }
    CHECK(term.size() == 1);
  }
}

TEST_CASE("commutator step matches the exhaustive step inside G_3") {
  // [St(2), G_3] computed both ways; St(2) has 3^6 elements at p = 3
  const CongruenceQuotient G(classify_vector(3, {1, 0}), 3);
  const PermGroup& st2 = G.level_stabilizer(2);
  const std::set<Permutation> st2_elements =
      testutil::exhaustive_closure(st2.generators);
  REQUIRE(st2_elements.size() == 729);
  const auto step = testutil::exhaustive_commutator_step(st2_elements, G.group().generators);
  const PermGroup computed = central_commutator_step(G.group(), st2);
  CHECK(computed.order() == step.size());
  for (const auto& g : computed.generators) CHECK(step.count(g) == 1);
}

TEST_CASE("series report carries valuations and class") {
  const CongruenceQuotient G(classify_vector(3, {1, 0}), 2);
  const SeriesReport r = lower_central_series(G.group(), 3).report();
  CHECK(r.p == 3);
  CHECK(r.nilpotency_class == 3);
  REQUIRE(r.terms.size() == 4);
  CHECK(r.terms[0].order_valuation == 4);
  CHECK(r.terms[3].order_valuation == 0);
  CHECK(r.terms[3].generators.empty());
  CHECK(r.index_exponents == std::vector<int>{2, 1, 1});
}
