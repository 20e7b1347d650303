#include <doctest.h>

#include "ggslcs/congruence_quotient.hpp"
#include "ggslcs/fp.hpp"
#include "ggslcs/lower_central.hpp"
#include "ggslcs/schedule.hpp"

using namespace ggs;

TEST_CASE("vector classification") {
  const DefiningVector e1 = classify_vector(3, {1, 0});
  CHECK(e1.epsilon == 1);
  CHECK(e1.delta == 1);
  CHECK(e1.is_fg_type);
  CHECK_FALSE(e1.is_periodic);
  CHECK_FALSE(e1.is_symmetric);

  const DefiningVector e2 = classify_vector(5, {1, 0, 0, 0});
  CHECK(e2.epsilon == 1);
  CHECK(e2.delta == 1);
  CHECK(e2.is_fg_type);

  const DefiningVector e3 = classify_vector(5, {1, 2, 0, 0});
  CHECK(e3.epsilon == 3);
  CHECK(e3.delta == 0);
  CHECK_FALSE(e3.is_fg_type);
  CHECK_FALSE(e3.is_periodic);
  CHECK_FALSE(e3.is_constant);

  // the Gupta-Sidki vector is periodic
  CHECK(classify_vector(5, {1, 4, 0, 0}).is_periodic);

  CHECK_THROWS_AS(classify_vector(3, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(classify_vector(3, {1}), std::invalid_argument);
  CHECK_THROWS_AS(classify_vector(4, {1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(classify_vector(9, {1, 0, 0, 0, 0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("FG-type vectors are never symmetric, and their density is known") {
  for (int p : {3, 5}) {
    int fg_count = 0;
    std::vector<int> entries(p - 1, 0);
    const long long total = ipow(p, p - 1);
    for (long long code = 1; code < total; ++code) {
      long long c = code;
      for (int i = 0; i < p - 1; ++i) {
        entries[i] = static_cast<int>(c % p);
        c /= p;
      }
      const DefiningVector e = classify_vector(p, entries);
      if (e.is_fg_type) {
        ++fg_count;
        CHECK_FALSE(e.is_symmetric);
      }
      CHECK(e.is_periodic == (e.epsilon == 0));
    }
    CHECK(fg_count == ipow(p, p - 1) - 2 * ipow(p, p - 2) + ipow(p, p - 3));
  }
}

TEST_CASE("congruence quotient orders") {
  const DefiningVector e = classify_vector(3, {1, 0});
  CHECK(CongruenceQuotient(e, 2).group().chain.order_valuation(3) == 4);
  const CongruenceQuotient g3(e, 3);
  CHECK(g3.group().chain.order_valuation(3) == 10);
  CHECK(g3.level_stabilizer(2).chain.order_valuation(3) == 6);
  CHECK(g3.level_stabilizer(3).order() == 1);

  const CongruenceQuotient g5(classify_vector(5, {1, 0, 0, 0}), 3);
  CHECK(g5.group().chain.order_valuation(5) == 26);
}

TEST_CASE("order formula holds for every FG vector at p=3") {
  for (const std::vector<int>& v :
       {std::vector<int>{1, 0}, {0, 1}, {2, 0}, {0, 2}}) {
    const DefiningVector e = classify_vector(3, v);
    REQUIRE(e.is_fg_type);
    for (int n = 2; n <= 3; ++n)
      CHECK(CongruenceQuotient(e, n).group().chain.order_valuation(3) ==
            ipow(3, n - 1) + 1);
  }
}

TEST_CASE("deepest level stabilizer is elementary abelian") {
  for (int n : {2, 3}) {
    const CongruenceQuotient G(classify_vector(3, {1, 0}), n);
    const auto& st = G.level_stabilizer(n - 1);
    for (const auto& g : st.generators) {
      CHECK(g.order() == 3);
      for (const auto& h : st.generators) CHECK(commutator(g, h).is_identity());
    }
  }
}

TEST_CASE("St(2) equals the derived subgroup of St(1) at level 3") {
  const CongruenceQuotient G(classify_vector(3, {1, 0}), 3);
  const PermGroup derived = central_commutator_step(G.level_stabilizer(1), G.level_stabilizer(1));
  CHECK(derived.order() == G.level_stabilizer(2).order());
  for (const auto& g : derived.generators) CHECK(G.level_stabilizer(2).contains(g));
}

TEST_CASE("level stabilizers match direct filtering on the level-2 quotient") {
  const CongruenceQuotient G(classify_vector(3, {1, 0}), 2);
  const auto all = G.group().chain.elements();
  std::vector<Permutation> fixing;
  for (const auto& g : all) {
    // fixes level one iff it preserves each block of three leaves
    bool fixes = true;
    for (int block = 0; block < 3; ++block)
      fixes = fixes && (g(3 * block + 1) - 1) / 3 == block;
    if (fixes) fixing.push_back(g);
  }
  CHECK(fixing.size() == 27);
  CHECK(G.level_stabilizer(1).order() == 27);
  for (const auto& g : fixing) CHECK(G.level_stabilizer(1).contains(g));
}

TEST_CASE("x and y words") {
  const CongruenceQuotient G(classify_vector(3, {1, 0}), 3);
  CHECK(G.x_word(1) == G.gen_b());
  CHECK(G.y_word(1, 1) == G.gen_a());
  CHECK_FALSE(G.x_word(8).is_identity());
  CHECK(G.x_word(9).is_identity());  // the class is 8
  CHECK_THROWS_AS(G.y_word(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(G.y_word(4, 3), std::invalid_argument);

  const LowerCentralSeries series = lower_central_series(G.group(), 3);
  CHECK(series.term(8).contains(G.x_word(8)));
  for (int i = 1; i <= 8; ++i) CHECK(series.term(i).contains(G.x_word(i)));
  for (int i = 2; i <= 8; ++i)
    for (int j = 2; j <= i; ++j) CHECK(series.term(i).contains(G.y_word(j, i)));
}

TEST_CASE("normal closure of the last word recovers the last term") {
  const CongruenceQuotient G(classify_vector(3, {1, 0}), 3);
  const LowerCentralSeries series = lower_central_series(G.group(), 3);
  const PermGroup closure = normal_closure(G.group(), {G.x_word(8)});
  CHECK(closure.order() == 3);
  CHECK(closure.order() == series.term(8).order());
  for (const auto& g : closure.generators) CHECK(series.term(8).contains(g));
  for (const auto& g : series.term(8).generators) CHECK(closure.contains(g));
}

TEST_CASE("interval schedule values") {
  const IntervalSchedule s3 = interval_schedule(3, 3);
  CHECK(s3.class_c == 8);
  CHECK(s3.exponents == std::vector<int>{2, 1, 2, 1, 1, 1, 1, 1});

  const IntervalSchedule s4 = interval_schedule(3, 4);
  CHECK(s4.class_c == 23);
  int sum = 0;
  for (long long i = 1; i <= s4.class_c; ++i) {
    sum += s4.exponents[i - 1];
    const bool two = i == 1 || i == 3 || i == 5 || i == 6 || i == 7;
    CHECK(s4.exponents[i - 1] == (two ? 2 : 1));
  }
  CHECK(sum == 28);
  CHECK(s4.generator_tags[4] == std::vector<std::string>{"x(5)", "y_5(5)"});

  const IntervalSchedule s5 = interval_schedule(5, 3);
  CHECK(s5.class_c == 24);
  int sum5 = 0;
  for (long long i = 1; i <= s5.class_c; ++i) {
    sum5 += s5.exponents[i - 1];
    CHECK(s5.exponents[i - 1] == (i == 1 || i == 5 ? 2 : 1));
  }
  CHECK(sum5 == 26);

  CHECK_THROWS_AS(interval_schedule(3, 2), std::invalid_argument);
}

TEST_CASE("schedule closed forms match the recursions") {
  for (int p : {3, 5, 7}) {
    for (int m = 2; m <= 10; ++m) {
      CHECK(ell_closed_form(p, m) == ell_value(p, m));
      CHECK(r_closed_form(p, m) == r_value(p, m));
    }
    // each p^2 block has p^{m-1} indices
    for (int m = 1; m <= 8; ++m) CHECK(r_value(p, m) - ell_value(p, m) == ipow(p, m - 1));
    // predicted exponents account for the full order
    for (int n = 3; n <= 5; ++n) {
      const IntervalSchedule s = interval_schedule(p, n);
      long long sum = 0;
      for (int e : s.exponents) sum += e;
      CHECK(sum == ipow(p, n - 1) + 1);
    }
  }
}
