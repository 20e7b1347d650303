#include <doctest.h>

#include <random>

#include "ggslcs/portrait.hpp"
#include "test_util.hpp"

using namespace ggs;

TEST_CASE("generator a") {
  CHECK(Portrait::generator_a(3, 1).to_permutation() == Permutation::from_images({2, 3, 1}));
  CHECK(Portrait::generator_a(3, 2).to_permutation() ==
        Permutation::from_images({4, 5, 6, 7, 8, 9, 1, 2, 3}));
  CHECK(Portrait::generator_a(5, 2).to_permutation().order() == 5);
}

TEST_CASE("generator b") {
  // acts as a on subtree 1 and trivially elsewhere at depth 2
  CHECK(Portrait::generator_b(3, {1, 0}, 2).to_permutation() ==
        Permutation::from_images({2, 3, 1, 4, 5, 6, 7, 8, 9}));
  for (int p : {3, 5}) {
    std::vector<int> fg(p - 1, 0);
    fg[0] = 1;
    const Portrait b = Portrait::generator_b(p, fg, 3);
    CHECK(b.stabilizes_level_one());
    CHECK(b.to_permutation().order() == static_cast<std::uint64_t>(p));
  }
}

TEST_CASE("portrait group law") {
  const Portrait a = Portrait::generator_a(3, 2);
  const Portrait id(3, 2);
  CHECK(multiply(a, id) == a);
  CHECK(multiply(a, a.inverse()) == id);
  CHECK(multiply(a, a).root_label() == 2);
  CHECK_THROWS_AS(multiply(a, Portrait::generator_a(3, 3)), std::invalid_argument);
}

TEST_CASE("to_permutation is a homomorphism") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int p = trial % 2 ? 3 : 5;
    const int depth = trial % 2 ? 3 : 2;
    const Portrait x = testutil::random_portrait(p, depth, rng);
    const Portrait y = testutil::random_portrait(p, depth, rng);
    CHECK(multiply(x, y).to_permutation() == compose(x.to_permutation(), y.to_permutation()));
    CHECK(x.inverse().to_permutation() == x.to_permutation().inverse());
  }
}

TEST_CASE("leaf permutation determines the portrait") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Portrait x = testutil::random_portrait(3, 3, rng);
    CHECK(Portrait::from_leaf_permutation(3, 3, x.to_permutation()) == x);
  }
  // a transposition of two leaves in different blocks is no automorphism
  CHECK_THROWS_AS(
      Portrait::from_leaf_permutation(3, 2, Permutation::from_images({4, 2, 3, 1, 5, 6, 7, 8, 9})),
      std::invalid_argument);
}

TEST_CASE("psi decomposition") {
  const Portrait b = Portrait::generator_b(3, {1, 0}, 3);
  const SectionTuple t = b.psi_decompose();
  CHECK(t.root_label == 0);
  CHECK(t.sections[0] == Portrait::generator_a(3, 2));
  CHECK(t.sections[1] == Portrait(3, 2));
  CHECK(t.sections[2] == Portrait::generator_b(3, {1, 0}, 2));
  CHECK(Portrait::from_sections(t) == b);

  const SectionTuple ta = Portrait::generator_a(3, 3).psi_decompose();
  CHECK(ta.root_label == 1);
  for (const auto& s : ta.sections) CHECK(s.is_identity());
}

TEST_CASE("sections of a product follow the wreath multiplication") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    const Portrait x = testutil::random_portrait(3, 3, rng);
    const Portrait y = testutil::random_portrait(3, 3, rng);
    const SectionTuple sx = x.psi_decompose();
    const SectionTuple sy = y.psi_decompose();
    const SectionTuple sz = multiply(x, y).psi_decompose();
    CHECK(sz.root_label == (sx.root_label + sy.root_label) % 3);
    // (xy)|_v = x|_v y|_{v^x}
    for (int v = 0; v < 3; ++v)
      CHECK(sz.sections[v] ==
            multiply(sx.sections[v], sy.sections[(v + sx.root_label) % 3]));
  }
}

TEST_CASE("conjugation by a shifts the sections cyclically") {
  std::mt19937 rng(23);
  const Portrait a = Portrait::generator_a(3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const Portrait f = testutil::random_portrait(3, 3, rng, /*fix_level_one=*/true);
    const Portrait fa = multiply(multiply(a.inverse(), f), a);
    const SectionTuple before = f.psi_decompose();
    const SectionTuple after = fa.psi_decompose();
    CHECK(after.root_label == 0);
    // (f|_1, ..., f|_p) becomes (f|_p, f|_1, ..., f|_{p-1})
    CHECK(after.sections[0] == before.sections[2]);
    CHECK(after.sections[1] == before.sections[0]);
    CHECK(after.sections[2] == before.sections[1]);
  }
}

TEST_CASE("closed commutator formula for [f, a]") {
  const Portrait id3(3, 3);
  const SectionTuple trivial = commutator_with_a_sections(id3);
  for (const auto& s : trivial.sections) CHECK(s.is_identity());

  // frozen case: f = b for e = (1, 0); sections (a, 1, b) shear into
  // (a^{-1} b, a, b^{-1}), matching the direct computation below
  const Portrait b = Portrait::generator_b(3, {1, 0}, 3);
  const SectionTuple got = commutator_with_a_sections(b);
  const Portrait a2 = Portrait::generator_a(3, 2);
  const Portrait b2 = Portrait::generator_b(3, {1, 0}, 2);
  CHECK(got.sections[0] == multiply(a2.inverse(), b2));
  CHECK(got.sections[1] == a2);
  CHECK(got.sections[2] == b2.inverse());

  std::mt19937 rng(31);
  const Portrait a = Portrait::generator_a(3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const Portrait f = testutil::random_portrait(3, 3, rng, /*fix_level_one=*/true);
    const SectionTuple formula = commutator_with_a_sections(f);
    const SectionTuple direct = testutil::portrait_commutator(f, a).psi_decompose();
    CHECK(direct.root_label == 0);
    for (int x = 0; x < 3; ++x) CHECK(formula.sections[x] == direct.sections[x]);
  }
  CHECK_THROWS_AS(commutator_with_a_sections(Portrait::generator_a(3, 2)),
                  std::invalid_argument);
}

TEST_CASE("portrait commutator matches permutation commutator") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const Portrait x = testutil::random_portrait(3, 2, rng);
    const Portrait y = testutil::random_portrait(3, 2, rng);
    CHECK(testutil::portrait_commutator(x, y).to_permutation() ==
          commutator(x.to_permutation(), y.to_permutation()));
  }
}

TEST_CASE("vertex action covers every level") {
  const Portrait a = Portrait::generator_a(3, 2);
  const Permutation ext = a.to_permutation_all_levels();
  CHECK(ext.degree() == 12);  // 3 + 9 vertices
  // level one rotates 1 -> 2 -> 3; leaves rotate in blocks
  CHECK(ext(1) == 2);
  CHECK(ext(3) == 1);
  CHECK(ext(4) == 7);
  CHECK(ext(12) == 6);
}
