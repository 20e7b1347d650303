#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ggslcs/defining_vector.hpp"

namespace ggs {

/// Raised when a named check is invoked outside its hypotheses (wrong vector
/// class, level out of range). Distinct from a check that runs and fails.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SubAssertion {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string computed;
};

/// Outcome of one named check: a closed-form prediction compared against the
/// brute-force engine, with one detail entry per sub-assertion.
struct CheckResult {
  std::string check_name;
  int p = 0;
  std::vector<int> vector_entries;
  int level = 0;
  bool passed = false;
  std::vector<SubAssertion> details;
  std::int64_t elapsed_ms = 0;
};

// order of a^eps b, the uniserial descent below St(n-1), and the section
// consistency of the deepest level stabilizer
CheckResult check_theorem_2_1(const DefiningVector& e, int n);
// maximal class shape of the level-2 quotient
CheckResult check_theorem_4_1(const DefiningVector& e);
// sections of [b, a, ...(p-2)..., a] modulo the derived subgroup
CheckResult check_lemma_4_3(const DefiningVector& e);
// γ_{p+i}(G_3) as iterated commutators of St(2), plus its generator words
CheckResult check_lemma_4_4(const DefiningVector& e, int i_max);
// positions of the length-p and length-(p+1) commutators in G_3
CheckResult check_lemma_4_5(const DefiningVector& e);
// full lower central series of G_3: indices, generators, wreath image
CheckResult check_theorem_4_6(const DefiningVector& e);
// a non-FG non-periodic vector forces an index >= p^2 early in the series
CheckResult check_proposition_4_7(const DefiningVector& e);
// interval schedule of G_n against the oracle, n >= 3
CheckResult check_theorem_5_1(const DefiningVector& e, int n);

std::vector<std::string> check_names();
// Dispatch by kebab-case name ("theorem-5-1", ...). `n` is ignored by the
// checks with a fixed level. Throws std::invalid_argument on unknown names.
CheckResult run_check(const std::string& name, const DefiningVector& e, int n);
// The checks applicable to the given vector, in deterministic order.
std::vector<std::string> applicable_checks(const DefiningVector& e, int n);

}  // namespace ggs
