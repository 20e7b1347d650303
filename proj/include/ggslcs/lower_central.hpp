#pragma once

#include <string>
#include <vector>

#include "ggslcs/stabilizer_chain.hpp"

namespace ggs {

struct SeriesTerm {
  std::vector<Permutation> generators;
  int order_valuation = 0;
};

/// Serializable summary of a computed lower central series. index_exponents[i]
/// is log_p |γ_{i+1} : γ_{i+2}| shifted down: entry 0 describes γ_1 : γ_2.
struct SeriesReport {
  int p = 0;
  std::vector<SeriesTerm> terms;  // γ_1, γ_2, ..., final trivial term included
  std::vector<int> index_exponents;
  int nilpotency_class = 0;
};

/// Brute-force lower central series γ_1 = G, γ_{i+1} = ⟨[γ_i, G]⟩^G of a
/// finite p-group, with a membership chain per term.
class LowerCentralSeries {
 public:
  LowerCentralSeries(int p, std::vector<PermGroup> terms);

  int prime() const { return p_; }
  // 1-based: term(1) = γ_1; the last term is trivial.
  const PermGroup& term(int i) const { return terms_.at(i - 1); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  int nilpotency_class() const { return term_count() - 1; }
  const std::vector<int>& index_exponents() const { return exponents_; }
  SeriesReport report() const;

 private:
  int p_;
  std::vector<PermGroup> terms_;
  std::vector<int> exponents_;
};

// γ_{i+1} from γ_i: normal closure in `ambient` of the commutators of the
// term generators with the ambient generators.
PermGroup central_commutator_step(const PermGroup& ambient, const PermGroup& term);

// Throws std::domain_error when the series stabilizes above the trivial
// group (non-nilpotent input) or `max_terms` is exceeded.
LowerCentralSeries lower_central_series(const PermGroup& g, int p, int max_terms = 512);

}  // namespace ggs
