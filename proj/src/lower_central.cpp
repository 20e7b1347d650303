#include "ggslcs/lower_central.hpp"

#include <stdexcept>

namespace ggs {

LowerCentralSeries::LowerCentralSeries(int p, std::vector<PermGroup> terms)
    : p_(p), terms_(std::move(terms)) {
  for (std::size_t i = 0; i + 1 < terms_.size(); ++i) {
    const auto vi = terms_[i].chain.order_valuation(p_);
    const auto vn = terms_[i + 1].chain.order_valuation(p_);
    if (!vi || !vn)
      throw std::domain_error("lower central series: term order is not a power of p");
    exponents_.push_back(*vi - *vn);
  }
}

SeriesReport LowerCentralSeries::report() const {
  SeriesReport r;
  r.p = p_;
  for (const auto& t : terms_)
    r.terms.push_back(SeriesTerm{t.generators, *t.chain.order_valuation(p_)});
  r.index_exponents = exponents_;
  r.nilpotency_class = nilpotency_class();
  return r;
}

PermGroup central_commutator_step(const PermGroup& ambient, const PermGroup& term) {
  std::vector<Permutation> seeds;
  if (term.generators.empty()) {
    // trivial term: the step stays trivial
    return PermGroup{{}, StabilizerChain(ambient.chain.degree())};
  }
  seeds.reserve(term.generators.size() * ambient.generators.size());
  for (const auto& h : term.generators)
    for (const auto& g : ambient.generators) seeds.push_back(commutator(h, g));
  return normal_closure(ambient, seeds);
}

LowerCentralSeries lower_central_series(const PermGroup& g, int p, int max_terms) {
  std::vector<PermGroup> terms;
  terms.push_back(g);
  while (terms.back().order() > 1) {
    if (static_cast<int>(terms.size()) > max_terms)
      throw std::domain_error("lower central series: iteration bound exceeded");
    PermGroup next = central_commutator_step(g, terms.back());
    if (next.order() == terms.back().order())
      throw std::domain_error("lower central series: series stabilized (input not nilpotent)");
    terms.push_back(std::move(next));
  }
  return LowerCentralSeries(p, std::move(terms));
}

}  // namespace ggs
