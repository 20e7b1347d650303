#include "ggslcs/congruence_quotient.hpp"

#include <numeric>
#include <stdexcept>

#include "ggslcs/fp.hpp"

namespace ggs {

namespace {

// leaf action of an all-vertex permutation (the leaves are the last block)
Permutation restrict_to_leaves(const Permutation& ext, int p, int n) {
  const int leaves = static_cast<int>(ipow(p, n));
  const int offset = ext.degree() - leaves;
  std::vector<int> images(leaves);
  for (int k = 0; k < leaves; ++k) images[k] = ext(offset + k + 1) - offset;
  return Permutation::from_images(std::move(images));
}

}  // namespace

CongruenceQuotient::CongruenceQuotient(DefiningVector e, int level)
    : vector_(std::move(e)), level_(level) {
  if (level < 1) throw std::invalid_argument("congruence quotient level must be >= 1");
  const int p = vector_.p;
  const Portrait a = Portrait::generator_a(p, level);
  const Portrait b = Portrait::generator_b(p, vector_.entries, level);

  group_ = make_group({a.to_permutation(), b.to_permutation()});

  // auxiliary chain over all vertices, base in level order
  const int domain = tree_vertex_count(p, level);
  std::vector<int> base(domain);
  std::iota(base.begin(), base.end(), 1);
  const StabilizerChain tower = StabilizerChain::from_generators(
      {a.to_permutation_all_levels(), b.to_permutation_all_levels()}, base);
  if (tower.order() != group_.order())
    throw std::logic_error("congruence quotient: vertex and leaf actions disagree");

  for (int k = 1; k <= level; ++k) {
    const int prefix = tree_vertex_count(p, k);
    std::vector<Permutation> gens;
    for (const auto& g : tower.stabilizer_generators(prefix))
      gens.push_back(restrict_to_leaves(g, p, level));
    if (gens.empty()) {
      stabilizers_.push_back(PermGroup{{}, StabilizerChain(group_.chain.degree())});
    } else {
      stabilizers_.push_back(make_group(std::move(gens)));
    }
    if (stabilizers_.back().order() != tower.stabilizer_order(prefix))
      throw std::logic_error("congruence quotient: level stabilizer order mismatch");
  }
}

Portrait CongruenceQuotient::portrait_a() const {
  return Portrait::generator_a(vector_.p, level_);
}

Portrait CongruenceQuotient::portrait_b() const {
  return Portrait::generator_b(vector_.p, vector_.entries, level_);
}

Permutation CongruenceQuotient::a_eps_b() const {
  return compose(power(gen_a(), vector_.epsilon), gen_b());
}

const PermGroup& CongruenceQuotient::level_stabilizer(int k) const {
  if (k < 1 || k > level_) throw std::invalid_argument("level_stabilizer: k out of range");
  return stabilizers_[k - 1];
}

Permutation CongruenceQuotient::x_word(int i) const {
  if (i < 1) throw std::invalid_argument("x_word: i must be >= 1");
  Permutation w = gen_b();
  const Permutation t = a_eps_b();
  for (int k = 2; k <= i; ++k) w = commutator(w, t);
  return w;
}

Permutation CongruenceQuotient::y_word(int j, int i) const {
  if (j == 1 && i == 1) return gen_a();
  if (j < 2 || j > i) throw std::invalid_argument("y_word: need (1,1) or 2 <= j <= i");
  Permutation w = commutator(x_word(j - 1), gen_b());
  const Permutation t = a_eps_b();
  for (int k = 0; k < i - j; ++k) w = commutator(w, t);
  return w;
}

}  // namespace ggs
