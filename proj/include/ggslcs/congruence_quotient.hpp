#pragma once

#include <vector>

#include "ggslcs/defining_vector.hpp"
#include "ggslcs/portrait.hpp"
#include "ggslcs/stabilizer_chain.hpp"

namespace ggs {

/// The level-n congruence quotient of the GGS group with the given defining
/// vector, acting faithfully on the p^n leaves of the truncated tree. Leaf k
/// is the word x_1...x_n with k = 1 + sum (x_i - 1) p^(n-i).
///
/// Level stabilizers are read off a single auxiliary chain over all tree
/// vertices whose base enumerates the vertices level by level, so the
/// pointwise stabilizer of levels <= k is a suffix of that chain.
class CongruenceQuotient {
 public:
  CongruenceQuotient(DefiningVector e, int level);

  const DefiningVector& vector() const { return vector_; }
  int level() const { return level_; }
  int prime() const { return vector_.p; }

  const Permutation& gen_a() const { return group_.generators[0]; }
  const Permutation& gen_b() const { return group_.generators[1]; }
  const PermGroup& group() const { return group_; }
  Portrait portrait_a() const;
  Portrait portrait_b() const;
  Permutation a_eps_b() const;  // a^epsilon b

  // St(k) for 1 <= k <= level; St(level) is trivial.
  const PermGroup& level_stabilizer(int k) const;

  // x(1) = b, x(i) = [x(i-1), a^eps b]
  Permutation x_word(int i) const;
  // y_1(1) = a, y_j(i) = [x(j-1), b, a^eps b, ...(i-j)..., a^eps b]
  Permutation y_word(int j, int i) const;

 private:
  DefiningVector vector_;
  int level_;
  PermGroup group_;
  std::vector<PermGroup> stabilizers_;  // entry k-1 = St(k)
};

}  // namespace ggs
