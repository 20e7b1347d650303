#pragma once

#include <vector>

#include "ggslcs/perm.hpp"

namespace ggs {

// Vertices of the p-adic tree truncated at depth n are words over {1..p} of
// length <= n, enumerated level by level and lexicographically within a
// level. A vertex of level m has rank sum_k (x_k - 1) p^(m-k) in [0, p^m).
int tree_vertex_count(int p, int levels);  // vertices of levels 1..levels

struct SectionTuple;

/// Depth-n truncated automorphism of the p-adic tree, stored as one label in
/// F_p per internal vertex: the local action at v is sigma^label(v) with
/// sigma = (1 2 ... p). Labels compose additively.
class Portrait {
 public:
  Portrait(int p, int depth);  // identity
  static Portrait generator_a(int p, int depth);
  static Portrait generator_b(int p, const std::vector<int>& entries, int depth);
  // Inverse of to_permutation; throws if the permutation does not come from
  // a depth-n tree automorphism with cyclic local actions.
  static Portrait from_leaf_permutation(int p, int depth, const Permutation& leaves);
  static Portrait from_sections(const SectionTuple& t);

  int prime() const { return p_; }
  int depth() const { return depth_; }
  int root_label() const { return depth_ == 0 ? 0 : labels_[0]; }
  int label(int level, int rank) const { return labels_[internal_id(level, rank)]; }
  bool is_identity() const;
  bool stabilizes_level_one() const { return root_label() == 0; }

  Portrait inverse() const;
  friend Portrait multiply(const Portrait& x, const Portrait& y);

  // image of the rank of a vertex at the given level
  int apply(int level, int rank) const;
  Permutation to_permutation() const;  // action on the p^depth leaves
  // action on all vertices of levels 1..depth, the domain used for level
  // stabilizer computations
  Permutation to_permutation_all_levels() const;

  SectionTuple psi_decompose() const;

  friend bool operator==(const Portrait&, const Portrait&) = default;

 private:
  int internal_id(int level, int rank) const;

  int p_ = 0;
  int depth_ = 0;
  std::vector<int> labels_;  // internal vertices, levels 0..depth-1
};

/// psi image of a portrait: the p sections at level one (sections[x-1] is
/// the section at vertex x) together with the root exponent.
struct SectionTuple {
  std::vector<Portrait> sections;
  int root_label = 0;
};

// Sections of [f, a] computed by the closed formula
// (f|_1^{-1} f|_p, f|_2^{-1} f|_1, ..., f|_p^{-1} f|_{p-1}); f must fix
// level one.
SectionTuple commutator_with_a_sections(const Portrait& f);

}  // namespace ggs
