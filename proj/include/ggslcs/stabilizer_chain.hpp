#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <utility>
#include <vector>

#include "ggslcs/perm.hpp"

namespace ggs {

using BigInt = boost::multiprecision::cpp_int;

// log_p of n when n is a pure power of p, nullopt otherwise.
std::optional<int> p_valuation(BigInt n, int p);

/// Base-and-strong-generating-set representation of a permutation group,
/// built with a deterministic Schreier-Sims procedure. The group order is
/// the product of the fundamental orbit lengths along the base, and sifting
/// against the chain decides membership exactly.
class StabilizerChain {
 public:
  StabilizerChain() : StabilizerChain(1) {}
  explicit StabilizerChain(int degree);  // trivial group
  static StabilizerChain from_generators(const std::vector<Permutation>& gens);
  // Base points are taken from `base` in order; new points are appended from
  // it even when the current residue fixes them, so the final base is always
  // a prefix of `base`. Used to read level stabilizers off the chain.
  static StabilizerChain from_generators(const std::vector<Permutation>& gens,
                                         std::vector<int> base);

  int degree() const { return degree_; }
  std::vector<int> base() const;
  std::vector<Permutation> strong_generators() const;
  BigInt order() const;
  std::optional<int> order_valuation(int p) const { return p_valuation(order(), p); }
  bool is_trivial() const;

  bool contains(const Permutation& x) const;
  // Enlarges the group by one generator, restoring the chain invariants.
  void insert(const Permutation& g);

  // Generators / order of the pointwise stabilizer of the first `prefix`
  // base points (the group G^{(prefix)} of the chain).
  std::vector<Permutation> stabilizer_generators(int prefix) const;
  BigInt stabilizer_order(int prefix) const;

  // All group elements in a deterministic order; throws if order > limit.
  std::vector<Permutation> elements(std::size_t limit = 1u << 20) const;

 private:
  struct Level {
    int beta = 0;
    std::vector<Permutation> gens;
    std::vector<int> orbit;                 // orbit[0] == beta
    std::vector<int> pos;                   // pos[point-1] = 1 + index, 0 = absent
    std::vector<Permutation> transversal;   // beta^{transversal[i]} == orbit[i]
    std::vector<std::pair<int, int>> pending;  // unprocessed (orbit idx, gen idx)
    std::size_t pending_head = 0;
  };

  std::pair<Permutation, int> sift_from(int level, Permutation x) const;
  void add_strong_generator(int entry_level, const Permutation& x);
  void add_gen_to_level(int level, const Permutation& g);
  void extend_orbit(int level, std::size_t first_new_gen);
  void append_point(Level& lv, int point, Permutation rep);
  void drain();

  int degree_;
  std::vector<Level> levels_;
  std::vector<int> prescribed_;
  std::size_t prescribed_next_ = 0;
};

/// A permutation group carried as an explicit generating set plus its chain.
struct PermGroup {
  std::vector<Permutation> generators;
  StabilizerChain chain;

  BigInt order() const { return chain.order(); }
  bool contains(const Permutation& x) const { return chain.contains(x); }
};

PermGroup make_group(std::vector<Permutation> generators);

// Smallest subgroup containing `seeds` and invariant under conjugation by the
// ambient generators. Seeds must lie in the ambient group.
PermGroup normal_closure(const PermGroup& ambient, const std::vector<Permutation>& seeds);

}  // namespace ggs
