#pragma once

#include <functional>
#include <vector>

#include "ggslcs/lower_central.hpp"
#include "ggslcs/perm.hpp"
#include "ggslcs/portrait.hpp"

namespace ggs {

/// Element of F_p[X]/(X^p - 1), coefficients (c_0, ..., c_{p-1}) of
/// c_0 + c_1 X + ... + c_{p-1} X^{p-1}. A local ring: the maximal ideal is
/// generated by X - 1 and (X - 1)^p = 0.
class AlgebraElement {
 public:
  explicit AlgebraElement(int p);  // zero
  static AlgebraElement from_coefficients(int p, std::vector<int> c);
  static AlgebraElement x_minus_one(int p);

  int prime() const { return p_; }
  const std::vector<int>& coefficients() const { return c_; }
  bool is_zero() const;

  friend AlgebraElement operator+(const AlgebraElement&, const AlgebraElement&);
  friend AlgebraElement operator-(const AlgebraElement&, const AlgebraElement&);
  friend AlgebraElement operator*(const AlgebraElement&, const AlgebraElement&);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  // (X-1)-adic valuation in 0..p-1; p for the zero element.
  int nilpotent_valuation() const;

 private:
  int p_;
  std::vector<int> c_;
};

AlgebraElement theta(int p, const std::vector<int>& v);
std::vector<int> theta_inverse(const AlgebraElement& a);

// Delta = commutator with sigma. Additive form on F_p sequences and group
// form on tuples; both shift-and-divide: Delta(g)_i = g_i^{-1} g_{i-1 mod p}.
std::vector<int> delta_map(const std::vector<int>& v, int p);

// lambda_i = Delta^{i-1}(1, 0, ..., 0); entry r is (-1)^{i-r-1} C(i-1, r).
std::vector<int> lambda_vector(int p, int i);

// Largest i in 1..p+1 with v in γ_i*(W(F_p)): 1 + the (X-1)-adic valuation
// of theta(v).
int gamma_level_field(const std::vector<int>& v, int p);
// The same level decided by the homogeneous linear systems; with
// `derivative_system` the equations come from the derivatives of
// 1 + X + ... + X^{p-1} instead of the powers of X - 1.
int gamma_level_field_by_equations(const std::vector<int>& v, int p, bool derivative_system);
bool satisfies_gamma_equations(const std::vector<int>& v, int p, int i, bool derivative_system);

// coefficients of (X-1)^l, degree < p (no reduction needed for l < p)
std::vector<int> x_minus_one_power_coefficients(int p, int l);
// coefficients of the l-th derivative of 1 + X + ... + X^{p-1}
std::vector<int> geometric_derivative_coefficients(int p, int l);

/// Tuple (g_0, ..., g_{p-1}) in the base group of G wr <sigma>, entries
/// permutations of a common degree. Conjugation by sigma shifts entries:
/// (g_0, ..., g_{p-1})^sigma = (g_{p-1}, g_0, ..., g_{p-2}).
struct GroupTuple {
  std::vector<Permutation> entries;

  int p() const { return static_cast<int>(entries.size()); }
  friend bool operator==(const GroupTuple&, const GroupTuple&) = default;
};

GroupTuple delta_map(const GroupTuple& t);
GroupTuple lambda_tuple(const Permutation& g, int p, int i);
// (g_0 g_1 ... g_{p-1}, 1, ..., 1), congruent to t one wreath level down
GroupTuple reduce_to_first_component(const GroupTuple& t);

// word X_0^{f_0} ... X_{p-1}^{f_{p-1}} evaluated on the tuple, exponents as
// representatives in {0..p-1}
Permutation evaluate_word(const GroupTuple& t, const std::vector<int>& exponents, int p);

using MembershipFn = std::function<bool(const Permutation&)>;

// Decides t in γ_{(j-1)p+k}(W(G)) for a tuple with entries in γ_j(G),
// 1 <= k <= p+1, given membership tests for γ_j(G) and γ_{j+1}(G).
bool wreath_membership(const GroupTuple& t, int k, const MembershipFn& in_gamma_j,
                       const MembershipFn& in_gamma_j_plus_1);

// Imprimitive wreath product W(G) = G wr <sigma> on p blocks of size
// `degree`: each G generator acting on block 0 plus the block rotation.
std::vector<Permutation> wreath_perm_generators(const std::vector<Permutation>& g_gens,
                                                int degree, int p);
Permutation sigma_block_rotation(int degree, int p);
Permutation tuple_to_permutation(const GroupTuple& t);
GroupTuple tuple_from_sections(const SectionTuple& s);  // 1-indexed -> 0-indexed adapter

/// Closed-form lower central series of W(G) derived from the series of G:
/// the index at i = (j-1)p + k equals the index at j in G, the class is
/// p times the class of G, and γ_i*/γ_{i+1}* is generated by the
/// lambda_k-tuples of the γ_j generators. star_exponents[i-1] describes
/// γ_i* : γ_{i+1}* (γ_1* is the base group, so the plain γ_1 : γ_2 index
/// carries one extra factor p for the rotation).
struct WreathSeriesPrediction {
  int p = 0;
  long long klass = 0;
  std::vector<int> star_exponents;
  std::vector<std::vector<GroupTuple>> generators;  // entry i-1 for index i
};

// Requires every lower central factor of G to have exponent p.
WreathSeriesPrediction wreath_lcs_closed_form(const LowerCentralSeries& series);

// Closed form for Delta^{p-2} on F_p sequences:
// (-alpha + beta, -2 alpha + beta, ..., -(p-1) alpha + beta, beta) with
// alpha = sum v_i and beta = sum i v_i.
std::vector<int> iterated_delta_p_minus_2(const std::vector<int>& v, int p);

}  // namespace ggs
