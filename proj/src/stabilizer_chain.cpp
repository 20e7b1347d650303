#include "ggslcs/stabilizer_chain.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ggs {

std::optional<int> p_valuation(BigInt n, int p) {
  if (n <= 0) return std::nullopt;
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  if (n != 1) return std::nullopt;
  return v;
}

StabilizerChain::StabilizerChain(int degree) : degree_(degree) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
}

StabilizerChain StabilizerChain::from_generators(const std::vector<Permutation>& gens) {
  return from_generators(gens, {});
}

StabilizerChain StabilizerChain::from_generators(const std::vector<Permutation>& gens,
                                                 std::vector<int> base) {
  if (gens.empty()) throw std::invalid_argument("empty generating set");
  StabilizerChain c(gens.front().degree());
  c.prescribed_ = std::move(base);
  for (const auto& g : gens) c.insert(g);
  return c;
}

std::vector<int> StabilizerChain::base() const {
  std::vector<int> b;
  b.reserve(levels_.size());
  for (const auto& lv : levels_) b.push_back(lv.beta);
  return b;
}

std::vector<Permutation> StabilizerChain::strong_generators() const {
  // level 0 holds every strong generator
  return levels_.empty() ? std::vector<Permutation>{} : levels_[0].gens;
}

BigInt StabilizerChain::order() const { return stabilizer_order(0); }

BigInt StabilizerChain::stabilizer_order(int prefix) const {
  BigInt n = 1;
  for (std::size_t j = static_cast<std::size_t>(prefix); j < levels_.size(); ++j)
    n *= static_cast<unsigned>(levels_[j].orbit.size());
  return n;
}

bool StabilizerChain::is_trivial() const { return order() == 1; }

std::pair<Permutation, int> StabilizerChain::sift_from(int level, Permutation x) const {
  for (std::size_t j = static_cast<std::size_t>(level); j < levels_.size(); ++j) {
    if (x.is_identity()) return {std::move(x), static_cast<int>(j)};
    const Level& lv = levels_[j];
    const int q = x(lv.beta);
    if (q == lv.beta) continue;
    const int idx = lv.pos[q - 1];
    if (idx == 0) return {std::move(x), static_cast<int>(j)};
    x = compose(x, lv.transversal[idx - 1].inverse());
  }
  return {std::move(x), static_cast<int>(levels_.size())};
}

bool StabilizerChain::contains(const Permutation& x) const {
  if (x.degree() != degree_) throw std::invalid_argument("contains: degree mismatch");
  return sift_from(0, x).first.is_identity();
}

void StabilizerChain::append_point(Level& lv, int point, Permutation rep) {
  lv.orbit.push_back(point);
  lv.transversal.push_back(std::move(rep));
  lv.pos[point - 1] = static_cast<int>(lv.orbit.size());
  // schedule Schreier pairs for the new point against all current generators
  const int qi = static_cast<int>(lv.orbit.size()) - 1;
  for (int gi = 0; gi < static_cast<int>(lv.gens.size()); ++gi)
    lv.pending.emplace_back(qi, gi);
}

void StabilizerChain::extend_orbit(int level, std::size_t first_new_gen) {
  Level& lv = levels_[level];
  const std::size_t old_size = lv.orbit.size();
  for (std::size_t qi = 0; qi < old_size; ++qi)
    for (std::size_t gi = first_new_gen; gi < lv.gens.size(); ++gi) {
      const int r = lv.gens[gi](lv.orbit[qi]);
      if (lv.pos[r - 1] == 0) append_point(lv, r, compose(lv.transversal[qi], lv.gens[gi]));
    }
  for (std::size_t qi = old_size; qi < lv.orbit.size(); ++qi)
    for (std::size_t gi = 0; gi < lv.gens.size(); ++gi) {
      const int r = lv.gens[gi](lv.orbit[qi]);
      if (lv.pos[r - 1] == 0) append_point(lv, r, compose(lv.transversal[qi], lv.gens[gi]));
    }
}

void StabilizerChain::add_gen_to_level(int level, const Permutation& g) {
  Level& lv = levels_[level];
  // Schreier pairs of the existing orbit against the new generator; points
  // appended afterwards pick up all generators in append_point.
  const int gi = static_cast<int>(lv.gens.size());
  for (int qi = 0; qi < static_cast<int>(lv.orbit.size()); ++qi)
    lv.pending.emplace_back(qi, gi);
  lv.gens.push_back(g);
  extend_orbit(level, lv.gens.size() - 1);
}

void StabilizerChain::add_strong_generator(int entry_level, const Permutation& x) {
  auto [h, m] = sift_from(entry_level, x);
  if (h.is_identity()) return;
  if (m == static_cast<int>(levels_.size())) {
    // h fixes the whole current base; extend it
    while (true) {
      int beta;
      if (prescribed_next_ < prescribed_.size()) {
        beta = prescribed_[prescribed_next_++];
      } else {
        beta = h.first_moved_point();
      }
      Level lv;
      lv.beta = beta;
      lv.pos.assign(degree_, 0);
      lv.orbit.push_back(beta);
      lv.pos[beta - 1] = 1;
      lv.transversal.emplace_back(degree_);
      levels_.push_back(std::move(lv));
      if (h(beta) != beta) break;
    }
    m = static_cast<int>(levels_.size()) - 1;
  }
  // h fixes base[0..m-1] and moves base[m]: it is a strong generator for
  // levels 0..m
  for (int j = 0; j <= m; ++j) add_gen_to_level(j, h);
}

void StabilizerChain::drain() {
  while (true) {
    int l = -1;
    for (int j = static_cast<int>(levels_.size()) - 1; j >= 0; --j) {
      if (levels_[j].pending_head < levels_[j].pending.size()) {
        l = j;
        break;
      }
    }
    if (l < 0) return;
    Level& lv = levels_[l];
    const auto [qi, gi] = lv.pending[lv.pending_head++];
    const Permutation& s = lv.gens[gi];
    const int r = s(lv.orbit[qi]);
    const int ri = lv.pos[r - 1] - 1;
    Permutation sg = compose(compose(lv.transversal[qi], s), lv.transversal[ri].inverse());
    if (!sg.is_identity()) add_strong_generator(l + 1, sg);
  }
}

void StabilizerChain::insert(const Permutation& g) {
  if (g.degree() != degree_) throw std::invalid_argument("insert: degree mismatch");
  add_strong_generator(0, g);
  drain();
}

std::vector<Permutation> StabilizerChain::stabilizer_generators(int prefix) const {
  if (prefix >= static_cast<int>(levels_.size())) return {};
  return levels_[prefix].gens;
}

std::vector<Permutation> StabilizerChain::elements(std::size_t limit) const {
  if (order() > limit) throw std::length_error("group too large to enumerate");
  std::vector<Permutation> out{Permutation(degree_)};
  for (int j = static_cast<int>(levels_.size()) - 1; j >= 0; --j) {
    std::vector<Permutation> next;
    next.reserve(out.size() * levels_[j].transversal.size());
    for (const auto& deep : out)
      for (const auto& u : levels_[j].transversal) next.push_back(compose(deep, u));
    out = std::move(next);
  }
  return out;
}

PermGroup make_group(std::vector<Permutation> generators) {
  StabilizerChain chain = StabilizerChain::from_generators(generators);
  return PermGroup{std::move(generators), std::move(chain)};
}

PermGroup normal_closure(const PermGroup& ambient, const std::vector<Permutation>& seeds) {
  if (seeds.empty()) throw std::invalid_argument("normal_closure: empty seed set");
  const int degree = seeds.front().degree();
  for (const auto& s : seeds)
    if (!ambient.contains(s))
      throw std::invalid_argument("normal_closure: seed outside the ambient group");

  StabilizerChain chain(degree);
  std::vector<Permutation> added;
  std::vector<Permutation> queue(seeds.begin(), seeds.end());
  std::size_t head = 0;
  while (head < queue.size()) {
    Permutation x = queue[head++];
    if (x.is_identity() || chain.contains(x)) continue;
    chain.insert(x);
    for (const auto& g : ambient.generators) queue.push_back(conjugate(x, g));
    added.push_back(std::move(x));
  }
  if (added.empty()) {
    // all seeds trivial: the closure is the trivial group
    return PermGroup{{}, std::move(chain)};
  }
  return PermGroup{std::move(added), std::move(chain)};
}

}  // namespace ggs
