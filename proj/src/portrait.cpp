#include "ggslcs/portrait.hpp"

#include <stdexcept>

#include "ggslcs/fp.hpp"

namespace ggs {

namespace {

// internal vertices of levels 0..depth-1
int internal_count(int p, int depth) {
  int n = 0, pw = 1;
  for (int m = 0; m < depth; ++m) {
    n += pw;
    pw *= p;
  }
  return n;
}

}  // namespace

int tree_vertex_count(int p, int levels) {
  int n = 0, pw = p;
  for (int m = 1; m <= levels; ++m) {
    n += pw;
    pw *= p;
  }
  return n;
}

Portrait::Portrait(int p, int depth) : p_(p), depth_(depth) {
  if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (depth < 0) throw std::invalid_argument("depth must be non-negative");
  labels_.assign(internal_count(p, depth), 0);
}

int Portrait::internal_id(int level, int rank) const {
  // (p^level - 1)/(p - 1) + rank
  int off = 0, pw = 1;
  for (int m = 0; m < level; ++m) {
    off += pw;
    pw *= p_;
  }
  return off + rank;
}

Portrait Portrait::generator_a(int p, int depth) {
  if (depth < 1) throw std::invalid_argument("generator_a: depth must be >= 1");
  Portrait a(p, depth);
  a.labels_[0] = 1;
  return a;
}

Portrait Portrait::generator_b(int p, const std::vector<int>& entries, int depth) {
  if (depth < 1) throw std::invalid_argument("generator_b: depth must be >= 1");
  if (static_cast<int>(entries.size()) != p - 1)
    throw std::invalid_argument("generator_b: defining vector needs p-1 entries");
  Portrait b(p, depth);
  // The section at vertex j < p is a^{e_j} and the section at vertex p is b
  // again, so the nonzero labels sit at the vertices p^k j along the spine.
  long long spine_rank = 0;  // rank of the level-k vertex p...p
  for (int k = 0; k + 1 < depth; ++k) {
    for (int j = 1; j < p; ++j) {
      const long long rank = spine_rank * p + (j - 1);
      b.labels_[b.internal_id(k + 1, static_cast<int>(rank))] = fp_norm(entries[j - 1], p);
    }
    spine_rank = spine_rank * p + (p - 1);
  }
  return b;
}

bool Portrait::is_identity() const {
  for (int v : labels_)
    if (v != 0) return false;
  return true;
}

int Portrait::apply(int level, int rank) const {
  // walk the original path, twisting each letter by the label of its prefix
  int out = 0;
  int prefix = 0;  // rank of the original prefix, also its internal id offsetless
  int pw = 1;
  for (int k = 1; k < level; ++k) pw *= p_;
  int rest = rank;
  for (int k = 0; k < level; ++k) {
    const int digit = rest / pw;
    rest %= pw;
    const int twisted = (digit + labels_[internal_id(k, prefix)]) % p_;
    out = out * p_ + twisted;
    prefix = prefix * p_ + digit;
    pw /= p_;
  }
  return out;
}

Portrait Portrait::inverse() const {
  Portrait r(p_, depth_);
  for (int m = 0; m < depth_; ++m) {
    int count = 1;
    for (int k = 0; k < m; ++k) count *= p_;
    for (int rank = 0; rank < count; ++rank)
      r.labels_[internal_id(m, apply(m, rank))] = (p_ - labels_[internal_id(m, rank)]) % p_;
  }
  return r;
}

Portrait multiply(const Portrait& x, const Portrait& y) {
  if (x.p_ != y.p_ || x.depth_ != y.depth_)
    throw std::invalid_argument("multiply: portrait shape mismatch");
  Portrait r(x.p_, x.depth_);
  // local action of xy at v is sigma^{label_x(v)} sigma^{label_y(v^x)}
  for (int m = 0; m < x.depth_; ++m) {
    int count = 1;
    for (int k = 0; k < m; ++k) count *= x.p_;
    for (int rank = 0; rank < count; ++rank) {
      const int id = x.internal_id(m, rank);
      r.labels_[id] = (x.labels_[id] + y.labels_[y.internal_id(m, x.apply(m, rank))]) % x.p_;
    }
  }
  return r;
}

Permutation Portrait::to_permutation() const {
  if (depth_ < 1) throw std::invalid_argument("to_permutation: depth must be >= 1");
  int leaves = 1;
  for (int k = 0; k < depth_; ++k) leaves *= p_;
  std::vector<int> images(leaves);
  for (int rank = 0; rank < leaves; ++rank) images[rank] = apply(depth_, rank) + 1;
  return Permutation::from_images(std::move(images));
}

Permutation Portrait::to_permutation_all_levels() const {
  std::vector<int> images;
  images.reserve(tree_vertex_count(p_, depth_));
  int offset = 0, count = 1;
  for (int m = 1; m <= depth_; ++m) {
    count *= p_;
    for (int rank = 0; rank < count; ++rank) images.push_back(offset + apply(m, rank) + 1);
    offset += count;
  }
  return Permutation::from_images(std::move(images));
}

Portrait Portrait::from_leaf_permutation(int p, int depth, const Permutation& leaves) {
  Portrait f(p, depth);
  int leaf_count = 1;
  for (int k = 0; k < depth; ++k) leaf_count *= p;
  if (leaves.degree() != leaf_count)
    throw std::invalid_argument("from_leaf_permutation: degree is not p^depth");
  // Recover labels level by level: the image of the first leaf below v . 1
  // reveals the twist applied at v. Verified wholesale at the end.
  int block = leaf_count;  // leaves below one level-m vertex
  int count = 1;
  for (int m = 0; m < depth; ++m) {
    for (int rank = 0; rank < count; ++rank) {
      const int image_leaf = leaves(rank * block + 1) - 1;
      f.labels_[f.internal_id(m, rank)] = image_leaf / (block / p) % p;
    }
    count *= p;
    block /= p;
  }
  if (f.to_permutation() != leaves)
    throw std::invalid_argument("from_leaf_permutation: not a tree automorphism over <sigma>");
  return f;
}

SectionTuple Portrait::psi_decompose() const {
  if (depth_ < 1) throw std::invalid_argument("psi_decompose: depth must be >= 1");
  SectionTuple t;
  t.root_label = labels_[0];
  t.sections.reserve(p_);
  for (int x = 0; x < p_; ++x) {
    Portrait s(p_, depth_ - 1);
    int count = 1;
    for (int m = 0; m < depth_ - 1; ++m) {
      for (int rank = 0; rank < count; ++rank)
        s.labels_[s.internal_id(m, rank)] = labels_[internal_id(m + 1, x * count + rank)];
      count *= p_;
    }
    t.sections.push_back(std::move(s));
  }
  return t;
}

Portrait Portrait::from_sections(const SectionTuple& t) {
  if (t.sections.empty()) throw std::invalid_argument("from_sections: empty tuple");
  const int p = t.sections.front().prime();
  if (static_cast<int>(t.sections.size()) != p)
    throw std::invalid_argument("from_sections: tuple needs p sections");
  const int d = t.sections.front().depth();
  Portrait f(p, d + 1);
  f.labels_[0] = fp_norm(t.root_label, p);
  for (int x = 0; x < p; ++x) {
    const Portrait& s = t.sections[x];
    if (s.prime() != p || s.depth() != d)
      throw std::invalid_argument("from_sections: section shape mismatch");
    int count = 1;
    for (int m = 0; m < d; ++m) {
      for (int rank = 0; rank < count; ++rank)
        f.labels_[f.internal_id(m + 1, x * count + rank)] = s.labels_[s.internal_id(m, rank)];
      count *= p;
    }
  }
  return f;
}

SectionTuple commutator_with_a_sections(const Portrait& f) {
  if (!f.stabilizes_level_one())
    throw std::invalid_argument("commutator_with_a_sections: f must fix level one");
  SectionTuple s = f.psi_decompose();
  const int p = f.prime();
  SectionTuple out;
  out.root_label = 0;
  out.sections.reserve(p);
  for (int x = 0; x < p; ++x) {
    const Portrait& prev = s.sections[(x + p - 1) % p];
    out.sections.push_back(multiply(s.sections[x].inverse(), prev));
  }
  return out;
}

}  // namespace ggs
