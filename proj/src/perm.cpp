#include "ggslcs/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace ggs {

Permutation::Permutation(int degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n, 0);
  for (int v : images) {
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument("image list is not a bijection of {1..degree}");
    seen[v - 1] = 1;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (int k = 0; k < degree(); ++k)
    if (images_[k] != k + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (int k = 0; k < degree(); ++k) r.images_[images_[k] - 1] = k + 1;
  return r;
}

std::uint64_t Permutation::order() const {
  std::vector<char> seen(images_.size(), 0);
  std::uint64_t ord = 1;
  for (int k = 1; k <= degree(); ++k) {
    if (seen[k - 1]) continue;
    std::uint64_t len = 0;
    int q = k;
    do {
      seen[q - 1] = 1;
      q = images_[q - 1];
      ++len;
    } while (q != k);
    const std::uint64_t g = std::gcd(ord, len);
    if (len / g > 0 && ord > UINT64_MAX / (len / g))
      throw std::overflow_error("permutation order exceeds 64 bits");
    ord = ord / g * len;
  }
  return ord;
}

int Permutation::first_moved_point() const {
  for (int k = 1; k <= degree(); ++k)
    if (images_[k - 1] != k) return k;
  return 0;
}

Permutation compose(const Permutation& x, const Permutation& y) {
  if (x.degree() != y.degree())
    throw std::invalid_argument("compose: degree mismatch");
  Permutation r;
  r.images_.resize(x.images_.size());
  for (int k = 0; k < x.degree(); ++k) r.images_[k] = y.images_[x.images_[k] - 1];
  return r;
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  return compose(compose(g.inverse(), x), g);
}

Permutation commutator(const Permutation& x, const Permutation& y) {
  if (x.degree() != y.degree())
    throw std::invalid_argument("commutator: degree mismatch");
  return compose(compose(x.inverse(), y.inverse()), compose(x, y));
}

Permutation power(const Permutation& x, long long e) {
  Permutation base = e < 0 ? x.inverse() : x;
  if (e < 0) e = -e;
  Permutation r(x.degree());
  while (e > 0) {
    if (e & 1) r = compose(r, base);
    base = compose(base, base);
    e >>= 1;
  }
  return r;
}

}  // namespace ggs
