#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace ggs {

/// Permutation of {1..degree}. Composition is read left to right:
/// compose(x, y) applies x first, so compose(x, y)(k) = y(x(k)).
/// Elements therefore act on the right, and x^g means g^{-1} x g.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity
  static Permutation from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::uint64_t order() const;
  // smallest moved point, or 0 for the identity
  int first_moved_point() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend Permutation compose(const Permutation& x, const Permutation& y);

 private:
  std::vector<int> images_;
};

Permutation compose(const Permutation& x, const Permutation& y);
inline Permutation operator*(const Permutation& x, const Permutation& y) {
  return compose(x, y);
}

Permutation conjugate(const Permutation& x, const Permutation& g);
// [x, y] = x^{-1} y^{-1} x y
Permutation commutator(const Permutation& x, const Permutation& y);
Permutation power(const Permutation& x, long long e);

}  // namespace ggs
