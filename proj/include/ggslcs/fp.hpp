#pragma once

#include <stdexcept>
#include <vector>

namespace ggs {

// Residues mod p are kept as ints in [0, p).
inline int fp_norm(long long v, int p) {
  long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

inline bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

// Exact C(n, k) for small n; the running product stays integral.
inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long c = 1;
  for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
  return c;
}

inline int binomial_mod(int n, int k, int p) {
  return fp_norm(binomial(n, k), p);
}

// r (r-1) ... (r-l+1) mod p.
inline int falling_factorial_mod(int r, int l, int p) {
  long long v = 1;
  for (int j = 0; j < l; ++j) v = v * fp_norm(r - j, p) % p;
  return static_cast<int>(v);
}

inline long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace ggs
