#include "ggslcs/defining_vector.hpp"

#include <stdexcept>

#include "ggslcs/fp.hpp"

namespace ggs {

DefiningVector classify_vector(int p, const std::vector<int>& entries) {
  if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (static_cast<int>(entries.size()) != p - 1)
    throw std::invalid_argument("defining vector needs p-1 entries");
  DefiningVector e;
  e.p = p;
  e.entries.reserve(entries.size());
  for (int v : entries) e.entries.push_back(fp_norm(v, p));

  bool all_zero = true;
  for (int v : e.entries) all_zero = all_zero && v == 0;
  if (all_zero) throw std::invalid_argument("defining vector must be nonzero");

  long long eps = 0, del = 0;
  for (int i = 1; i <= p - 1; ++i) {
    eps += e.entries[i - 1];
    del += static_cast<long long>(i) * e.entries[i - 1];
  }
  e.epsilon = fp_norm(eps, p);
  e.delta = fp_norm(del, p);

  e.is_constant = true;
  for (int v : e.entries) e.is_constant = e.is_constant && v == e.entries[0];
  e.is_symmetric = true;
  for (int i = 1; i <= p - 1; ++i)
    e.is_symmetric = e.is_symmetric && e.entries[i - 1] == e.entries[p - 1 - i];
  e.is_periodic = e.epsilon == 0;
  e.is_fg_type = e.epsilon != 0 && e.delta != 0;
  return e;
}

}  // namespace ggs
