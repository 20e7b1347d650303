#pragma once

#include <vector>

namespace ggs {

/// Defining vector (e_1, ..., e_{p-1}) of a GGS group over F_p, together
/// with its derived invariants epsilon = sum e_i and delta = sum i e_i and
/// the classification flags that depend on them.
struct DefiningVector {
  int p = 0;
  std::vector<int> entries;  // residues in [0, p)
  int epsilon = 0;
  int delta = 0;
  bool is_constant = false;
  bool is_symmetric = false;
  bool is_periodic = false;  // epsilon == 0
  bool is_fg_type = false;   // epsilon != 0 and delta != 0
};

// Throws on the zero vector, a length other than p-1, or p not an odd prime.
DefiningVector classify_vector(int p, const std::vector<int>& entries);

}  // namespace ggs
