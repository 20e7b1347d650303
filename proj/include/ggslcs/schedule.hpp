#pragma once

#include <string>
#include <vector>

namespace ggs {

// The sequences l(m), r(m) delimiting the p^2- and p-intervals of the lower
// central series, and the nilpotency class c(n) of the level-n quotient.
long long ell_value(int p, int m);
long long r_value(int p, int m);
long long ell_closed_form(int p, int m);  // m >= 2
long long r_closed_form(int p, int m);    // m >= 2
long long nilpotency_class_value(int p, int n);  // c(n), n >= 2

/// Predicted shape of the lower central series of the level-n congruence
/// quotient of an FG-type group: per index i <= c(n), the exponent
/// log_p |γ_i : γ_{i+1}| and the words generating γ_i modulo γ_{i+1}.
struct IntervalSchedule {
  int p = 0;
  int level = 0;
  std::vector<long long> ell;  // l(0) .. l(n-2)
  std::vector<long long> r;    // r(0) .. r(n-2)
  long long class_c = 0;
  std::vector<int> exponents;                       // entry i-1 for index i
  std::vector<std::vector<std::string>> generator_tags;  // "x(i)" / "y_j(i)"
  // for exponent-2 indices, the m with l(m) <= i < r(m); -1 otherwise
  std::vector<int> interval_m;
};

// Defined for n >= 3; the n = 2 quotients follow the maximal class pattern
// and are handled by the named checks directly.
IntervalSchedule interval_schedule(int p, int n);

}  // namespace ggs
