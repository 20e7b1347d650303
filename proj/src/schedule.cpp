#include "ggslcs/schedule.hpp"

#include <stdexcept>

#include "ggslcs/fp.hpp"

namespace ggs {

long long ell_value(int p, int m) {
  if (m < 0) throw std::invalid_argument("ell_value: m must be non-negative");
  if (m == 0) return 1;
  if (m == 1) return p;
  return p * (ell_value(p, m - 1) - 1) - 1;
}

long long r_value(int p, int m) {
  if (m < 0) throw std::invalid_argument("r_value: m must be non-negative");
  if (m == 0) return 2;
  if (m == 1) return p + 1;
  return p * (r_value(p, m - 1) - 1) - 1;
}

long long ell_closed_form(int p, int m) {
  if (m < 2) throw std::invalid_argument("ell_closed_form: m must be >= 2");
  long long s = 0;
  for (int i = 1; i <= m - 2; ++i) s += ipow(p, i);
  return ipow(p, m) - ipow(p, m - 1) - 2 * s - 1;
}

long long r_closed_form(int p, int m) {
  if (m < 2) throw std::invalid_argument("r_closed_form: m must be >= 2");
  return ell_closed_form(p, m) + ipow(p, m - 1);
}

long long nilpotency_class_value(int p, int n) {
  if (n < 2) throw std::invalid_argument("nilpotency_class_value: n must be >= 2");
  // c(n) = p^{n-1} - p^{n-3} - ... - p - 1; equivalently c(n) = p c(n-1) - 1
  long long c = ipow(p, n - 1);
  for (int i = 0; i <= n - 3; ++i) c -= ipow(p, i);
  return c;
}

IntervalSchedule interval_schedule(int p, int n) {
  if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (n < 3) throw std::invalid_argument("interval_schedule: defined for n >= 3");
  IntervalSchedule s;
  s.p = p;
  s.level = n;
  for (int m = 0; m <= n - 2; ++m) {
    s.ell.push_back(ell_value(p, m));
    s.r.push_back(r_value(p, m));
  }
  s.class_c = nilpotency_class_value(p, n);
  s.exponents.resize(s.class_c);
  s.generator_tags.resize(s.class_c);
  s.interval_m.assign(s.class_c, -1);
  for (long long i = 1; i <= s.class_c; ++i) {
    int in_m = -1;
    for (int m = 0; m <= n - 2; ++m)
      if (s.ell[m] <= i && i < s.r[m]) in_m = m;
    auto& tags = s.generator_tags[i - 1];
    tags.push_back("x(" + std::to_string(i) + ")");
    if (in_m >= 0) {
      s.exponents[i - 1] = 2;
      s.interval_m[i - 1] = in_m;
      tags.push_back("y_" + std::to_string(s.ell[in_m]) + "(" + std::to_string(i) + ")");
    } else {
      s.exponents[i - 1] = 1;
    }
  }
  return s;
}

}  // namespace ggs
