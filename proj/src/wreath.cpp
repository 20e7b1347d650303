#include "ggslcs/wreath.hpp"

#include <stdexcept>

#include "ggslcs/fp.hpp"

namespace ggs {

AlgebraElement::AlgebraElement(int p) : p_(p), c_(p, 0) {
  if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
}

AlgebraElement AlgebraElement::from_coefficients(int p, std::vector<int> c) {
  if (static_cast<int>(c.size()) != p)
    throw std::invalid_argument("algebra element needs p coefficients");
  AlgebraElement a(p);
  for (int i = 0; i < p; ++i) a.c_[i] = fp_norm(c[i], p);
  return a;
}

AlgebraElement AlgebraElement::x_minus_one(int p) {
  AlgebraElement a(p);
  a.c_[0] = p - 1;
  a.c_[1] = 1;
  return a;
}

bool AlgebraElement::is_zero() const {
  for (int v : c_)
    if (v != 0) return false;
  return true;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("algebra: prime mismatch");
  AlgebraElement r(a.p_);
  for (int i = 0; i < a.p_; ++i) r.c_[i] = (a.c_[i] + b.c_[i]) % a.p_;
  return r;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("algebra: prime mismatch");
  AlgebraElement r(a.p_);
  for (int i = 0; i < a.p_; ++i) r.c_[i] = (a.c_[i] - b.c_[i] + a.p_) % a.p_;
  return r;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("algebra: prime mismatch");
  AlgebraElement r(a.p_);
  for (int i = 0; i < a.p_; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < a.p_; ++j)
      r.c_[(i + j) % a.p_] = (r.c_[(i + j) % a.p_] + a.c_[i] * b.c_[j]) % a.p_;
  }
  return r;
}

int AlgebraElement::nilpotent_valuation() const {
  // rewrite in powers of Y = X - 1: coefficient of Y^j is sum_i c_i C(i, j)
  for (int j = 0; j < p_; ++j) {
    long long cj = 0;
    for (int i = j; i < p_; ++i) cj += static_cast<long long>(c_[i]) * binomial(i, j);
    if (fp_norm(cj, p_) != 0) return j;
  }
  return p_;
}

AlgebraElement theta(int p, const std::vector<int>& v) {
  return AlgebraElement::from_coefficients(p, v);
}

std::vector<int> theta_inverse(const AlgebraElement& a) { return a.coefficients(); }

std::vector<int> delta_map(const std::vector<int>& v, int p) {
  if (static_cast<int>(v.size()) != p)
    throw std::invalid_argument("delta_map: sequence needs p entries");
  std::vector<int> r(p);
  for (int i = 0; i < p; ++i) r[i] = fp_norm(v[(i + p - 1) % p] - v[i], p);
  return r;
}

std::vector<int> lambda_vector(int p, int i) {
  if (i < 1 || i > p) throw std::invalid_argument("lambda_vector: i out of range");
  std::vector<int> v(p, 0);
  for (int r = 0; r <= i - 1; ++r) {
    const int sign = (i - r - 1) % 2 == 0 ? 1 : -1;
    v[r] = fp_norm(sign * binomial(i - 1, r), p);
  }
  return v;
}

int gamma_level_field(const std::vector<int>& v, int p) {
  return 1 + theta(p, v).nilpotent_valuation();
}

std::vector<int> x_minus_one_power_coefficients(int p, int l) {
  if (l < 0 || l >= p) throw std::invalid_argument("x_minus_one_power: l out of range");
  std::vector<int> c(p, 0);
  for (int r = 0; r <= l; ++r) {
    const int sign = (l - r) % 2 == 0 ? 1 : -1;
    c[r] = fp_norm(sign * binomial(l, r), p);
  }
  return c;
}

std::vector<int> geometric_derivative_coefficients(int p, int l) {
  if (l < 0 || l >= p) throw std::invalid_argument("geometric_derivative: l out of range");
  std::vector<int> c(p, 0);
  for (int r = l; r < p; ++r) c[r - l] = falling_factorial_mod(r, l, p);
  return c;
}

namespace {

int linear_form(const std::vector<int>& coeffs, const std::vector<int>& v, int p) {
  long long s = 0;
  for (int i = 0; i < p; ++i) s += static_cast<long long>(coeffs[i]) * v[i];
  return fp_norm(s, p);
}

}  // namespace

bool satisfies_gamma_equations(const std::vector<int>& v, int p, int i, bool derivative_system) {
  if (static_cast<int>(v.size()) != p)
    throw std::invalid_argument("gamma equations: sequence needs p entries");
  if (i <= 1) return true;
  if (i >= p + 1) {
    for (int x : v)
      if (fp_norm(x, p) != 0) return false;
    return true;
  }
  if (derivative_system) {
    for (int l = 0; l <= i - 2; ++l)
      if (linear_form(geometric_derivative_coefficients(p, l), v, p) != 0) return false;
  } else {
    for (int l = p - i + 1; l <= p - 1; ++l)
      if (linear_form(x_minus_one_power_coefficients(p, l), v, p) != 0) return false;
  }
  return true;
}

int gamma_level_field_by_equations(const std::vector<int>& v, int p, bool derivative_system) {
  int level = 1;
  for (int i = 2; i <= p + 1; ++i) {
    if (!satisfies_gamma_equations(v, p, i, derivative_system)) break;
    level = i;
  }
  return level;
}

GroupTuple delta_map(const GroupTuple& t) {
  const int p = t.p();
  GroupTuple r;
  r.entries.reserve(p);
  for (int i = 0; i < p; ++i)
    r.entries.push_back(compose(t.entries[i].inverse(), t.entries[(i + p - 1) % p]));
  return r;
}

GroupTuple lambda_tuple(const Permutation& g, int p, int i) {
  if (i < 1 || i > p) throw std::invalid_argument("lambda_tuple: i out of range");
  GroupTuple t;
  t.entries.reserve(p);
  // signed integer exponents (-1)^{i-r-1} C(i-1, r), so the tuple equals the
  // iterated twist of (g, 1, ..., 1) for elements of any order
  for (int r = 0; r < p; ++r) {
    const long long exp =
        r <= i - 1 ? ((i - r - 1) % 2 == 0 ? 1 : -1) * binomial(i - 1, r) : 0;
    t.entries.push_back(power(g, exp));
  }
  return t;
}

GroupTuple reduce_to_first_component(const GroupTuple& t) {
  Permutation prod(t.entries.front().degree());
  for (const auto& g : t.entries) prod = compose(prod, g);
  GroupTuple r;
  r.entries.assign(t.entries.size(), Permutation(prod.degree()));
  r.entries[0] = std::move(prod);
  return r;
}

Permutation evaluate_word(const GroupTuple& t, const std::vector<int>& exponents, int p) {
  Permutation w(t.entries.front().degree());
  for (int i = 0; i < p; ++i) w = compose(w, power(t.entries[i], fp_norm(exponents[i], p)));
  return w;
}

bool wreath_membership(const GroupTuple& t, int k, const MembershipFn& in_gamma_j,
                       const MembershipFn& in_gamma_j_plus_1) {
  const int p = t.p();
  if (k < 1 || k > p + 1) throw std::invalid_argument("wreath_membership: k out of range");
  for (const auto& g : t.entries)
    if (!in_gamma_j(g))
      throw std::invalid_argument("wreath_membership: tuple entry outside gamma_j");
  if (k == p + 1) {
    // gamma_{jp+1}*(W(G)) is the base group over gamma_{j+1}(G)
    for (const auto& g : t.entries)
      if (!in_gamma_j_plus_1(g)) return false;
    return true;
  }
  for (int l = p - k + 1; l <= p - 1; ++l) {
    const Permutation w = evaluate_word(t, x_minus_one_power_coefficients(p, l), p);
    if (!in_gamma_j_plus_1(w)) return false;
  }
  return true;
}

Permutation sigma_block_rotation(int degree, int p) {
  std::vector<int> images(static_cast<std::size_t>(degree) * p);
  for (int b = 0; b < p; ++b)
    for (int k = 0; k < degree; ++k)
      images[b * degree + k] = ((b + 1) % p) * degree + k + 1;
  return Permutation::from_images(std::move(images));
}

std::vector<Permutation> wreath_perm_generators(const std::vector<Permutation>& g_gens,
                                                int degree, int p) {
  if (degree < 1) throw std::invalid_argument("wreath_perm_generators: degree must be >= 1");
  std::vector<Permutation> out;
  out.reserve(g_gens.size() + 1);
  for (const auto& g : g_gens) {
    if (g.degree() != degree)
      throw std::invalid_argument("wreath_perm_generators: generator degree mismatch");
    std::vector<int> images(static_cast<std::size_t>(degree) * p);
    for (int k = 0; k < degree; ++k) images[k] = g(k + 1);
    for (int k = degree; k < degree * p; ++k) images[k] = k + 1;
    out.push_back(Permutation::from_images(std::move(images)));
  }
  out.push_back(sigma_block_rotation(degree, p));
  return out;
}

Permutation tuple_to_permutation(const GroupTuple& t) {
  const int p = t.p();
  const int d = t.entries.front().degree();
  std::vector<int> images(static_cast<std::size_t>(d) * p);
  for (int b = 0; b < p; ++b) {
    if (t.entries[b].degree() != d)
      throw std::invalid_argument("tuple_to_permutation: entry degree mismatch");
    for (int k = 0; k < d; ++k) images[b * d + k] = b * d + t.entries[b](k + 1);
  }
  return Permutation::from_images(std::move(images));
}

GroupTuple tuple_from_sections(const SectionTuple& s) {
  if (s.root_label != 0)
    throw std::invalid_argument("tuple_from_sections: nontrivial root action");
  GroupTuple t;
  t.entries.reserve(s.sections.size());
  for (const auto& sec : s.sections) t.entries.push_back(sec.to_permutation());
  return t;
}

WreathSeriesPrediction wreath_lcs_closed_form(const LowerCentralSeries& series) {
  const int p = series.prime();
  const int c = series.nilpotency_class();
  // the construction needs elementary abelian lower central factors
  for (int j = 1; j <= c; ++j)
    for (const auto& h : series.term(j).generators)
      if (!series.term(j + 1).contains(power(h, p)))
        throw std::invalid_argument("wreath closed form: a lower central factor has exponent > p");

  WreathSeriesPrediction out;
  out.p = p;
  out.klass = static_cast<long long>(c) * p;
  out.star_exponents.resize(out.klass);
  out.generators.resize(out.klass);
  for (int j = 1; j <= c; ++j) {
    for (int k = 1; k <= p; ++k) {
      const long long i = static_cast<long long>(j - 1) * p + k;
      out.star_exponents[i - 1] = series.index_exponents()[j - 1];
      for (const auto& h : series.term(j).generators)
        out.generators[i - 1].push_back(lambda_tuple(h, p, k));
    }
  }
  return out;
}

std::vector<int> iterated_delta_p_minus_2(const std::vector<int>& v, int p) {
  if (static_cast<int>(v.size()) != p)
    throw std::invalid_argument("iterated_delta: sequence needs p entries");
  long long alpha = 0, beta = 0;
  for (int i = 0; i < p; ++i) {
    alpha += v[i];
    beta += static_cast<long long>(i) * v[i];
  }
  std::vector<int> r(p);
  for (int i = 0; i < p - 1; ++i) r[i] = fp_norm(-(i + 1) * alpha + beta, p);
  r[p - 1] = fp_norm(beta, p);
  return r;
}

}  // namespace ggs
