#include "ggslcs/checks.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "ggslcs/congruence_quotient.hpp"
#include "ggslcs/fp.hpp"
#include "ggslcs/lower_central.hpp"
#include "ggslcs/schedule.hpp"
#include "ggslcs/wreath.hpp"

namespace ggs {

namespace {

class Recorder {
 public:
  Recorder(std::string name, const DefiningVector& e, int level) {
    result_.check_name = std::move(name);
    result_.p = e.p;
    result_.vector_entries = e.entries;
    result_.level = level;
    start_ = std::chrono::steady_clock::now();
  }

  template <typename T, typename U>
  void expect_eq(const std::string& name, const T& expected, const U& computed) {
    std::ostringstream se, sc;
    se << expected;
    sc << computed;
    const bool ok = se.str() == sc.str();
    result_.details.push_back({name, ok, se.str(), sc.str()});
  }

  void expect_true(const std::string& name, bool ok) {
    result_.details.push_back({name, ok, "true", ok ? "true" : "false"});
  }

  CheckResult finish() {
    result_.passed = true;
    for (const auto& d : result_.details) result_.passed = result_.passed && d.passed;
    result_.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start_)
                             .count();
    return std::move(result_);
  }

 private:
  CheckResult result_;
  std::chrono::steady_clock::time_point start_;
};

std::string join_ints(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

// Number of distinct cosets of `modulus` among the products of the given
// elements with exponents in 0..p-1. Small ranks only; this is the
// quotient-generation certificate.
int coset_span(const StabilizerChain& modulus, const std::vector<Permutation>& elems, int p) {
  std::vector<Permutation> reps{Permutation(modulus.degree())};
  std::vector<Permutation> products{Permutation(modulus.degree())};
  for (const auto& g : elems) {
    std::vector<Permutation> next;
    for (const auto& w : products)
      for (int s = 0; s < p; ++s) next.push_back(compose(w, power(g, s)));
    products = std::move(next);
  }
  for (const auto& w : products) {
    bool fresh = true;
    for (const auto& r : reps)
      if (modulus.contains(compose(w, r.inverse()))) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(w);
  }
  return static_cast<int>(reps.size());
}

bool groups_equal(const PermGroup& x, const PermGroup& y) {
  if (x.order() != y.order()) return false;
  for (const auto& g : x.generators)
    if (!y.contains(g)) return false;
  for (const auto& g : y.generators)
    if (!x.contains(g)) return false;
  return true;
}

// γ_i = <elems> γ_{i+1} with |γ_i : γ_{i+1}| = p^exponent: membership of
// every element in γ_i, exclusion from γ_{i+1}, pairwise independence, and
// the coset count certificate.
void record_generation_claim(Recorder& rec, const std::string& label, const PermGroup& gamma_i,
                             const PermGroup& gamma_i1, std::vector<Permutation> elems,
                             int exponent, int p) {
  for (const auto& g : elems) rec.expect_true(label + " generators lie in the term",
                                              gamma_i.contains(g));
  if (exponent > 0)
    for (const auto& g : elems)
      rec.expect_true(label + " generator nontrivial in the quotient", !gamma_i1.contains(g));
  if (elems.size() == 2 && exponent == 2) {
    // y x^{-s} stays outside the next term for every s
    bool independent = true;
    for (int s = 0; s < p; ++s)
      independent = independent &&
                    !gamma_i1.contains(compose(elems[1], power(elems[0], s).inverse()));
    rec.expect_true(label + " generators independent", independent);
  }
  rec.expect_eq(label + " coset span", ipow(p, exponent),
                coset_span(gamma_i1.chain, elems, p));
}

PermGroup derived_subgroup(const PermGroup& g) { return central_commutator_step(g, g); }

Portrait portrait_commutator(const Portrait& x, const Portrait& y) {
  return multiply(multiply(x.inverse(), y.inverse()), multiply(x, y));
}

}  // namespace

CheckResult check_theorem_2_1(const DefiningVector& e, int n) {
  if (e.is_periodic) throw PreconditionError("theorem-2-1 needs a non-periodic vector");
  if (n < 1) throw PreconditionError("theorem-2-1 needs n >= 1");
  Recorder rec("theorem-2-1", e, n);
  const int p = e.p;
  const CongruenceQuotient G(e, n);

  rec.expect_eq("order of a^eps b", ipow(p, n), compose(power(G.gen_a(), e.epsilon), G.gen_b()).order());

  if (n >= 2) {
    // descent K_0 = St(n-1), K_{i+1} = <[K_i, G_n]>^{G_n}: every index p
    const Permutation t = G.a_eps_b();
    std::vector<PermGroup> K;
    K.push_back(G.level_stabilizer(n - 1));
    const auto val0 = K[0].chain.order_valuation(p);
    rec.expect_true("St(n-1) order is a p-power", val0.has_value());
    while (K.back().order() > 1) K.push_back(central_commutator_step(G.group(), K.back()));
    rec.expect_eq("uniserial chain length", val0 ? *val0 : -1,
                  static_cast<int>(K.size()) - 1);
    for (std::size_t i = 0; i + 1 < K.size(); ++i)
      rec.expect_eq("index K_" + std::to_string(i) + " : K_" + std::to_string(i + 1), p,
                    K[i].order() / K[i + 1].order());

    // [h, a^eps b, ...(i)...] generates K_i modulo K_{i+1}
    Permutation h;
    for (const auto& g : K[0].generators)
      if (!K[1].contains(g)) {
        h = g;
        break;
      }
    rec.expect_true("found a generator of St(n-1) modulo K_1", h.degree() > 0);
    if (h.degree() > 0) {
      Permutation w = h;
      for (std::size_t i = 1; i + 1 < K.size(); ++i) {
        w = commutator(w, t);
        rec.expect_true("[h,a^eps b,..(" + std::to_string(i) + ")..] lies in K_" + std::to_string(i),
                        K[i].contains(w));
        rec.expect_true("[h,a^eps b,..(" + std::to_string(i) + ")..] outside K_" + std::to_string(i + 1),
                        !K[i + 1].contains(w));
      }
    }

    // sections of the deepest stabilizer land one level down
    if (n >= 3) {
      const CongruenceQuotient H(e, n - 1);
      bool sections_ok = true;
      for (const auto& g : K[0].generators) {
        const Portrait f = Portrait::from_leaf_permutation(p, n, g);
        sections_ok = sections_ok && f.stabilizes_level_one();
        for (const auto& s : f.psi_decompose().sections)
          sections_ok =
              sections_ok && H.level_stabilizer(n - 2).contains(s.to_permutation());
      }
      rec.expect_true("psi(St(n-1)) sections lie in St(n-2) one level down", sections_ok);
    }

    // at n = 3 the deepest stabilizer decomposes as the p-fold product of
    // the derived subgroup one level down
    if (n == 3) {
      const CongruenceQuotient G2(e, 2);
      const PermGroup d2 = derived_subgroup(G2.group());
      bool sections_in_derived = true;
      for (const auto& g : K[0].generators) {
        const Portrait f = Portrait::from_leaf_permutation(p, 3, g);
        for (const auto& s : f.psi_decompose().sections)
          sections_in_derived = sections_in_derived && d2.contains(s.to_permutation());
      }
      rec.expect_true("psi(St(2)) sections lie in the derived subgroup", sections_in_derived);
      BigInt expected = 1;
      for (int i = 0; i < p; ++i) expected *= d2.order();
      rec.expect_eq("|St(2)| = |G_2'|^p", expected, K[0].order());
      bool embeds = true;
      for (const auto& hgen : d2.generators)
        for (int slot = 0; slot < p; ++slot) {
          GroupTuple tup;
          tup.entries.assign(p, Permutation(hgen.degree()));
          tup.entries[slot] = hgen;
          embeds = embeds && K[0].contains(tuple_to_permutation(tup));
        }
      rec.expect_true("every coordinate copy of G_2' embeds in St(2)", embeds);
    }
  }
  return rec.finish();
}

CheckResult check_theorem_4_1(const DefiningVector& e) {
  if (e.is_periodic) throw PreconditionError("theorem-4-1 needs a non-periodic vector");
  Recorder rec("theorem-4-1", e, 2);
  const int p = e.p;
  const CongruenceQuotient G(e, 2);
  const LowerCentralSeries series = lower_central_series(G.group(), p);

  std::vector<int> expected(p, 1);
  expected[0] = 2;
  rec.expect_eq("index exponents", join_ints(expected), join_ints(series.index_exponents()));
  rec.expect_eq("nilpotency class", p, series.nilpotency_class());
  for (int i = 2; i <= series.nilpotency_class(); ++i)
    record_generation_claim(rec, "i=" + std::to_string(i), series.term(i), series.term(i + 1),
                            {G.x_word(i)}, 1, p);
  return rec.finish();
}

CheckResult check_lemma_4_3(const DefiningVector& e) {
  Recorder rec("lemma-4-3", e, 3);
  const int p = e.p;
  const Portrait a = Portrait::generator_a(p, 3);
  const Portrait b = Portrait::generator_b(p, e.entries, 3);
  Portrait g = b;
  for (int k = 0; k < p - 2; ++k) g = portrait_commutator(g, a);
  const SectionTuple sections = g.psi_decompose();

  const CongruenceQuotient G2(e, 2);
  const PermGroup d2 = derived_subgroup(G2.group());
  const Permutation a2 = G2.gen_a();
  const Permutation b2 = G2.gen_b();
  const auto entry = [&](int a_exp, int b_exp) {
    return compose(power(a2, fp_norm(a_exp, p)), power(b2, fp_norm(b_exp, p)));
  };

  // (a^{d-2e} b^{-2}, ..., a^{d-(p-1)e} b^{-(p-1)}, a^d, a^{d-e} b^{-1})
  for (int x = 1; x <= p; ++x) {
    Permutation stated;
    if (x <= p - 2)
      stated = entry(e.delta - (x + 1) * e.epsilon, -(x + 1));
    else if (x == p - 1)
      stated = entry(e.delta, 0);
    else
      stated = entry(e.delta - e.epsilon, -1);
    const Permutation section = sections.sections[x - 1].to_permutation();
    rec.expect_true("section " + std::to_string(x) + " matches modulo G_2'",
                    d2.contains(compose(section, stated.inverse())));
  }
  return rec.finish();
}

CheckResult check_lemma_4_4(const DefiningVector& e, int i_max) {
  if (!e.is_fg_type) throw PreconditionError("lemma-4-4 needs an FG-type vector");
  Recorder rec("lemma-4-4", e, 3);
  const int p = e.p;
  const CongruenceQuotient G(e, 3);
  const LowerCentralSeries series = lower_central_series(G.group(), p);
  const int c = series.nilpotency_class();  // p^2 - 1
  if (i_max < 1) i_max = p * p - p;
  i_max = std::min(i_max, p * p - p);

  std::vector<PermGroup> K;
  K.push_back(G.level_stabilizer(2));
  for (int i = 1; i <= i_max; ++i) {
    K.push_back(central_commutator_step(G.group(), K.back()));
    const PermGroup& gamma = p + i <= c ? series.term(p + i) : series.term(c + 1);
    rec.expect_true("gamma_{p+" + std::to_string(i) + "} equals [St(2),G,..(" +
                        std::to_string(i) + ")..,G]",
                    groups_equal(gamma, K.back()));
  }

  // St(2) = <[b, a^eps b, ...(p-2)..., a^eps b, b]> gamma_{p+1}
  const Permutation w = G.y_word(p, p);
  rec.expect_eq("|St(2) : gamma_{p+1}|", p,
                G.level_stabilizer(2).order() / series.term(p + 1).order());
  rec.expect_true("[b,a^eps b,..,b] lies in St(2)", G.level_stabilizer(2).contains(w));
  rec.expect_eq("[b,a^eps b,..,b] coset span modulo gamma_{p+1}", p,
                coset_span(series.term(p + 1).chain, {w}, p));

  // gamma_{p+i} = <x(p+i)> gamma_{p+i+1}
  for (int i = 1; i <= i_max && p + i <= c; ++i)
    record_generation_claim(rec, "i=" + std::to_string(p + i), series.term(p + i),
                            series.term(p + i + 1), {G.x_word(p + i)}, 1, p);
  return rec.finish();
}

CheckResult check_lemma_4_5(const DefiningVector& e) {
  if (!e.is_fg_type) throw PreconditionError("lemma-4-5 needs an FG-type vector");
  Recorder rec("lemma-4-5", e, 3);
  const int p = e.p;
  const CongruenceQuotient G(e, 3);
  const LowerCentralSeries series = lower_central_series(G.group(), p);
  const Permutation a = G.gen_a();
  const Permutation b = G.gen_b();

  Permutation g = b;
  for (int k = 0; k < p - 2; ++k) g = commutator(g, a);

  const PermGroup& st2 = G.level_stabilizer(2);
  const PermGroup st2_g = central_commutator_step(G.group(), st2);
  const PermGroup st2_gg = central_commutator_step(G.group(), st2_g);

  const Permutation w1 = commutator(g, a);  // [b,a,...(p-1)...,a]
  rec.expect_true("(i) [b,a,..(p-1)..,a] in gamma_p", series.term(p).contains(w1));
  rec.expect_true("(i) [b,a,..(p-1)..,a] outside St(2)", !st2.contains(w1));

  const Permutation w2 = commutator(g, b);
  rec.expect_true("(ii) [b,a,..(p-2)..,a,b] in St(2)", st2.contains(w2));
  rec.expect_true("(ii) [b,a,..(p-2)..,a,b] outside [St(2),G]", !st2_g.contains(w2));

  const Permutation w3 = commutator(w1, a);  // [b,a,...(p)...,a]
  rec.expect_true("(iii) [b,a,..(p)..,a] in [St(2),G,G]", st2_gg.contains(w3));

  const Permutation w4 = commutator(w1, b);
  rec.expect_true("(iv) [b,a,..(p-1)..,a,b] in [St(2),G]", st2_g.contains(w4));
  rec.expect_true("(iv) [b,a,..(p-1)..,a,b] outside [St(2),G,G]", !st2_gg.contains(w4));

  const Permutation w5 = compose(commutator(commutator(g, b), a), commutator(commutator(g, a), b));
  rec.expect_true("(v) [b,a,..,b,a][b,a,..,a,b] in [St(2),G]", st2_g.contains(w5));
  rec.expect_true("(v) [b,a,..,b,a][b,a,..,a,b] outside [St(2),G,G]", !st2_gg.contains(w5));
  return rec.finish();
}

namespace {

// shared by the level-3 and general schedule checks
void record_schedule_claims(Recorder& rec, const CongruenceQuotient& G,
                            const LowerCentralSeries& series, const IntervalSchedule& sched) {
  const int p = G.prime();
  rec.expect_eq("index exponents", join_ints(sched.exponents), join_ints(series.index_exponents()));
  rec.expect_eq("nilpotency class", sched.class_c, series.nilpotency_class());
  const int c = std::min<long long>(sched.class_c, series.nilpotency_class());
  for (int i = 1; i <= c; ++i) {
    std::vector<Permutation> elems{i == 1 ? G.gen_b() : G.x_word(i)};
    if (sched.exponents[i - 1] == 2) {
      const long long l = sched.ell[sched.interval_m[i - 1]];
      elems.push_back(l == 1 ? G.gen_a() : G.y_word(static_cast<int>(l), i));
    }
    record_generation_claim(rec, "i=" + std::to_string(i), series.term(i), series.term(i + 1),
                            std::move(elems), sched.exponents[i - 1], p);
  }
}

}  // namespace

CheckResult check_theorem_4_6(const DefiningVector& e) {
  if (!e.is_fg_type) throw PreconditionError("theorem-4-6 needs an FG-type vector");
  Recorder rec("theorem-4-6", e, 3);
  const int p = e.p;
  const CongruenceQuotient G(e, 3);
  const LowerCentralSeries series = lower_central_series(G.group(), p);
  record_schedule_claims(rec, G, series, interval_schedule(p, 3));

  // psi maps gamma_i(G_3) onto gamma_{i+1}(W(G_2)) for i >= p+1
  const CongruenceQuotient G2(e, 2);
  const PermGroup W = make_group(
      wreath_perm_generators(G2.group().generators, G2.group().chain.degree(), p));
  const LowerCentralSeries wseries = lower_central_series(W, p);
  const int c = series.nilpotency_class();
  for (int i = p + 1; i <= c; ++i) {
    bool forward = true;
    for (const auto& g : series.term(i).generators) {
      const Portrait f = Portrait::from_leaf_permutation(p, 3, g);
      const Permutation image = tuple_to_permutation(tuple_from_sections(f.psi_decompose()));
      forward = forward && image == g && wseries.term(i + 1).contains(image);
    }
    rec.expect_true("psi(gamma_" + std::to_string(i) + ") inside gamma_" +
                        std::to_string(i + 1) + "(W(G_2))",
                    forward);
    bool backward = true;
    for (const auto& g : wseries.term(i + 1).generators)
      backward = backward && series.term(i).contains(g);
    rec.expect_true("gamma_" + std::to_string(i + 1) + "(W(G_2)) inside psi(gamma_" +
                        std::to_string(i) + ")",
                    backward);
    rec.expect_eq("orders agree at i=" + std::to_string(i), series.term(i).order(),
                  wseries.term(i + 1).order());
  }
  return rec.finish();
}

CheckResult check_proposition_4_7(const DefiningVector& e) {
  if (e.is_periodic) throw PreconditionError("proposition-4-7 needs a non-periodic vector");
  if (e.is_fg_type) throw PreconditionError("proposition-4-7 needs a vector that is not FG-type");
  Recorder rec("proposition-4-7", e, 3);
  const int p = e.p;
  const CongruenceQuotient G(e, 3);
  const LowerCentralSeries series = lower_central_series(G.group(), p);
  int witness = 0;
  for (int i = 2; i <= std::min(p - 1, series.nilpotency_class()); ++i) {
    const int exp = series.index_exponents()[i - 1];
    rec.expect_eq("observed exponent at i=" + std::to_string(i), exp, exp);
    if (exp >= 2 && witness == 0) witness = i;
  }
  rec.expect_true("some i in 2..p-1 has index >= p^2 (witness i=" +
                      std::to_string(witness) + ")",
                  witness != 0);
  return rec.finish();
}

CheckResult check_theorem_5_1(const DefiningVector& e, int n) {
  if (!e.is_fg_type) throw PreconditionError("theorem-5-1 needs an FG-type vector");
  if (n < 3) throw PreconditionError("theorem-5-1 needs n >= 3");
  Recorder rec("theorem-5-1", e, n);
  const CongruenceQuotient G(e, n);
  const LowerCentralSeries series = lower_central_series(G.group(), e.p);
  record_schedule_claims(rec, G, series, interval_schedule(e.p, n));
  return rec.finish();
}

std::vector<std::string> check_names() {
  return {"theorem-2-1",  "theorem-4-1", "lemma-4-3", "lemma-4-4",
          "lemma-4-5",    "theorem-4-6", "proposition-4-7", "theorem-5-1"};
}

CheckResult run_check(const std::string& name, const DefiningVector& e, int n) {
  if (name == "theorem-2-1") return check_theorem_2_1(e, n);
  if (name == "theorem-4-1") return check_theorem_4_1(e);
  if (name == "lemma-4-3") return check_lemma_4_3(e);
  if (name == "lemma-4-4") return check_lemma_4_4(e, 0);
  if (name == "lemma-4-5") return check_lemma_4_5(e);
  if (name == "theorem-4-6") return check_theorem_4_6(e);
  if (name == "proposition-4-7") return check_proposition_4_7(e);
  if (name == "theorem-5-1") return check_theorem_5_1(e, n);
  throw std::invalid_argument("unknown check name: " + name);
}

std::vector<std::string> applicable_checks(const DefiningVector& e, int n) {
  std::vector<std::string> out;
  if (!e.is_periodic) {
    out.push_back("theorem-2-1");
    out.push_back("theorem-4-1");
  }
  out.push_back("lemma-4-3");
  if (e.is_fg_type) {
    out.push_back("lemma-4-4");
    out.push_back("lemma-4-5");
    out.push_back("theorem-4-6");
    if (n >= 3) out.push_back("theorem-5-1");
  } else if (!e.is_periodic) {
    out.push_back("proposition-4-7");
  }
  return out;
}

}  // namespace ggs
