#include "ggslcs/report_json.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "ggslcs/fp.hpp"

namespace ggs {

Json to_json(const CheckResult& r, bool with_timings) {
  Json j;
  j["check_name"] = r.check_name;
  j["passed"] = r.passed;
  Json details = Json::array();
  for (const auto& d : r.details) {
    Json e;
    e["name"] = d.name;
    e["passed"] = d.passed;
    e["expected"] = d.expected;
    e["computed"] = d.computed;
    details.push_back(std::move(e));
  }
  j["details"] = std::move(details);
  if (with_timings) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Json to_json(const SeriesReport& r, const IntervalSchedule* sched, bool full_orders) {
  Json j;
  j["nilpotency_class"] = r.nilpotency_class;
  j["index_exponents"] = r.index_exponents;
  Json terms = Json::array();
  for (std::size_t i = 0; i < r.terms.size(); ++i) {
    Json t;
    t["index"] = i + 1;
    t["valuation"] = r.terms[i].order_valuation;
    if (full_orders) {
      BigInt full = 1;
      for (int k = 0; k < r.terms[i].order_valuation; ++k) full *= r.p;
      t["order"] = full.str();
    }
    t["generator_count"] = r.terms[i].generators.size();
    if (sched && i + 1 <= static_cast<std::size_t>(sched->class_c))
      t["generator_tags"] = sched->generator_tags[i];
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const IntervalSchedule& s) {
  Json j;
  j["class"] = s.class_c;
  j["ell"] = s.ell;
  j["r"] = s.r;
  Json entries = Json::array();
  for (long long i = 1; i <= s.class_c; ++i) {
    Json e;
    e["i"] = i;
    e["exponent"] = s.exponents[i - 1];
    e["generator_tags"] = s.generator_tags[i - 1];
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace ggs
