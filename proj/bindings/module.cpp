#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ggslcs/checks.hpp"
#include "ggslcs/congruence_quotient.hpp"
#include "ggslcs/lower_central.hpp"
#include "ggslcs/schedule.hpp"
#include "ggslcs/wreath.hpp"

namespace py = pybind11;
using namespace ggs;

namespace {

py::dict series_dict(const LowerCentralSeries& s) {
  py::dict d;
  d["p"] = s.prime();
  d["nilpotency_class"] = s.nilpotency_class();
  d["index_exponents"] = s.index_exponents();
  std::vector<int> valuations;
  for (int i = 1; i <= s.term_count(); ++i)
    valuations.push_back(*s.term(i).chain.order_valuation(s.prime()));
  d["term_valuations"] = valuations;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact lower central series engine for GGS congruence quotients";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<int>(), py::arg("degree"))
      .def_static("from_images", &Permutation::from_images)
      .def_property_readonly("degree", &Permutation::degree)
      .def_property_readonly("images", [](const Permutation& p) { return p.images(); })
      .def("__call__", [](const Permutation& p, int k) { return p(k); })
      .def("__mul__", [](const Permutation& x, const Permutation& y) { return compose(x, y); })
      .def("inverse", &Permutation::inverse)
      .def("order", &Permutation::order)
      .def("is_identity", &Permutation::is_identity)
      .def("__eq__", [](const Permutation& x, const Permutation& y) { return x == y; })
      .def("__repr__", [](const Permutation& p) {
        std::string s = "Permutation([";
        for (int k = 0; k < p.degree(); ++k) s += (k ? "," : "") + std::to_string(p(k + 1));
        return s + "])";
      });
  m.def("commutator", [](const Permutation& x, const Permutation& y) { return commutator(x, y); });

  py::class_<DefiningVector>(m, "DefiningVector")
      .def_readonly("p", &DefiningVector::p)
      .def_readonly("entries", &DefiningVector::entries)
      .def_readonly("epsilon", &DefiningVector::epsilon)
      .def_readonly("delta", &DefiningVector::delta)
      .def_readonly("is_constant", &DefiningVector::is_constant)
      .def_readonly("is_symmetric", &DefiningVector::is_symmetric)
      .def_readonly("is_periodic", &DefiningVector::is_periodic)
      .def_readonly("is_fg_type", &DefiningVector::is_fg_type);
  m.def("classify_vector", &classify_vector, py::arg("p"), py::arg("entries"));

  py::class_<CongruenceQuotient>(m, "CongruenceQuotient")
      .def(py::init([](int p, const std::vector<int>& entries, int level) {
             return CongruenceQuotient(classify_vector(p, entries), level);
           }),
           py::arg("p"), py::arg("entries"), py::arg("level"))
      .def_property_readonly("level", &CongruenceQuotient::level)
      .def_property_readonly("gen_a", &CongruenceQuotient::gen_a)
      .def_property_readonly("gen_b", &CongruenceQuotient::gen_b)
      .def("order_valuation",
           [](const CongruenceQuotient& g) {
             return g.group().chain.order_valuation(g.prime());
           })
      .def("stabilizer_valuation",
           [](const CongruenceQuotient& g, int k) {
             return g.level_stabilizer(k).chain.order_valuation(g.prime());
           })
      .def("x_word", &CongruenceQuotient::x_word, py::arg("i"))
      .def("y_word", &CongruenceQuotient::y_word, py::arg("j"), py::arg("i"))
      .def("contains", [](const CongruenceQuotient& g, const Permutation& x) {
        return g.group().contains(x);
      });

  m.def(
      "lower_central_series",
      [](int p, const std::vector<int>& entries, int level) {
        const CongruenceQuotient g(classify_vector(p, entries), level);
        return series_dict(lower_central_series(g.group(), p));
      },
      py::arg("p"), py::arg("entries"), py::arg("level"));

  py::class_<IntervalSchedule>(m, "IntervalSchedule")
      .def_readonly("p", &IntervalSchedule::p)
      .def_readonly("level", &IntervalSchedule::level)
      .def_readonly("ell", &IntervalSchedule::ell)
      .def_readonly("r", &IntervalSchedule::r)
      .def_readonly("class_c", &IntervalSchedule::class_c)
      .def_readonly("exponents", &IntervalSchedule::exponents)
      .def_readonly("generator_tags", &IntervalSchedule::generator_tags);
  m.def("interval_schedule", &interval_schedule, py::arg("p"), py::arg("n"));

  py::class_<SubAssertion>(m, "SubAssertion")
      .def_readonly("name", &SubAssertion::name)
      .def_readonly("passed", &SubAssertion::passed)
      .def_readonly("expected", &SubAssertion::expected)
      .def_readonly("computed", &SubAssertion::computed);
  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("check_name", &CheckResult::check_name)
      .def_readonly("passed", &CheckResult::passed)
      .def_readonly("details", &CheckResult::details)
      .def_readonly("elapsed_ms", &CheckResult::elapsed_ms);
  m.def("check_names", &check_names);
  m.def(
      "run_check",
      [](const std::string& name, int p, const std::vector<int>& entries, int level) {
        return run_check(name, classify_vector(p, entries), level);
      },
      py::arg("name"), py::arg("p"), py::arg("entries"), py::arg("level") = 3);

  m.def("lambda_vector", &lambda_vector, py::arg("p"), py::arg("i"));
  m.def("gamma_level_field", &gamma_level_field, py::arg("v"), py::arg("p"));
  m.def("delta_map", py::overload_cast<const std::vector<int>&, int>(&delta_map),
        py::arg("v"), py::arg("p"));
  m.def("iterated_delta_p_minus_2", &iterated_delta_p_minus_2, py::arg("v"), py::arg("p"));
}
