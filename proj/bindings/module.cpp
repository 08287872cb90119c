#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "exactrn/cauchy_schwarz.hpp"
#include "exactrn/continuity.hpp"
#include "exactrn/errors.hpp"
#include "exactrn/expr.hpp"
#include "exactrn/hyper.hpp"
#include "exactrn/rat.hpp"
#include "exactrn/surd.hpp"
#include "exactrn/vec.hpp"

namespace py = pybind11;
using namespace exactrn;

namespace {

RatVec to_rat_vec(std::vector<Rat> entries) {
  return RatVec(std::move(entries));
}

HyperVec to_hyper_vec(std::vector<Hyper> entries) {
  return HyperVec(std::move(entries));
}

std::vector<Rat> from_rat_vec(const RatVec& v) { return v.entries(); }

py::object big_int(const std::string& decimal) {
  PyObject* value = PyLong_FromString(decimal.c_str(), nullptr, 10);
  if (!value) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(value);
}

std::string step_value(const std::variant<Rat, RatVec>& v) {
  return replay_value_str(v);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "exact arithmetic kernel: rationals, Levi-Civita hyperreals, "
      "Cauchy-Schwarz certificates, continuity probes";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError",
                                         PyExc_ValueError);
  py::register_exception<ParseError>(m, "ExprParseError", PyExc_ValueError);
  py::register_exception<LogicFault>(m, "LogicFault", PyExc_RuntimeError);

  py::class_<Rat>(m, "Rat")
      .def(py::init<long long>(), py::arg("value"))
      .def(py::init<long long, long long>(), py::arg("num"), py::arg("den"))
      .def(py::init([](const std::string& text) { return Rat::parse(text); }),
           py::arg("text"))
      .def_property_readonly(
          "numerator", [](const Rat& r) { return big_int(r.numerator().str()); })
      .def_property_readonly(
          "denominator",
          [](const Rat& r) { return big_int(r.denominator().str()); })
      .def("is_zero", &Rat::is_zero)
      .def("sign", &Rat::sign)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self)
      .def("__abs__", [](const Rat& r) { return abs(r); })
      .def("__str__", &Rat::str)
      .def("__repr__", [](const Rat& r) { return "Rat('" + r.str() + "')"; })
      .def("__hash__",
           [](const Rat& r) { return py::hash(py::str(r.str())); });
  py::implicitly_convertible<py::int_, Rat>();
  py::implicitly_convertible<py::str, Rat>();

  m.def("sqrt_leq", &sqrt_leq, py::arg("a"), py::arg("b"),
        "decide sqrt(a) <= b exactly");
  m.def("sqrt_sum_leq", &sqrt_sum_leq, py::arg("c"), py::arg("a"),
        py::arg("b"), "decide sqrt(c) <= sqrt(a) + sqrt(b) exactly");
  m.def("sqrt_sum_eq", &sqrt_sum_eq, py::arg("c"), py::arg("a"), py::arg("b"),
        "decide sqrt(c) == sqrt(a) + sqrt(b) exactly");
  m.def("approx_sqrt", &approx_sqrt, py::arg("a"), py::arg("p"),
        "rational r with |r - sqrt(a)| <= 2**-p");

  py::class_<Hyper>(m, "Hyper")
      .def(py::init<>())
      .def(py::init<Rat>(), py::arg("standard"))
      .def_static("eps", &Hyper::eps, py::arg("k") = 1)
      .def_static("term", &Hyper::term, py::arg("exponent"), py::arg("coeff"))
      .def_static("from_terms", &Hyper::from_terms, py::arg("terms"))
      .def("terms",
           [](const Hyper& h) {
             std::vector<std::pair<int, Rat>> out(h.terms().begin(),
                                                  h.terms().end());
             return out;
           })
      .def("is_zero", &Hyper::is_zero)
      .def("valuation", &Hyper::valuation)
      .def("leading_coeff", &Hyper::leading_coeff)
      .def("sign", &Hyper::sign)
      .def("is_i_small", &Hyper::is_i_small)
      .def("is_i_large", &Hyper::is_i_large)
      .def("is_i_limited", &Hyper::is_i_limited)
      .def("standard_part", &Hyper::standard_part)
      .def("inverse", &Hyper::inverse, py::arg("order_k") = 16)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self)
      .def("__abs__", [](const Hyper& h) { return abs(h); })
      .def("__str__", &Hyper::str)
      .def("__repr__",
           [](const Hyper& h) { return "Hyper('" + h.str() + "')"; });

  m.def("vec_add", [](std::vector<Rat> u, std::vector<Rat> v) {
    return from_rat_vec(vec_add(to_rat_vec(std::move(u)), to_rat_vec(std::move(v))));
  });
  m.def("scalar_mul", [](const Rat& a, std::vector<Rat> v) {
    return from_rat_vec(scalar_mul(a, to_rat_vec(std::move(v))));
  });
  m.def("vec_sub", [](std::vector<Rat> u, std::vector<Rat> v) {
    return from_rat_vec(vec_sub(to_rat_vec(std::move(u)), to_rat_vec(std::move(v))));
  });
  m.def("vec_sub_direct", [](std::vector<Rat> u, std::vector<Rat> v) {
    return from_rat_vec(
        vec_sub_direct(to_rat_vec(std::move(u)), to_rat_vec(std::move(v))));
  });
  m.def("zvecp", [](std::vector<Rat> v) { return zvecp(to_rat_vec(std::move(v))); });
  m.def("dot", [](std::vector<Rat> u, std::vector<Rat> v) {
    return dot(to_rat_vec(std::move(u)), to_rat_vec(std::move(v)));
  });
  m.def("norm_sq", [](std::vector<Rat> v) { return norm_sq(to_rat_vec(std::move(v))); });
  m.def("metric_sq", [](std::vector<Rat> x, std::vector<Rat> y) {
    return metric_sq(to_rat_vec(std::move(x)), to_rat_vec(std::move(y)));
  });
  m.def("max_abs", [](std::vector<Rat> v) { return max_abs(to_rat_vec(std::move(v))); });

  m.def("cs1_gap", [](std::vector<Rat> u, std::vector<Rat> v) {
    return cs1_gap(to_rat_vec(std::move(u)), to_rat_vec(std::move(v)));
  });
  m.def("cs2_holds", [](std::vector<Rat> u, std::vector<Rat> v) {
    return cs2_holds(to_rat_vec(std::move(u)), to_rat_vec(std::move(v)));
  });

  py::class_<CsCertificate> cert(m, "CsCertificate");
  py::enum_<CsCertificate::Kind>(cert, "Kind")
      .value("ZeroU", CsCertificate::Kind::ZeroU)
      .value("ZeroV", CsCertificate::Kind::ZeroV)
      .value("Dependent", CsCertificate::Kind::Dependent)
      .value("Strict", CsCertificate::Kind::Strict);
  cert.def_property_readonly("kind", &CsCertificate::kind)
      .def_property_readonly("kind_name", &CsCertificate::kind_name)
      .def("is_equality_case", &CsCertificate::is_equality_case)
      .def_property_readonly("witness", &CsCertificate::witness)
      .def_property_readonly("gap", &CsCertificate::gap)
      .def(py::self == py::self)
      .def("__repr__", [](const CsCertificate& c) {
        return "CsCertificate(" + c.kind_name() + ")";
      });

  m.def("classify", [](std::vector<Rat> u, std::vector<Rat> v) {
    return classify(to_rat_vec(std::move(u)), to_rat_vec(std::move(v)));
  });
  m.def("verify_certificate",
        [](std::vector<Rat> u, std::vector<Rat> v, const CsCertificate& c) {
          return verify_certificate(to_rat_vec(std::move(u)),
                                    to_rat_vec(std::move(v)), c);
        });
  m.def("first_ratio_witness", [](std::vector<Rat> u, std::vector<Rat> v) {
    return first_ratio_witness(to_rat_vec(std::move(u)),
                               to_rat_vec(std::move(v)));
  });

  py::class_<ReplayStep>(m, "ReplayStep")
      .def_readonly("name", &ReplayStep::name)
      .def_property_readonly(
          "lhs", [](const ReplayStep& s) { return step_value(s.lhs); })
      .def_property_readonly(
          "rhs", [](const ReplayStep& s) { return step_value(s.rhs); })
      .def_property_readonly(
          "relation",
          [](const ReplayStep& s) { return relation_symbol(s.relation); })
      .def_readonly("holds", &ReplayStep::holds);

  py::class_<ReplayReport>(m, "ReplayReport")
      .def_readonly("zero_v_branch", &ReplayReport::zero_v_branch)
      .def_readonly("witness", &ReplayReport::witness)
      .def_readonly("steps", &ReplayReport::steps)
      .def("all_hold", &ReplayReport::all_hold);

  m.def("replay_proof", [](std::vector<Rat> u, std::vector<Rat> v) {
    return replay_proof(to_rat_vec(std::move(u)), to_rat_vec(std::move(v)));
  });

  m.def("triangle_holds",
        [](std::vector<Rat> x, std::vector<Rat> y, std::vector<Rat> z) {
          return triangle_holds(to_rat_vec(std::move(x)),
                                to_rat_vec(std::move(y)),
                                to_rat_vec(std::move(z)));
        });
  m.def("triangle_equality",
        [](std::vector<Rat> x, std::vector<Rat> y, std::vector<Rat> z) {
          return triangle_equality(to_rat_vec(std::move(x)),
                                   to_rat_vec(std::move(y)),
                                   to_rat_vec(std::move(z)));
        });

  py::class_<MetricAxiomsReport>(m, "MetricAxiomsReport")
      .def_readonly("commutative", &MetricAxiomsReport::commutative)
      .def_readonly("positive_definite", &MetricAxiomsReport::positive_definite)
      .def_readonly("triangle", &MetricAxiomsReport::triangle)
      .def_readonly("triangle_is_equality",
                    &MetricAxiomsReport::triangle_is_equality)
      .def("all", &MetricAxiomsReport::all);

  m.def("metric_axioms_report",
        [](std::vector<Rat> x, std::vector<Rat> y, std::vector<Rat> z) {
          return metric_axioms_report(to_rat_vec(std::move(x)),
                                      to_rat_vec(std::move(y)),
                                      to_rat_vec(std::move(z)));
        });

  py::class_<Expression>(m, "Expression")
      .def_property_readonly("arity",
                             [](const Expression& e) { return e.arity; })
      .def_property_readonly("contains_sgn",
                             [](const Expression& e) { return e.contains_sgn(); })
      .def("__str__", [](const Expression& e) { return to_string(e); })
      .def("__repr__", [](const Expression& e) {
        return "Expression('" + to_string(e) + "')";
      });

  m.def("parse_expr", &parse_expr, py::arg("text"), py::arg("arity"));
  m.def("eval_expr", [](const Expression& e, std::vector<Hyper> point) {
    return eval_expr(e, to_hyper_vec(std::move(point)));
  });
  m.def("sum_expr", &sum_expr, py::arg("n"));
  m.def("prod2_expr", &prod2_expr);
  m.def("dot_fixed_expr", [](std::vector<Rat> coeffs) {
    return dot_fixed_expr(to_rat_vec(std::move(coeffs)));
  });

  py::class_<ProbeResult>(m, "ProbeResult")
      .def_property_readonly(
          "point", [](const ProbeResult& r) { return from_rat_vec(r.point); })
      .def_property_readonly(
          "direction",
          [](const ProbeResult& r) { return from_rat_vec(r.direction); })
      .def_readonly("order", &ProbeResult::order)
      .def_readonly("diff", &ProbeResult::diff)
      .def_readonly("metric_sq_small", &ProbeResult::metric_sq_small)
      .def_readonly("diff_small", &ProbeResult::diff_small)
      .def_readonly("inputs_limited", &ProbeResult::inputs_limited)
      .def("violation", &ProbeResult::violation);

  m.def("probe",
        [](const Expression& e, std::vector<Rat> x, std::vector<Rat> h,
           int order) {
          return probe(e, to_rat_vec(std::move(x)), to_rat_vec(std::move(h)),
                       order);
        },
        py::arg("expr"), py::arg("x"), py::arg("h"), py::arg("order"));

  py::class_<EntriesSmallReport>(m, "EntriesSmallReport")
      .def_readonly("metric_small", &EntriesSmallReport::metric_small)
      .def_readonly("entry_small", &EntriesSmallReport::entry_small)
      .def("all_entries_small", &EntriesSmallReport::all_entries_small);

  m.def("entries_small_check",
        [](std::vector<Hyper> u, std::vector<Hyper> v) {
          return entries_small_check(to_hyper_vec(std::move(u)),
                                     to_hyper_vec(std::move(v)));
        });

  m.def("lift", [](std::vector<Rat> v) {
    HyperVec lifted = lift(to_rat_vec(std::move(v)));
    return lifted.entries();
  });
}
