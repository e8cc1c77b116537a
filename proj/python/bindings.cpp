#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fibcl/cli.hpp"
#include "fibcl/clifford.hpp"
#include "fibcl/error.hpp"
#include "fibcl/fib.hpp"
#include "fibcl/fibquat.hpp"
#include "fibcl/json_io.hpp"
#include "fibcl/qsqrt5.hpp"
#include "fibcl/quaternion.hpp"
#include "fibcl/selftest.hpp"

namespace py = pybind11;
using namespace fibcl;

namespace {

// Big integers cross the boundary as decimal strings.
py::int_ to_py(const Int& v) {
  return py::int_(py::module_::import("builtins").attr("int")(v.get_str()));
}

Int from_py(const py::int_& v) { return parse_int(v.attr("__str__")().cast<std::string>()); }

Rat rat_from_object(const py::object& o) {
  if (py::isinstance<Rat>(o)) return o.cast<Rat>();
  if (py::isinstance<py::bool_>(o)) throw py::type_error("bool is not a rational");
  if (py::isinstance<py::int_>(o)) return Rat(from_py(o.cast<py::int_>()));
  if (py::isinstance<py::str>(o)) return Rat::parse(o.cast<std::string>());
  throw py::type_error("expected Rat, int or str like '-3/2'");
}

QuatCoeffs coeffs_from(const std::vector<py::object>& items) {
  if (items.size() != 4) throw py::value_error("a quaternion needs exactly 4 coefficients");
  return {rat_from_object(items[0]), rat_from_object(items[1]), rat_from_object(items[2]),
          rat_from_object(items[3])};
}

std::vector<std::string> to_strings(const QuatCoeffs& c) {
  return {c[0].str(), c[1].str(), c[2].str(), c[3].str()};
}

}  // namespace

PYBIND11_MODULE(_fibcl, m) {
  m.doc() = "Exact generalized Fibonacci quaternions and their Clifford algebras";

  static py::exception<Error> error_type(m, "FibclError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error_type(e.what());
    }
  });

  py::class_<Rat>(m, "Rat")
      .def(py::init([](const py::object& o) { return rat_from_object(o); }))
      .def(py::init([](const py::int_& num, const py::int_& den) {
        return Rat(from_py(num), from_py(den));
      }))
      .def_property_readonly("num", [](const Rat& r) { return to_py(r.num()); })
      .def_property_readonly("den", [](const Rat& r) { return to_py(r.den()); })
      .def("sign", &Rat::sign)
      .def("__str__", &Rat::str)
      .def("__repr__", [](const Rat& r) { return "Rat('" + r.str() + "')"; })
      .def("__hash__", [](const Rat& r) { return std::hash<Rat>{}(r); })
      .def("__eq__", [](const Rat& a, const py::object& b) { return a == rat_from_object(b); })
      .def("__lt__", [](const Rat& a, const py::object& b) { return a < rat_from_object(b); })
      .def("__add__", [](const Rat& a, const py::object& b) { return a + rat_from_object(b); })
      .def("__sub__", [](const Rat& a, const py::object& b) { return a - rat_from_object(b); })
      .def("__mul__", [](const Rat& a, const py::object& b) { return a * rat_from_object(b); })
      .def("__truediv__", [](const Rat& a, const py::object& b) { return a / rat_from_object(b); })
      .def("__neg__", [](const Rat& a) { return -a; });

  py::class_<QSqrt5>(m, "QSqrt5")
      .def(py::init([](const py::object& a, const py::object& b) {
             return QSqrt5(rat_from_object(a), rat_from_object(b));
           }),
           py::arg("a"), py::arg("b") = py::int_(0))
      .def_static("alpha", &QSqrt5::alpha)
      .def_static("beta", &QSqrt5::beta)
      .def_property_readonly("a", &QSqrt5::a)
      .def_property_readonly("b", &QSqrt5::b)
      .def("sign", &QSqrt5::sign)
      .def("conj", &QSqrt5::conj)
      .def("__str__", &QSqrt5::str)
      .def("__repr__", [](const QSqrt5& x) { return "QSqrt5(" + x.str() + ")"; })
      .def("__eq__", [](const QSqrt5& x, const QSqrt5& y) { return x == y; })
      .def("__add__", [](const QSqrt5& x, const QSqrt5& y) { return x + y; })
      .def("__sub__", [](const QSqrt5& x, const QSqrt5& y) { return x - y; })
      .def("__mul__", [](const QSqrt5& x, const QSqrt5& y) { return x * y; })
      .def("__truediv__", [](const QSqrt5& x, const QSqrt5& y) { return x / y; })
      .def("to_json", [](const QSqrt5& x) { return to_json(x).dump(); });

  py::class_<AlgebraParams>(m, "AlgebraParams")
      .def(py::init([](const py::object& b1, const py::object& b2) {
        return AlgebraParams(rat_from_object(b1), rat_from_object(b2));
      }))
      .def_property_readonly("beta1", &AlgebraParams::beta1)
      .def_property_readonly("beta2", &AlgebraParams::beta2)
      .def("is_division_over_R", [](const AlgebraParams& p) { return is_division_over_R(p); })
      .def("__eq__", [](const AlgebraParams& a, const AlgebraParams& b) { return a == b; })
      .def("__repr__", &AlgebraParams::str);

  py::class_<Quaternion>(m, "Quaternion")
      .def(py::init([](const AlgebraParams& p, const std::vector<py::object>& c) {
        return Quaternion(p, coeffs_from(c));
      }))
      .def_static("from_json", [](const std::string& s) { return quaternion_from_json(Json::parse(s)); })
      .def_property_readonly("params", &Quaternion::params)
      .def_property_readonly("coeffs", [](const Quaternion& q) {
        return std::vector<Rat>(q.coeffs().begin(), q.coeffs().end());
      })
      .def("norm", [](const Quaternion& q) { return qnorm(q); })
      .def("conj", [](const Quaternion& q) { return qconj(q); })
      .def("inverse", [](const Quaternion& q) { return qinv(q); })
      .def("__mul__", [](const Quaternion& x, const Quaternion& y) { return qmul(x, y); })
      .def("__add__", [](const Quaternion& x, const Quaternion& y) { return x + y; })
      .def("__sub__", [](const Quaternion& x, const Quaternion& y) { return x - y; })
      .def("__eq__", [](const Quaternion& x, const Quaternion& y) { return x == y; })
      .def("__repr__", &Quaternion::str)
      .def("to_json", [](const Quaternion& q) { return to_json(q).dump(); });

  py::class_<ThresholdCertificate>(m, "ThresholdCertificate")
      .def_readonly("n_prime", &ThresholdCertificate::n_prime)
      .def_readonly("horizon", &ThresholdCertificate::horizon)
      .def_readonly("limit_sign", &ThresholdCertificate::limit_sign)
      .def("to_json", [](const ThresholdCertificate& c) { return to_json(c).dump(); });

  py::class_<ClassificationReport>(m, "ClassificationReport")
      .def_readonly("E", &ClassificationReport::E)
      .def_readonly("sign_E", &ClassificationReport::sign_E)
      .def_readonly("input_is_division", &ClassificationReport::input_is_division)
      .def_readonly("certificate", &ClassificationReport::certificate)
      .def_property_readonly("n_prime", [](const ClassificationReport& r) { return r.certificate.n_prime; })
      .def_property_readonly("form", [](const ClassificationReport& r) { return r.form.squares(); })
      .def_property_readonly("clifford_class", [](const ClassificationReport& r) {
        return std::string(class_name(r.clifford_class));
      })
      .def_property_readonly("canonical", [](const ClassificationReport& r) { return r.canonical.str(); })
      .def("to_json", [](const ClassificationReport& r) { return to_json(r).dump(); });

  m.def("fib", [](std::uint64_t n) { return to_py(fib(n)); });
  m.def("lucas", [](std::uint64_t n) { return to_py(lucas(n)); });
  m.def("horadam", [](std::uint64_t n, const py::int_& p, const py::int_& q) {
    return to_py(horadam(n, HoradamParams{from_py(p), from_py(q)}));
  });
  m.def("binet", &binet);
  m.def("alpha_pow", &alpha_pow);

  m.def("fib_quat", &fib_quat, py::arg("n"), py::arg("params"));
  m.def("gen_fib_quat", [](std::uint64_t n, const py::int_& p, const py::int_& q,
                           const AlgebraParams& params) {
    return gen_fib_quat(n, from_py(p), from_py(q), params);
  });
  m.def("energy_E", &energy_E);
  m.def("energy_E_prime", [](const AlgebraParams& params, const py::int_& p, const py::int_& q) {
    return energy_E_prime(params, from_py(p), from_py(q));
  });
  m.def("norm_closed_form", &norm_closed_form, py::arg("n"), py::arg("params"));
  m.def("invertibility_threshold", &invertibility_threshold);
  m.def("gen_invertibility_threshold",
        [](const AlgebraParams& params, const py::int_& p, const py::int_& q) {
          return gen_invertibility_threshold(params, from_py(p), from_py(q));
        });
  m.def("gram_matrix", [](std::uint64_t n, const AlgebraParams& params) {
    const GramMatrix g = gram_matrix(n, params);
    return std::vector<std::vector<Rat>>{{g.entries[0][0], g.entries[0][1]},
                                         {g.entries[1][0], g.entries[1][1]}};
  });

  m.def("dimension", [](std::size_t rank) { return dimension(rank); });
  m.def("blade_mul", [](Blade a, Blade b, const std::vector<py::object>& squares) {
    std::vector<Rat> sq;
    for (const auto& s : squares) sq.push_back(rat_from_object(s));
    const BladeProduct p = blade_mul(a, b, DiagonalForm(std::move(sq)));
    return py::make_tuple(p.coeff, p.blade);
  });
  m.def("rank2_class", [](const py::object& a, const py::object& b) {
    return std::string(class_name(rank2_class(DiagonalForm({rat_from_object(a), rat_from_object(b)}))));
  });
  m.def("classify", &classify);

  m.def("selftest", [] {
    std::vector<std::pair<std::string, bool>> out;
    for (const auto& g : selftest().groups) out.emplace_back(g.name, g.passed);
    return out;
  });
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
