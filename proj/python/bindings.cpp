#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tateap/curve.hpp"
#include "tateap/error.hpp"
#include "tateap/explore.hpp"
#include "tateap/io.hpp"
#include "tateap/progression.hpp"
#include "tateap/search.hpp"

namespace py = pybind11;
using namespace tateap;

namespace {

Rational to_rational(const py::handle& h) {
    if (py::isinstance<Rational>(h)) return h.cast<Rational>();
    if (py::isinstance<py::int_>(h) || py::isinstance<py::str>(h)) return Rational::parse(py::str(h).cast<std::string>());
    // fractions.Fraction and anything else exposing numerator/denominator.
    if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator")) {
        return Rational::parse(py::str(h.attr("numerator")).cast<std::string>()) /
               Rational::parse(py::str(h.attr("denominator")).cast<std::string>());
    }
    throw UsageError("cannot convert " + py::repr(h).cast<std::string>() + " to a rational");
}

std::vector<Rational> to_rationals(const py::iterable& xs) {
    std::vector<Rational> out;
    for (const auto& x : xs) out.push_back(to_rational(x));
    return out;
}

std::vector<CurvePoint> to_points(const py::iterable& xs) {
    std::vector<CurvePoint> out;
    for (const auto& x : xs) out.push_back(x.cast<CurvePoint>());
    return out;
}

std::string dump(const io::json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_tateap, m) {
    m.doc() = "Exact search for simultaneous arithmetic progressions on elliptic curves";

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);

    py::class_<Rational>(m, "Rational")
        .def(py::init([](const py::object& v) { return to_rational(v); }), py::arg("value") = 0)
        .def(py::init([](const py::object& p, const py::object& q) { return to_rational(p) / to_rational(q); }))
        .def_property_readonly("numerator", [](const Rational& r) { return py::int_(py::str(r.num().get_str())); })
        .def_property_readonly("denominator", [](const Rational& r) { return py::int_(py::str(r.den().get_str())); })
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; })
        .def("__hash__", [](const Rational& r) { return std::hash<Rational>{}(r); })
        .def("__eq__", [](const Rational& a, const py::object& b) {
            try {
                return a == to_rational(b);
            } catch (const UsageError&) {
                return false;
            }
        })
        .def("__lt__", [](const Rational& a, const py::object& b) { return a < to_rational(b); })
        .def("__le__", [](const Rational& a, const py::object& b) { return a <= to_rational(b); })
        .def("__gt__", [](const Rational& a, const py::object& b) { return a > to_rational(b); })
        .def("__ge__", [](const Rational& a, const py::object& b) { return a >= to_rational(b); })
        .def("__add__", [](const Rational& a, const py::object& b) { return a + to_rational(b); })
        .def("__radd__", [](const Rational& a, const py::object& b) { return to_rational(b) + a; })
        .def("__sub__", [](const Rational& a, const py::object& b) { return a - to_rational(b); })
        .def("__rsub__", [](const Rational& a, const py::object& b) { return to_rational(b) - a; })
        .def("__mul__", [](const Rational& a, const py::object& b) { return a * to_rational(b); })
        .def("__rmul__", [](const Rational& a, const py::object& b) { return to_rational(b) * a; })
        .def("__truediv__", [](const Rational& a, const py::object& b) { return a / to_rational(b); })
        .def("__rtruediv__", [](const Rational& a, const py::object& b) { return to_rational(b) / a; })
        .def("__neg__", [](const Rational& a) { return -a; })
        .def("__pow__", [](const Rational& a, long e) { return a.pow(e); })
        .def("__float__", [](const Rational& r) { return r.backend().get_d(); });
    py::implicitly_convertible<py::int_, Rational>();
    py::implicitly_convertible<py::str, Rational>();

    py::class_<CurvePoint>(m, "Point")
        .def(py::init([](const py::object& x, const py::object& y) { return CurvePoint(to_rational(x), to_rational(y)); }))
        .def_static("infinity", &CurvePoint::infinity)
        .def_property_readonly("is_infinity", &CurvePoint::is_infinity)
        .def_property_readonly("x", &CurvePoint::x)
        .def_property_readonly("y", &CurvePoint::y)
        .def("__eq__", [](const CurvePoint& a, const CurvePoint& b) { return a == b; })
        .def("__lt__", [](const CurvePoint& a, const CurvePoint& b) { return a < b; })
        .def("__hash__", [](const CurvePoint& p) {
            return p.is_infinity() ? 0 : std::hash<Rational>{}(p.x()) * 31 + std::hash<Rational>{}(p.y());
        })
        .def("__repr__", &CurvePoint::str);

    py::class_<WeierstrassCurve>(m, "Curve")
        .def(py::init([](const py::object& a1, const py::object& a2, const py::object& a3, const py::object& a4,
                         const py::object& a6) {
                 return WeierstrassCurve{to_rational(a1), to_rational(a2), to_rational(a3), to_rational(a4),
                                         to_rational(a6)};
             }),
             py::arg("a1"), py::arg("a2"), py::arg("a3"), py::arg("a4"), py::arg("a6"))
        .def_static("tate", [](const py::object& a, const py::object& b) {
            return TateCurve{to_rational(a), to_rational(b)}.weierstrass();
        })
        .def_static("from_spec", [](const std::string& s) { return io::parse_curve_spec(s).curve; })
        .def_readonly("a1", &WeierstrassCurve::a1)
        .def_readonly("a2", &WeierstrassCurve::a2)
        .def_readonly("a3", &WeierstrassCurve::a3)
        .def_readonly("a4", &WeierstrassCurve::a4)
        .def_readonly("a6", &WeierstrassCurve::a6)
        .def("discriminant", &discriminant)
        .def("contains", &contains)
        .def("add", &add)
        .def("negate", &negate)
        .def("scalar_mul", [](const WeierstrassCurve& c, std::int64_t k, const CurvePoint& p) { return scalar_mul(c, k, p); })
        .def("__eq__", [](const WeierstrassCurve& a, const WeierstrassCurve& b) { return a == b; })
        .def("__repr__", [](const WeierstrassCurve& c) { return "Curve(" + dump(io::curve_to_json(c)) + ")"; });

    m.def("longest_ap_subset", [](const py::iterable& xs) {
        const auto c = longest_ap_subset(to_rationals(xs));
        return py::make_tuple(c.first, c.difference, c.length, c.members);
    });
    m.def("certify_ap", [](const py::iterable& xs) { return certify_ap(to_rationals(xs)).has_value(); });

    // Structured results cross the boundary as JSON text; the package decodes them.
    m.def("_certify_simultaneous", [](const py::iterable& pts) -> std::optional<std::string> {
        const auto c = certify_simultaneous(to_points(pts));
        if (!c) return std::nullopt;
        return dump(io::to_json(*c));
    });
    m.def("_bounds", [](const py::iterable& pts) { return dump(io::to_json(bounds_report(to_points(pts)))); });
    m.def(
        "_search",
        [](int n, unsigned jobs) {
            SearchReport r;
            {
                py::gil_scoped_release release;
                r = run_search(n, jobs);
            }
            io::json cases = io::json::array();
            for (const auto& c : r.cases) cases.push_back(io::to_json(c));
            return dump({{"cases", cases}, {"summary", io::summary_json(n, r.counts(), r.cases.size()).at("summary")}});
        },
        py::arg("n"), py::arg("jobs") = 1);
    m.def("_parametric", [] {
        io::json out = io::json::array();
        for (const auto& c : run_parametric_search()) out.push_back(io::to_json(c));
        return dump(out);
    });
    m.def(
        "_explore",
        [](const WeierstrassCurve& c, const py::iterable& seeds, int bound, int combo) {
            ExploreReport r;
            const ExploreConfig cfg{to_points(seeds), bound, combo};
            {
                py::gil_scoped_release release;
                r = explore(c, cfg);
            }
            return py::make_tuple(dump(io::to_json(r)), r.points_found);
        },
        py::arg("curve"), py::arg("seeds"), py::arg("bound") = 8, py::arg("combo") = 2);
    m.def("_family3", [](const py::object& b) { return dump(io::to_json(family3_curve(to_rational(b)))); });
    m.def(
        "_table",
        [](int bound, int combo) {
            std::vector<TableRow> rows;
            {
                py::gil_scoped_release release;
                rows = reproduce_table(bound, combo);
            }
            io::json out = io::json::array();
            for (const auto& r : rows) out.push_back(io::to_json(r));
            return dump(out);
        },
        py::arg("bound") = 8, py::arg("combo") = 3);
}
