// Python bindings: point sets, Groebner data, bounds, exact covers and the
// verification suites.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "almostcover/bounds.hpp"
#include "almostcover/cover.hpp"
#include "almostcover/error.hpp"
#include "almostcover/families.hpp"
#include "almostcover/io.hpp"
#include "almostcover/vanishing.hpp"
#include "almostcover/verify.hpp"

namespace py = pybind11;
using namespace almostcover;

namespace {

// Fractions for rationals, ints for residues.
py::object to_python(const Scalar& s) {
  if (s.field().is_rational()) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    const mpq_class& q = s.rational();
    return fraction(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
  }
  return py::int_(s.residue());
}

py::tuple point_to_python(const Point& p) {
  py::tuple out(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) out[i] = to_python(p[i]);
  return out;
}

Scalar from_python(const Field& field, const py::handle& value) {
  return field.parse(py::str(value).cast<std::string>());
}

Point point_from_python(const Field& field, const py::sequence& coords) {
  Vector v;
  for (const py::handle& c : coords) v.push_back(from_python(field, c));
  return Point(std::move(v));
}

PointSet make_point_set(const std::vector<py::sequence>& points, const Field& field) {
  if (points.empty()) throw Error("a point set needs at least one point");
  std::vector<Point> out;
  for (const py::sequence& p : points) out.push_back(point_from_python(field, p));
  const std::size_t dim = out.front().dim();
  return PointSet(field, dim, std::move(out));
}

std::vector<py::tuple> points_of(const PointSet& set) {
  std::vector<py::tuple> out;
  for (const Point& p : set.points()) out.push_back(point_to_python(p));
  return out;
}

std::vector<std::string> texts(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const Polynomial& p : ps) out.push_back(p.to_string());
  return out;
}

py::dict solution_dict(const CoverSolution& s) {
  std::vector<std::string> hyperplanes;
  for (const Hyperplane& h : s.hyperplanes) hyperplanes.push_back(h.to_string());
  py::dict d;
  d["index"] = s.excluded_index;
  d["point"] = point_to_python(s.excluded);
  d["size"] = s.size;
  d["hyperplanes"] = hyperplanes;
  d["lower_bound"] = s.lower_bound_used;
  d["optimal"] = s.optimal;
  d["nodes"] = s.nodes;
  d["transported_from"] = s.transported_from ? py::cast(*s.transported_from) : py::none();
  return d;
}

Hyperplane hyperplane_from_python(const Field& field, const py::sequence& normal, const py::handle& offset) {
  Vector n;
  for (const py::handle& c : normal) n.push_back(from_python(field, c));
  return Hyperplane(std::move(n), from_python(field, offset));
}

std::size_t checked(const PointSet& set, std::size_t index) {
  if (index >= set.size()) throw Error("point index " + std::to_string(index) + " out of range");
  return index;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Groebner bases of vanishing ideals and minimum almost covers by hyperplanes";

  static py::exception<Error> error(m, "AlmostCoverError", PyExc_ValueError);
  static py::exception<InvariantViolation> invariant(m, "InvariantViolation", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    } catch (const InvariantViolation& e) {
      py::set_error(invariant, e.what());
    }
  });

  py::class_<Field>(m, "Field")
      .def_static("rational", &Field::rational)
      .def_static("prime", &Field::prime, py::arg("p"))
      .def_static("parse", &Field::parse_name, py::arg("name"))
      .def_property_readonly("name", &Field::name)
      .def_property_readonly("characteristic", &Field::characteristic)
      .def_property_readonly("is_rational", &Field::is_rational)
      .def("__eq__", [](const Field& a, const Field& b) { return a == b; })
      .def("__hash__", [](const Field& f) { return std::hash<std::uint64_t>{}(f.characteristic()); })
      .def("__repr__", [](const Field& f) { return "Field('" + f.name() + "')"; });

  py::class_<PointSet>(m, "PointSet")
      .def(py::init(&make_point_set), py::arg("points"), py::arg("field") = Field::rational(),
           "Coordinates may be ints, Fractions or strings such as '3/7'.")
      .def_static("family", [](const std::string& spec) { return generate(FamilySpec::parse(spec)); },
                  py::arg("spec"), "A generated family, e.g. 'cube:3', 'vnk:4:2', 'jnq:2:3', 'perm:3', 'ag:2:3'.")
      .def_static("from_text", [](const std::string& text) { return parse_point_set(text); }, py::arg("text"))
      .def("to_text", &write_point_set)
      .def_property_readonly("field", &PointSet::field)
      .def_property_readonly("dim", &PointSet::dim)
      .def_property_readonly("points", &points_of)
      .def("index", [](const PointSet& s, const py::sequence& p) { return s.index_of(point_from_python(s.field(), p)); })
      .def("is_zero_one", &PointSet::is_zero_one)
      .def("__len__", &PointSet::size)
      .def("__repr__", [](const PointSet& s) {
        return "PointSet(" + std::to_string(s.size()) + " points in " + s.field().name() + "^" +
               std::to_string(s.dim()) + ")";
      });

  py::class_<GroebnerData>(m, "GroebnerBasis")
      .def(py::init<PointSet>(), py::arg("points"))
      .def_property_readonly("basis", [](const GroebnerData& g) { return texts(g.basis()); })
      .def_property_readonly("standard_monomials",
                             [](const GroebnerData& g) {
                               std::vector<std::string> out;
                               for (const Monomial& mono : g.standard_monomials()) out.push_back(mono.to_string());
                               return out;
                             })
      .def_property_readonly("max_standard_degree", &GroebnerData::max_standard_degree)
      .def("separating_degree",
           [](const GroebnerData& g, std::size_t i) { return g.separating_degree(checked(g.points(), i)); },
           py::arg("index"))
      .def("indicator",
           [](const GroebnerData& g, std::size_t i) {
             return g.indicator_expansion(checked(g.points(), i)).polynomial.to_string();
           },
           py::arg("index"))
      .def("normal_form",
           [](const GroebnerData& g, const std::string& f) {
             return g.normal_form(Polynomial::parse(f, g.field(), g.nvars())).to_string();
           },
           py::arg("polynomial"))
      .def("check_invariants", &GroebnerData::check_invariants);

  m.def("counting_lower_bound", [](long n, long count) { return counting_lower_bound(n, mpz_class(count)).value; },
        py::arg("n"), py::arg("count"));
  m.def("cube_counting_lower_bound",
        [](long n, long count) { return cube_counting_lower_bound(n, mpz_class(count)).value; }, py::arg("n"),
        py::arg("count"));
  m.def("certificate_lower_bound",
        [](const PointSet& set, std::optional<std::size_t> index) {
          std::optional<Point> v;
          if (index) v = set[checked(set, *index)];
          const BoundReport r = certificate_lower_bound(set, v);
          return py::make_tuple(r.value, *r.certificate_index);
        },
        py::arg("points"), py::arg("index") = py::none(),
        "Returns (bound, point index). Without an index the maximizing point is reported.");
  m.def("binomial_inequalities_hold",
        [](long n, long k) { return check_binomial_inequalities(n, k).passed(); }, py::arg("n"), py::arg("k"));

  m.def("min_almost_cover",
        [](const PointSet& set, std::size_t index, std::uint64_t budget) {
          SolveOptions opts;
          opts.budget = budget;
          const GroebnerData gb(set);
          const std::size_t i = checked(set, index);
          CoverSolution s;
          {
            py::gil_scoped_release release;
            s = min_almost_cover(gb, i, opts);
          }
          return solution_dict(s);
        },
        py::arg("points"), py::arg("index"), py::arg("budget") = 10'000'000);
  m.def("ac_numbers",
        [](const PointSet& set, std::optional<std::string> symmetry_of, unsigned threads, std::uint64_t budget) {
          AcOptions opts;
          opts.solve.budget = budget;
          opts.threads = threads;
          if (symmetry_of) opts.symmetry = symmetry_generators(FamilySpec::parse(*symmetry_of));
          AcNumbers numbers;
          {
            py::gil_scoped_release release;
            numbers = ac_numbers(set, opts);
          }
          py::list per_point;
          for (const CoverSolution& s : numbers.per_point) per_point.append(solution_dict(s));
          py::dict d;
          d["AC"] = numbers.max_value;
          d["ac"] = numbers.min_value;
          d["optimal"] = numbers.optimal;
          d["per_point"] = per_point;
          return d;
        },
        py::arg("points"), py::arg("symmetry_of") = py::none(), py::arg("threads") = 1,
        py::arg("budget") = 10'000'000,
        "symmetry_of names the family whose symmetry group reduces the work, e.g. 'cube:3'.");
  m.def("verify_cover",
        [](const PointSet& set, std::size_t index, const std::vector<std::pair<py::sequence, py::object>>& hs) {
          std::vector<Hyperplane> planes;
          for (const auto& [normal, offset] : hs) planes.push_back(hyperplane_from_python(set.field(), normal, offset));
          return verify_cover(set, set[checked(set, index)], planes);
        },
        py::arg("points"), py::arg("index"), py::arg("hyperplanes"),
        "hyperplanes is a list of (normal, offset) pairs for normal . x = offset.");
  m.def("verify_suite",
        [](const std::string& suite, long max_n) {
          VerifyOptions opts;
          opts.max_n = max_n;
          const VerifyReport r = run_verify_suite(suite, opts);
          py::list checks;
          for (const VerifyCheck& c : r.checks) {
            py::dict d;
            d["name"] = c.name;
            d["passed"] = c.passed;
            d["detail"] = c.detail;
            checks.append(d);
          }
          py::dict out;
          out["suite"] = r.suite;
          out["max_n"] = r.max_n;
          out["passed"] = r.passed();
          out["checks"] = checks;
          return out;
        },
        py::arg("suite"), py::arg("max_n") = 0);
  m.attr("verify_suites") = verify_suite_names();
}
