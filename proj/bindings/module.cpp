// Python bindings exposing the main operations on plain Python types;
// big integers cross the boundary exactly as Python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "brieskorn/alexander.hpp"
#include "brieskorn/errors.hpp"
#include "brieskorn/pham.hpp"
#include "brieskorn/plumbing.hpp"
#include "brieskorn/puiseux.hpp"

namespace py = pybind11;
namespace bk = brieskorn;

namespace {

py::int_ to_py(const mpz_class& z) {
  PyObject* obj = PyLong_FromString(z.get_str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::list poly_to_py(const bk::IntegerPolynomial& p) {
  py::list out;
  for (const mpz_class& c : p.coefficients()) out.append(to_py(c));
  return out;
}

bk::EnumerationOptions make_options(std::uint64_t budget, unsigned workers,
                                    const std::string& path) {
  bk::EnumerationOptions opts = bk::EnumerationOptions::from_environment();
  if (budget) opts.budget = budget;
  if (workers) opts.workers = workers;
  if (path == "auto")
    opts.path = bk::EnumerationOptions::Path::kAuto;
  else if (path == "direct")
    opts.path = bk::EnumerationOptions::Path::kDirect;
  else if (path == "convolution")
    opts.path = bk::EnumerationOptions::Path::kConvolution;
  else
    throw bk::input_error("path must be one of auto|direct|convolution");
  return opts;
}

bk::PuiseuxBranch make_branch(
    const std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>>&
        terms) {
  std::vector<bk::PuiseuxTerm> out;
  for (const auto& [en, ed, cn, cd] : terms) {
    if (cd == 0) throw bk::input_error("branch term: zero coefficient denominator");
    bk::PuiseuxTerm t;
    t.exp_num = en;
    t.exp_den = ed;
    t.coefficient = mpq_class(mpz_class(static_cast<long>(cn)),
                              mpz_class(static_cast<long>(cd)));
    t.coefficient.canonicalize();
    out.push_back(t);
  }
  return bk::PuiseuxBranch(std::move(out));
}

bk::CharacteristicPairs make_pairs(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
  std::vector<bk::CharacteristicPair> out;
  for (const auto& [p, q] : pairs) out.push_back({p, q});
  return bk::CharacteristicPairs(std::move(out));
}

bk::BivariatePolynomial make_bivariate(const py::object& poly) {
  if (py::isinstance<py::str>(poly))
    return bk::BivariatePolynomial::parse_expression(poly.cast<std::string>());
  bk::BivariatePolynomial out;
  for (const auto& term :
       poly.cast<std::vector<std::tuple<std::int64_t, std::uint32_t, std::uint32_t>>>()) {
    out.add_term(std::get<1>(term), std::get<2>(term),
                 mpz_class(static_cast<long>(std::get<0>(term))));
  }
  return out;
}

bk::PlumbingGraph make_graph(
    const std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>>& vertices,
    const std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>>& edges) {
  std::vector<bk::PlumbingVertex> vs;
  for (const auto& [id, genus, euler] : vertices) vs.push_back({id, genus, euler});
  std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, std::int64_t>> es;
  for (const auto& [i, j, w] : edges) es.push_back({{i, j}, w});
  return bk::PlumbingGraph(std::move(vs), std::move(es));
}

bk::IntersectionMatrix make_matrix(const std::vector<std::vector<std::int64_t>>& rows) {
  bk::IntersectionMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw bk::input_error("matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j)
      m.at(i, j) = static_cast<long>(rows[i][j]);
  }
  return m;
}

py::dict smith_to_py(const bk::SmithForm& h) {
  py::dict out;
  py::list factors, coker;
  for (const mpz_class& d : h.invariant_factors) factors.append(to_py(d));
  for (const mpz_class& d : h.cokernel) coker.append(to_py(d));
  out["invariant_factors"] = factors;
  out["rank"] = h.rank;
  out["free_rank"] = h.free_rank;
  out["cokernel"] = coker;
  out["homology_sphere"] = h.is_trivial_cokernel();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact topological invariants of links of isolated hypersurface "
            "singularities";

  py::register_exception<bk::budget_error>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<bk::internal_error>(m, "InternalError", PyExc_AssertionError);

  m.def(
      "milnor_number",
      [](const std::vector<std::int64_t>& a) {
        return to_py(bk::milnor_number(bk::Exponents(a)));
      },
      py::arg("exponents"));

  m.def(
      "link_connectivity",
      [](const std::vector<std::int64_t>& a) {
        return bk::link_connectivity(bk::Exponents(a));
      },
      py::arg("exponents"));

  m.def("picard_lefschetz_self_intersection", &bk::picard_lefschetz_self_intersection,
        py::arg("n"));

  m.def(
      "is_homotopy_sphere",
      [](const std::vector<std::int64_t>& a) {
        return bk::is_homotopy_sphere(bk::Exponents(a));
      },
      py::arg("exponents"));

  m.def(
      "monodromy_spectrum",
      [](const std::vector<std::int64_t>& a, std::uint64_t budget, unsigned workers,
         const std::string& path) {
        const auto spec =
            bk::monodromy_spectrum(bk::Exponents(a), make_options(budget, workers, path));
        py::list out;
        for (const auto& [rot, mult] : spec.entries)
          out.append(py::make_tuple(py::make_tuple(rot.num, rot.den), to_py(mult)));
        return out;
      },
      py::arg("exponents"), py::arg("budget") = 0, py::arg("workers") = 0,
      py::arg("path") = "auto");

  m.def(
      "characteristic_factorization",
      [](const std::vector<std::int64_t>& a, std::uint64_t budget, unsigned workers,
         const std::string& path) {
        const auto fact = bk::characteristic_factorization(
            bk::Exponents(a), make_options(budget, workers, path));
        py::list out;
        for (const auto& [d, mult] : fact.multiplicity)
          out.append(py::make_tuple(d, to_py(mult)));
        return out;
      },
      py::arg("exponents"), py::arg("budget") = 0, py::arg("workers") = 0,
      py::arg("path") = "auto");

  m.def(
      "characteristic_polynomial",
      [](const std::vector<std::int64_t>& a, std::uint64_t budget, unsigned workers,
         const std::string& path) {
        return poly_to_py(bk::characteristic_polynomial(
            bk::Exponents(a), make_options(budget, workers, path)));
      },
      py::arg("exponents"), py::arg("budget") = 0, py::arg("workers") = 0,
      py::arg("path") = "auto");

  m.def(
      "signature_parts",
      [](const std::vector<std::int64_t>& a, std::uint64_t budget, unsigned workers,
         const std::string& path) {
        const auto parts =
            bk::signature_parts(bk::Exponents(a), make_options(budget, workers, path));
        py::dict out;
        out["value"] = to_py(parts.value());
        out["positive"] = to_py(parts.positive);
        out["negative"] = to_py(parts.negative);
        out["zero"] = to_py(parts.zero);
        return out;
      },
      py::arg("exponents"), py::arg("budget") = 0, py::arg("workers") = 0,
      py::arg("path") = "auto");

  m.def(
      "signature",
      [](const std::vector<std::int64_t>& a, std::uint64_t budget, unsigned workers,
         const std::string& path) {
        return to_py(bk::signature(bk::Exponents(a), make_options(budget, workers, path)));
      },
      py::arg("exponents"), py::arg("budget") = 0, py::arg("workers") = 0,
      py::arg("path") = "auto");

  m.def(
      "sphere_class",
      [](const std::vector<std::int64_t>& a, std::uint64_t budget, unsigned workers,
         const std::string& path) {
        const auto sc =
            bk::sphere_class(bk::Exponents(a), make_options(budget, workers, path));
        py::dict out;
        out["kind"] = bk::SphereClass::kind_name(sc.kind);
        if (sc.bp_multiple) out["bp_multiple"] = to_py(*sc.bp_multiple);
        if (sc.bp_mod28) out["bp_mod_28"] = *sc.bp_mod28;
        if (sc.arf_residue) out["delta_minus_one_mod_8"] = *sc.arf_residue;
        out["decided_by"] = sc.detail;
        return out;
      },
      py::arg("exponents"), py::arg("budget") = 0, py::arg("workers") = 0,
      py::arg("path") = "auto");

  m.def(
      "is_homology_3_sphere",
      [](const std::vector<std::int64_t>& a) {
        return bk::is_homology_3_sphere(bk::Exponents(a));
      },
      py::arg("exponents"));

  m.def(
      "geometry_type",
      [](const std::vector<std::int64_t>& a) {
        const auto g = bk::geometry_type(bk::Exponents(a));
        py::dict out;
        out["kind"] = bk::GeometryType::kind_name(g.kind);
        out["reciprocal_sum"] = py::make_tuple(to_py(g.reciprocal_sum.get_num()),
                                               to_py(g.reciprocal_sum.get_den()));
        return out;
      },
      py::arg("exponents"));

  m.def(
      "casson_invariant",
      [](const std::vector<std::int64_t>& a, std::uint64_t budget, unsigned workers,
         const std::string& path) {
        return to_py(
            bk::casson_invariant(bk::Exponents(a), make_options(budget, workers, path)));
      },
      py::arg("exponents"), py::arg("budget") = 0, py::arg("workers") = 0,
      py::arg("path") = "auto");

  m.def(
      "characteristic_pairs",
      [](const std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t,
                                      std::int64_t>>& terms) {
        const auto cp = bk::characteristic_pairs(make_branch(terms));
        py::list out;
        for (const auto& pq : cp.pairs()) out.append(py::make_tuple(pq.p, pq.q));
        return out;
      },
      py::arg("terms"));

  m.def(
      "cable_presentation",
      [](const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
        const auto cable = bk::cable_presentation(make_pairs(pairs));
        py::list out;
        for (const auto& st : cable.stages) out.append(py::make_tuple(st.winding, st.slope));
        return out;
      },
      py::arg("pairs"));

  m.def(
      "branch_milnor_number",
      [](const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
        return to_py(bk::branch_milnor_number(make_pairs(pairs)));
      },
      py::arg("pairs"));

  m.def(
      "alexander_torus_knot",
      [](std::int64_t p, std::int64_t q) {
        return poly_to_py(bk::alexander_torus_knot(p, q));
      },
      py::arg("p"), py::arg("q"));

  m.def(
      "alexander_iterated",
      [](const std::vector<std::pair<std::int64_t, std::int64_t>>& stages) {
        bk::CablePresentation cable;
        for (const auto& [p, s] : stages) cable.stages.push_back({p, s});
        return poly_to_py(bk::alexander_iterated(cable));
      },
      py::arg("stages"));

  m.def(
      "alexander_for_pairs",
      [](const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
        return poly_to_py(bk::alexander_for_pairs(make_pairs(pairs)));
      },
      py::arg("pairs"));

  m.def(
      "intersection_multiplicity",
      [](const std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t,
                                      std::int64_t>>& terms,
         const py::object& poly) {
        return to_py(
            bk::intersection_multiplicity(make_branch(terms), make_bivariate(poly)));
      },
      py::arg("terms"), py::arg("poly"));

  m.def(
      "named_graph",
      [](const std::string& name) {
        const auto g = bk::PlumbingGraph::named(name);
        py::list vs, es;
        for (const auto& v : g.vertices()) vs.append(py::make_tuple(v.id, v.genus, v.euler));
        for (const auto& e : g.edges()) es.append(py::make_tuple(e.i, e.j, e.weight));
        py::dict out;
        out["vertices"] = vs;
        out["edges"] = es;
        return out;
      },
      py::arg("name"));

  m.def(
      "intersection_matrix",
      [](const std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>>& vertices,
         const std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>>& edges) {
        const auto mtx = bk::intersection_matrix(make_graph(vertices, edges));
        py::list out;
        for (std::size_t i = 0; i < mtx.size(); ++i) {
          py::list row;
          for (std::size_t j = 0; j < mtx.size(); ++j) row.append(to_py(mtx.at(i, j)));
          out.append(row);
        }
        return out;
      },
      py::arg("vertices"), py::arg("edges"));

  m.def(
      "boundary_homology",
      [](const std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>>& vertices,
         const std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>>& edges) {
        return smith_to_py(bk::boundary_homology(make_graph(vertices, edges)));
      },
      py::arg("vertices"), py::arg("edges"));

  m.def(
      "euler_characteristic_boundary",
      [](const std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>>& vertices,
         const std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>>& edges) {
        return bk::euler_characteristic_boundary(make_graph(vertices, edges));
      },
      py::arg("vertices"), py::arg("edges"));

  m.def(
      "determinant",
      [](const std::vector<std::vector<std::int64_t>>& rows) {
        return to_py(bk::determinant(make_matrix(rows)));
      },
      py::arg("matrix"));

  m.def(
      "is_negative_definite",
      [](const std::vector<std::vector<std::int64_t>>& rows) {
        return bk::is_negative_definite(make_matrix(rows));
      },
      py::arg("matrix"));

  m.def(
      "matrix_signature",
      [](const std::vector<std::vector<std::int64_t>>& rows) {
        return bk::matrix_signature(make_matrix(rows));
      },
      py::arg("matrix"));

  m.def(
      "smith_normal_form",
      [](const std::vector<std::vector<std::int64_t>>& rows) {
        return smith_to_py(bk::smith_normal_form(make_matrix(rows)));
      },
      py::arg("matrix"));

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "0.1.0";
#endif
}
