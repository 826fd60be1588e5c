#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "amat/covariants.hpp"
#include "amat/element.hpp"
#include "amat/fastmul.hpp"
#include "amat/numeric.hpp"
#include "amat/search.hpp"

namespace py = pybind11;
using namespace amat;

// Exact values cross the boundary as decimal strings ("-3", "7/13"); the
// Python package turns them into int and Fraction.
namespace {

using Strings = std::vector<std::string>;

Element element_of(const Strings& coords) {
  std::vector<Rat> c;
  for (const auto& s : coords) c.push_back(parse_rat(s));
  return Element(std::move(c));
}

Strings strings_of(const std::vector<Rat>& v) {
  Strings out;
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

BinaryForm form_of(const Strings& coeffs) {
  std::vector<Int> c;
  for (const auto& s : coeffs) c.push_back(parse_int(s));
  return BinaryForm(c);
}

template <class M>
std::vector<Strings> rows_of(const M& m) {
  std::vector<Strings> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_same_v<M, PolyMatrix>)
        out[i].push_back(m(i, j).to_string());
      else
        out[i].push_back(to_string(m(i, j)));
    }
  return out;
}

NumberField field_of(const std::string& a0, const Strings& coeffs) {
  return make_field(EssentialPair{parse_int(a0), form_of(coeffs)});
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic in number fields through arithmetic matrices";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def("form_discriminant", [](const Strings& coeffs) { return to_string(form_discriminant(form_of(coeffs))); });
  m.def("is_irreducible", [](const Strings& coeffs) { return is_irreducible(form_of(coeffs)); });

  py::class_<NumberField>(m, "NumberField")
      .def(py::init(&field_of), py::arg("a0"), py::arg("coeffs"))
      .def_property_readonly("degree", &NumberField::degree)
      .def_property_readonly("a0", [](const NumberField& f) { return to_string(f.a0()); })
      .def_property_readonly("coeffs", [](const NumberField& f) {
        Strings out;
        for (const auto& c : f.form().coeffs()) out.push_back(to_string(c));
        return out;
      })
      .def_property_readonly("discriminant", [](const NumberField& f) { return to_string(f.discriminant()); })
      .def("pair", [](const NumberField& f) { return f.pair().to_string(); })
      .def("matrix", [](const NumberField& f, const Strings& x) { return rows_of(arithmetic_matrix(f, element_of(x))); })
      .def("symbolic_matrix",
           [](const NumberField& f) { return rows_of(symbolic_arithmetic_matrix(f, default_coord_names(f.degree()))); })
      .def("basis_change", [](const NumberField& f) { return rows_of(basis_change_matrix(f)); })
      .def("add", [](const NumberField& f, const Strings& a, const Strings& b) {
        return strings_of(add(f, element_of(a), element_of(b)).coords());
      })
      .def("sub", [](const NumberField& f, const Strings& a, const Strings& b) {
        return strings_of(sub(f, element_of(a), element_of(b)).coords());
      })
      .def("mul", [](const NumberField& f, const Strings& a, const Strings& b) {
        return strings_of(mul(f, element_of(a), element_of(b)).coords());
      })
      .def("mul_fft", [](const NumberField& f, const Strings& a, const Strings& b) {
        return strings_of(mul_via_fft(f, element_of(a), element_of(b)).coords());
      })
      .def("inverse", [](const NumberField& f, const Strings& a) { return strings_of(inverse(f, element_of(a)).coords()); })
      .def("norm", [](const NumberField& f, const Strings& a) { return to_string(norm(f, element_of(a))); })
      .def("norm_oracle",
           [](const NumberField& f, const Strings& a) { return to_string(norm_resultant_oracle(f, element_of(a))); })
      .def("trace", [](const NumberField& f, const Strings& a) { return to_string(trace(f, element_of(a))); })
      .def("char_poly", [](const NumberField& f, const Strings& a) {
        const UniPoly p = char_poly(f, element_of(a));
        std::vector<Rat> c;
        for (long k = 0; k <= p.degree(); ++k) c.push_back(p.coeff(static_cast<std::size_t>(k)));
        return strings_of(c);
      })
      .def("diagonalization_residual", [](const NumberField& f, const Strings& a) {
        return static_cast<double>(diagonalization_residual(f, element_of(a)));
      });

  m.def("quartic_syzygy", [](const Strings& coeffs) { return quartic_syzygy_check(form_of(coeffs)); });
  m.def("cubic_syzygy", [](const Strings& coeffs) { return cubic_syzygy_check(form_of(coeffs)); });
  m.def("quartic_invariants", [](const Strings& coeffs) {
    const auto inv = quartic_invariants(form_of(coeffs));
    return std::make_pair(to_string(inv.I), to_string(inv.J));
  });

  m.def(
      "search",
      [](const std::string& disc, int degree, int height, int max_a0, unsigned threads) {
        Strings out;
        py::gil_scoped_release release;
        for (const auto& p : search_essential_pairs(parse_int(disc), degree, height, max_a0, SearchOptions{threads}))
          out.push_back(p.to_string());
        return out;
      },
      py::arg("disc"), py::arg("degree"), py::arg("height"), py::arg("max_a0") = 1, py::arg("threads") = 0);

  m.def("verify_tables", [](const Strings& paths) {
    std::vector<TableRow> rows;
    for (const auto& p : paths) {
      auto more = load_table(p);
      rows.insert(rows.end(), more.begin(), more.end());
    }
    const TableReport report = verify_tables(rows);
    std::vector<std::pair<std::size_t, std::string>> failures;
    for (const auto& f : report.failures) failures.emplace_back(f.row.line, f.reason);
    return std::make_pair(report.rows, failures);
  });

  m.def(
      "matmul_count",
      [](std::size_t size, const std::string& strategy, std::uint64_t seed) {
        const Strategy s = parse_strategy(strategy);
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<long> dist(-100, 100);
        IntMatrix a(size, size), b(size, size);
        for (std::size_t i = 0; i < size; ++i)
          for (std::size_t j = 0; j < size; ++j) {
            a(i, j) = dist(rng);
            b(i, j) = dist(rng);
          }
        MulCounter c;
        IntMatrix r;
        if (s == Strategy::schoolbook) r = schoolbook_multiply(a, b, &c);
        if (s == Strategy::ww) r = ww_multiply(a, b, &c);
        if (s == Strategy::ww_recursive) r = ww_recursive(a, b, &c);
        if (!(r == schoolbook_multiply(a, b))) fail(Errc::internal_error, "product disagrees with schoolbook");
        return std::make_pair(c.scalar_mults, c.scalar_adds);
      },
      py::arg("size"), py::arg("strategy") = "ww", py::arg("seed") = 1);
}
