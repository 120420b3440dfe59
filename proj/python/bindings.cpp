#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "powersum/cli.hpp"
#include "powersum/linalg.hpp"
#include "powersum/methods.hpp"
#include "powersum/sequences.hpp"
#include "powersum/symbolic.hpp"

namespace py = pybind11;
using namespace powersum;

// Exact values cross the boundary as decimal "p/q" strings; the Python
// package turns them into int / fractions.Fraction.

namespace {

using Strings = std::vector<std::string>;

Strings coefficient_strings(const Polynomial& p) {
  Strings out;
  for (const auto& c : p.coefficients()) out.push_back(c.fraction_string());
  return out;
}

std::vector<Rational> parse_vector(const Strings& values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(Rational::parse(v));
  return out;
}

Matrix parse_matrix(const std::vector<Strings>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = Rational::parse(rows[r][c]);
  }
  return m;
}

Strings vector_strings(const std::vector<Rational>& v) {
  Strings out;
  for (const auto& x : v) out.push_back(x.fraction_string());
  return out;
}

Method method_from(const std::string& name) {
  auto m = parse_method(name);
  if (!m) throw std::invalid_argument("unknown method '" + name + "'");
  return *m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact power-sum polynomials (string-encoded core bindings)";

  m.def("methods", [] {
    Strings names;
    for (Method x : kAllMethods) names.emplace_back(method_name(x));
    return names;
  });
  m.def(
      "power_sum",
      [](unsigned d, const std::string& method) { return coefficient_strings(power_sum(d, method_from(method))); },
      py::arg("d"), py::arg("method") = "lhopital", py::call_guard<py::gil_scoped_release>());
  m.def("brute_force_power_sum", [](unsigned d, std::uint64_t n) { return brute_force_power_sum(d, n).str(); },
        py::arg("d"), py::arg("n"));
  m.def("falling_power_sum", [](unsigned k) { return coefficient_strings(falling_power_sum_poly(k)); },
        py::arg("k"));
  m.def("recover_p2_via_plain_derivative", [] { return coefficient_strings(recover_p2_via_plain_derivative()); });
  m.def(
      "lhopital_trace",
      [](unsigned d) {
        GeomRational g = geometric_seed();
        for (unsigned i = 0; i < d; ++i) g = apply_x_ddx(g);
        const LimitTrace t = lhopital_trace(g);
        std::vector<Strings> at_one;
        for (const auto& p : t.values_at_one) at_one.push_back(coefficient_strings(p));
        return py::make_tuple(coefficient_strings(t.limit), t.steps, at_one);
      },
      py::arg("d"));

  m.def(
      "stirling_row",
      [](unsigned k) {
        const StirlingTable s(k);
        Strings row;
        for (unsigned j = 0; j <= k; ++j) row.push_back(s(k, j).str());
        return row;
      },
      py::arg("k"));
  m.def("bernoulli", [](unsigned max_j) { return vector_strings(bernoulli_table(max_j).values()); },
        py::arg("max_j"));

  m.def(
      "vandermonde",
      [](unsigned d) {
        const Matrix v = vandermonde(d);
        std::vector<Strings> rows(v.rows());
        for (std::size_t r = 0; r < v.rows(); ++r) {
          for (std::size_t c = 0; c < v.cols(); ++c) rows[r].push_back(v(r, c).fraction_string());
        }
        return rows;
      },
      py::arg("d"));
  m.def("determinant", [](const std::vector<Strings>& rows) { return determinant(parse_matrix(rows)).fraction_string(); },
        py::arg("matrix"));
  m.def(
      "cramer_solve",
      [](const std::vector<Strings>& rows, const Strings& b) {
        return vector_strings(cramer_solve(parse_matrix(rows), parse_vector(b)));
      },
      py::arg("matrix"), py::arg("b"));
  m.def(
      "gauss_solve",
      [](const std::vector<Strings>& rows, const Strings& b) {
        return vector_strings(gauss_solve(parse_matrix(rows), parse_vector(b)));
      },
      py::arg("matrix"), py::arg("b"));

  m.def(
      "geometric_sum",
      [](const std::string& a0, const std::string& r, std::uint64_t n) {
        return geometric_sum(Rational::parse(a0), Rational::parse(r), n).fraction_string();
      },
      py::arg("a0"), py::arg("r"), py::arg("n"));
  m.def("fib_doubling", [](std::uint64_t n) { return fib_doubling(n).str(); }, py::arg("n"));
  m.def("fib_binet", [](std::uint64_t n) { return fib_binet(n).str(); }, py::arg("n"));
  m.def(
      "fib_square_sum",
      [](std::uint64_t n) {
        auto [sum, product] = fib_square_sum(n);
        return py::make_tuple(sum.str(), product.str());
      },
      py::arg("n"));

  m.def(
      "format_polynomial",
      [](const Strings& coeffs, const std::string& fmt) {
        auto f = cli::parse_format(fmt);
        if (!f) throw std::invalid_argument("unknown format '" + fmt + "'");
        return cli::format_polynomial(cli::parse_coefficients(coeffs), *f);
      },
      py::arg("coefficients"), py::arg("fmt") = "plain");
  m.def(
      "verify_json", [](unsigned dmax, unsigned nmax) { return cli::render_json(cli::run_verify(dmax, nmax)); },
      py::arg("dmax") = 20, py::arg("nmax") = 50, py::call_guard<py::gil_scoped_release>());
  m.def(
      "run_cli",
      [](const Strings& args) {
        std::string out;
        std::string err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out, err);
      },
      py::arg("args"));
}
