// SPDX-License-Identifier: Apache-2.0
//
// Python bindings. Exact values cross the boundary losslessly: the library's
// rationals become fractions.Fraction, big integers become Python ints, and
// integral arguments of any size are accepted back.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "dedesum/cone2d.hpp"
#include "dedesum/dedekind.hpp"
#include "dedesum/errors.hpp"
#include "dedesum/fourier.hpp"
#include "dedesum/identities.hpp"
#include "dedesum/partition.hpp"
#include "dedesum/rational.hpp"
#include "dedesum/sawtooth.hpp"
#include "dedesum/verify.hpp"

namespace py = pybind11;
using namespace dedesum;

namespace {

py::object to_fraction(const Rational& r) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.str());
}

py::object to_pyint(const Integer& z) {
    return py::module_::import("builtins").attr("int")(z.get_str());
}

Integer integer_in(py::handle h) {
    if (!py::isinstance<py::int_>(h))
        throw ValidationError("expected an integer");
    return Integer(py::str(h).cast<std::string>(), 10);
}

Rational rational_in(py::handle h) {
    if (py::isinstance<py::float_>(h))
        throw ValidationError(
            "floats are not accepted; pass a Fraction, int, or 'p/q' string");
    // int, Fraction and "p/q" strings all stringify to parseable forms.
    return Rational::parse(py::str(h).cast<std::string>());
}

PartsTuple parts_in(const std::vector<std::int64_t>& parts) {
    return PartsTuple(parts);
}

cone2d::Vec2 vec_in(std::pair<long, long> v) { return {v.first, v.second}; }

py::dict term_out(const cone2d::SignedConeTerm& t) {
    py::dict d;
    d["sign"] = t.sign;
    d["apex"] = py::make_tuple(to_pyint(t.apex.x), to_pyint(t.apex.y));
    d["b1"] = py::make_tuple(to_pyint(t.b1.x), to_pyint(t.b1.y));
    d["b2"] = py::make_tuple(to_pyint(t.b2.x), to_pyint(t.b2.y));
    return d;
}

py::dict suite_out(const verify::SuiteResult& r) {
    py::dict d;
    d["suite"] = r.suite;
    d["seed"] = r.seed;
    d["checked"] = r.checked;
    d["failures"] = r.failures;
    d["pass"] = r.pass();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Exact Dedekind-sum family (classical, Rademacher, Zagier, "
        "Fourier-Dedekind), the restricted-partition counting formula built "
        "from them, reciprocity residuals, and 2D signed unimodular cone "
        "decomposition. All results are exact (fractions.Fraction / int).";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<SingularityError>(m, "SingularityError",
                                             PyExc_ZeroDivisionError);
    py::register_exception<InternalInconsistencyError>(
        m, "InternalInconsistencyError", PyExc_RuntimeError);

    m.def("sawtooth",
          [](py::handle x) { return to_fraction(sawtooth(rational_in(x))); },
          py::arg("x"), "Sawtooth ((x)): {x} - 1/2 off the integers, 0 on them.");
    m.def("frac", [](py::handle x) { return to_fraction(frac(rational_in(x))); },
          py::arg("x"), "Fractional part {x} in [0, 1).");
    m.def("bernoulli2",
          [](py::handle x) { return to_fraction(bernoulli2(rational_in(x))); },
          py::arg("x"), "Periodized second Bernoulli polynomial {x}^2 - {x} + 1/6.");

    m.def("dedekind_naive",
          [](py::handle a, py::handle b) {
              return to_fraction(dedekind_naive(integer_in(a), integer_in(b)));
          },
          py::arg("a"), py::arg("b"),
          "Classical Dedekind sum s(a,b) by direct O(b) summation.");
    m.def("dedekind",
          [](py::handle a, py::handle b) {
              return to_fraction(dedekind_fast(integer_in(a), integer_in(b)));
          },
          py::arg("a"), py::arg("b"),
          "s(a,b) for coprime a,b via the reciprocity recursion "
          "(O(log min(a,b)) steps; fine for 256-bit inputs).");
    m.def("rademacher_sum",
          [](py::handle a, py::handle b, py::handle x, py::handle y) {
              return to_fraction(rademacher_sum(integer_in(a), integer_in(b),
                                                rational_in(x), rational_in(y)));
          },
          py::arg("a"), py::arg("b"), py::arg("x"), py::arg("y"),
          "Dedekind-Rademacher sum s(a,b;x,y).");
    m.def("knuth_sum",
          [](py::handle a, py::handle b, py::handle n) {
              return to_fraction(
                  knuth_sum(integer_in(a), integer_in(b), integer_in(n)));
          },
          py::arg("a"), py::arg("b"), py::arg("n"),
          "Shifted sum s(a,b; n/b, 0).");

    m.def("fourier_dedekind",
          [](py::handle n, const std::vector<std::int64_t>& parts, std::int64_t a0) {
              return to_fraction(fourier_dedekind(integer_in(n), parts, a0));
          },
          py::arg("n"), py::arg("parts"), py::arg("a0"),
          "Fourier-Dedekind sum sigma_n(parts; a0), exact.");
    m.def("zagier_sum",
          [](std::int64_t a0, const std::vector<std::int64_t>& parts) {
              return to_fraction(zagier_sum(a0, parts));
          },
          py::arg("a0"), py::arg("parts"),
          "Zagier's higher-dimensional Dedekind sum s(a0; parts).");
    m.def("dedekind_via_zagier",
          [](std::int64_t a, std::int64_t b) {
              return to_fraction(dedekind_via_zagier(a, b));
          },
          py::arg("a"), py::arg("b"),
          "s(a,b) through the cotangent identity -(1/4) s(b; a, 1).");

    m.def("partition_count",
          [](const std::vector<std::int64_t>& parts, std::int64_t n) {
              return to_pyint(partition_count(parts_in(parts), n));
          },
          py::arg("parts"), py::arg("n"),
          "Number of ways to write n over the parts (DP oracle).");
    m.def("interior_count",
          [](const std::vector<std::int64_t>& parts, std::int64_t n) {
              return to_pyint(interior_count(parts_in(parts), n));
          },
          py::arg("parts"), py::arg("n"),
          "Representations with every coefficient >= 1.");
    m.def("partition_formula",
          [](const std::vector<std::int64_t>& parts, std::int64_t n) {
              return to_pyint(partition_formula(parts_in(parts), n).num());
          },
          py::arg("parts"), py::arg("n"),
          "The q + sum of Fourier-Dedekind sums counting formula (n >= 0).");
    m.def("interior_formula",
          [](const std::vector<std::int64_t>& parts, std::int64_t n) {
              return to_pyint(interior_formula(parts_in(parts), n).num());
          },
          py::arg("parts"), py::arg("n"),
          "Interior counterpart of the counting formula (n >= 1).");
    m.def("q_value",
          [](const std::vector<std::int64_t>& parts, py::handle n) {
              return to_fraction(q_value(parts_in(parts), integer_in(n)));
          },
          py::arg("parts"), py::arg("n"),
          "Polynomial part q(parts, n); n may be negative.");
    m.def("q_polynomial",
          [](const std::vector<std::int64_t>& parts) {
              py::list out;
              for (const auto& c : q_polynomial(parts_in(parts)))
                  out.append(to_fraction(c));
              return out;
          },
          py::arg("parts"),
          "Coefficients (constant first) of the polynomial part.");
    m.def("quasipolynomial",
          [](const std::vector<std::int64_t>& parts) {
              QuasiPolynomial qp = emit_quasipolynomial(parts_in(parts));
              py::list poly, tables;
              for (const auto& c : qp.poly) poly.append(to_fraction(c));
              for (const auto& t : qp.tables) {
                  py::list tl;
                  for (const auto& v : t) tl.append(to_fraction(v));
                  tables.append(tl);
              }
              py::dict d;
              d["poly"] = poly;
              d["tables"] = tables;
              return d;
          },
          py::arg("parts"),
          "Counting quasipolynomial: {'poly': [...], 'tables': [[...] per part]}; "
          "value at n is poly(n) + sum_j tables[j][n % len(tables[j])].");

    m.def("dedekind_residual",
          [](py::handle a, py::handle b) {
              return to_fraction(dedekind_residual(integer_in(a), integer_in(b)));
          },
          py::arg("a"), py::arg("b"));
    m.def("rademacher_residual",
          [](py::handle a, py::handle b, py::handle x, py::handle y) {
              return to_fraction(rademacher_residual(
                  integer_in(a), integer_in(b), rational_in(x), rational_in(y)));
          },
          py::arg("a"), py::arg("b"), py::arg("x"), py::arg("y"));
    m.def("gessel_residual",
          [](std::int64_t p, std::int64_t q, py::handle n) {
              return to_fraction(gessel_residual(p, q, integer_in(n)));
          },
          py::arg("p"), py::arg("q"), py::arg("n"));
    m.def("general_residual",
          [](const std::vector<std::int64_t>& parts, py::handle n) {
              return to_fraction(general_residual(parts_in(parts), integer_in(n)));
          },
          py::arg("parts"), py::arg("n"));
    m.def("zagier_residual",
          [](const std::vector<std::int64_t>& parts) {
              return to_fraction(zagier_residual(parts_in(parts)));
          },
          py::arg("parts"));
    m.def("raddedsum_residual",
          [](py::handle a, std::int64_t b, py::handle n) {
              return to_fraction(raddedsum_residual(integer_in(a), b, integer_in(n)));
          },
          py::arg("a"), py::arg("b"), py::arg("n"));

    m.def("cone_index",
          [](std::pair<long, long> u, std::pair<long, long> w) {
              return to_pyint(cone2d::cone_index(cone2d::Cone2(vec_in(u), vec_in(w))));
          },
          py::arg("u"), py::arg("w"));
    m.def("cone_decompose",
          [](std::pair<long, long> u, std::pair<long, long> w) {
              cone2d::Cone2 c(vec_in(u), vec_in(w));
              py::list out;
              for (const auto& t : cone2d::decompose(c)) out.append(term_out(t));
              return out;
          },
          py::arg("u"), py::arg("w"),
          "Signed unimodular decomposition; list of "
          "{'sign', 'apex', 'b1', 'b2'} terms.");
    m.def("cone_series_verify",
          [](std::pair<long, long> u, std::pair<long, long> w, std::int64_t N) {
              cone2d::Cone2 c(vec_in(u), vec_in(w));
              return cone2d::series_verify(cone2d::decompose(c), c, N);
          },
          py::arg("u"), py::arg("w"), py::arg("N") = 8,
          "Decompose and compare the truncated expansion with brute force.");
    m.def("cone_enumerate",
          [](std::pair<long, long> u, std::pair<long, long> w, std::int64_t N) {
              cone2d::Cone2 c(vec_in(u), vec_in(w));
              py::list out;
              for (const auto& p : cone2d::enumerate_bruteforce(c, N))
                  out.append(py::make_tuple(to_pyint(p.x), to_pyint(p.y)));
              return out;
          },
          py::arg("u"), py::arg("w"), py::arg("N"),
          "Lattice points of the closed cone with sup-norm <= N.");

    m.def("verify_suite",
          [](const std::string& name, std::int64_t max, std::uint64_t seed) {
              verify::SuiteOptions opts;
              opts.max = max;
              opts.seed = seed;
              py::list out;
              for (const auto& r : verify::run_suites(name, opts))
                  out.append(suite_out(r));
              return out;
          },
          py::arg("name"), py::arg("max") = 0, py::arg("seed") = 1,
          "Run a verification suite; see the CLI 'verify' command for names.");

#ifdef VERSION_INFO
#define DEDESUM_STR(x) #x
#define DEDESUM_XSTR(x) DEDESUM_STR(x)
    m.attr("__version__") = DEDESUM_XSTR(VERSION_INFO);
#else
    m.attr("__version__") = "0.1.0";
#endif
}
