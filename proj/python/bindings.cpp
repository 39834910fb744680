#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fpdir/arith.hpp"
#include "fpdir/bilinear.hpp"
#include "fpdir/charsums.hpp"
#include "fpdir/directions.hpp"
#include "fpdir/equidist.hpp"
#include "fpdir/errors.hpp"
#include "fpdir/special.hpp"
#include "fpdir/verify.hpp"

namespace py = pybind11;
using namespace fpdir;

namespace {

py::dict moments_dict(const charsums::MomentReport& m) {
  py::dict d;
  d["p"] = m.p;
  d["n"] = m.n;
  d["n1"] = m.n1;
  d["n_minus1"] = m.n_minus1;
  d["even_moment"] = m.even_moment;
  d["odd_moment"] = m.odd_moment;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "fpdir core bindings";

  // std::domain_error and std::length_error surface as ValueError,
  // internal consistency failures as RuntimeError.
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  m.def("is_prime", &arith::is_prime, py::arg("n"));
  m.def("next_prime_at_least", &arith::next_prime_at_least, py::arg("n"));
  m.def(
      "mod_inverse", [](std::int64_t x, std::uint64_t mod) { return arith::mod_inverse(x, mod).value(); },
      py::arg("x"), py::arg("m"));

  m.def("dilog", &special::dilog, py::arg("x"));
  m.def(
      "density", [](double lambda) { return special::density(special::Lambda(lambda)); }, py::arg("lam"));
  m.def(
      "predict",
      [](std::uint64_t p, std::uint64_t n) {
        const auto r = special::predict(p, n);
        py::dict d;
        d["directions_main"] = r.directions_main;
        d["nsolutions_main"] = r.nsolutions_main;
        d["regime"] = std::string(special::to_string(r.regime));
        return d;
      },
      py::arg("p"), py::arg("n"));
  m.def(
      "density_curve",
      [](double step) {
        std::vector<std::tuple<double, double, double>> out;
        for (const auto& pt : special::density_curve(step)) out.emplace_back(pt.lambda, pt.density, pt.lambda_squared);
        return out;
      },
      py::arg("step") = 0.01);

  m.def(
      "count_fast",
      [](std::uint64_t p, std::uint64_t n, unsigned threads) {
        py::gil_scoped_release release;
        return bilinear::count_fast(p, n, threads).value;
      },
      py::arg("p"), py::arg("n"), py::arg("threads") = 1);
  m.def(
      "count_bruteforce", [](std::uint64_t p, std::uint64_t n) { return bilinear::count_bruteforce(p, n).value; },
      py::arg("p"), py::arg("n"));
  m.def(
      "per_pair_solution",
      [](std::uint64_t a, std::uint64_t b, std::uint64_t p, std::uint64_t n) -> py::object {
        const auto r = bilinear::per_pair_solution(a, b, p, n);
        if (!r.solution) return py::none();
        return py::make_tuple(r.solution->x, r.solution->y);
      },
      py::arg("a"), py::arg("b"), py::arg("p"), py::arg("n"));
  m.def(
      "solution_pairs",
      [](std::uint64_t p, std::uint64_t n, unsigned threads) {
        std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t>> out;
        for (const auto& s : bilinear::solution_pairs(p, n, threads))
          out.emplace_back(s.a, s.b, s.solution->x, s.solution->y);
        return out;
      },
      py::arg("p"), py::arg("n"), py::arg("threads") = 1);
  m.def(
      "breakdown_terms",
      [](std::uint64_t p, std::uint64_t n) {
        const auto t = bilinear::breakdown_terms(p, n);
        py::dict d;
        d["main1"] = t.main1;
        d["main2"] = t.main2;
        d["frac_sum"] = t.frac_sum;
        d["total"] = t.total;
        d["pairs"] = t.pairs;
        return d;
      },
      py::arg("p"), py::arg("n"));
  m.def(
      "small_solution_pairs", [](std::uint64_t p) { return bilinear::small_solution_pairs(p); }, py::arg("p"));
  m.def("verify_ac_conclusion", &bilinear::verify_ac_conclusion, py::arg("a"), py::arg("b"), py::arg("p"));

  m.def(
      "directions_fp_bruteforce",
      [](std::uint64_t p, std::uint64_t n) { return directions::directions_fp_bruteforce(p, n); }, py::arg("p"),
      py::arg("n"));
  m.def(
      "directions_fp_fast",
      [](std::uint64_t p, std::uint64_t n) {
        const auto c = directions::directions_fp_fast(p, n);
        py::dict d;
        d["count_fp"] = c.count_fp;
        d["count_q"] = c.count_q;
        d["positive_q"] = c.positive_q;
        d["negative_q"] = c.negative_q;
        d["overlap_fp"] = c.overlap_fp;
        return d;
      },
      py::arg("p"), py::arg("n"));
  m.def("directions_q", &directions::directions_q, py::arg("n"));
  m.def("coprime_pairs", &directions::coprime_pairs, py::arg("m"));

  m.def(
      "count_congruence",
      [](std::uint64_t u, std::uint64_t p, std::uint64_t n) { return charsums::count_congruence(u, p, n); },
      py::arg("u"), py::arg("p"), py::arg("n"));
  m.def(
      "parity_moments", [](std::uint64_t p, std::uint64_t n) { return moments_dict(charsums::parity_moments(p, n)); },
      py::arg("p"), py::arg("n"));
  m.def(
      "oracle_moments", [](std::uint64_t p, std::uint64_t n) { return moments_dict(charsums::oracle_moments(p, n)); },
      py::arg("p"), py::arg("n"));

  m.def(
      "inverse_sequence",
      [](std::uint64_t b, std::uint64_t p, double x) { return equidist::inverse_sequence(b, p, x).points; },
      py::arg("b"), py::arg("p"), py::arg("x"));
  m.def(
      "discrepancy_exact", [](const std::vector<double>& pts) { return equidist::discrepancy_exact(pts); },
      py::arg("points"));
  m.def(
      "erdos_turan_bound",
      [](const std::vector<double>& pts, std::uint64_t k) { return equidist::erdos_turan_bound(pts, k); },
      py::arg("points"), py::arg("k"));
  m.def(
      "kloosterman_incomplete",
      [](std::uint64_t mod, std::int64_t t, double y, double z) {
        const auto s = equidist::kloosterman_incomplete(mod, t, y, z);
        py::dict d;
        d["magnitude"] = s.magnitude;
        d["terms"] = s.terms;
        d["scale"] = s.scale;
        d["ratio"] = s.ratio;
        return d;
      },
      py::arg("m"), py::arg("t"), py::arg("y"), py::arg("z"));
  m.def(
      "bernoulli_identity_check",
      [](std::int64_t num, std::int64_t den, std::uint64_t q) {
        return equidist::bernoulli_identity_check(equidist::Rational(num, den), q);
      },
      py::arg("num"), py::arg("den"), py::arg("q"));
  m.def(
      "reduced_residue_fracsum",
      [](std::int64_t num, std::int64_t den, std::uint64_t b) {
        const auto r = equidist::reduced_residue_fracsum(equidist::Rational(num, den), b);
        return py::module_::import("fractions").attr("Fraction")(r.num(), r.den());
      },
      py::arg("num"), py::arg("den"), py::arg("b"));

  m.def(
      "run_suite",
      [](const std::string& suite, unsigned threads) {
        const auto s = verify::parse_suite(suite);
        if (!s) throw py::value_error("suite must be 'small' or 'all'");
        std::vector<verify::CriterionResult> results;
        {
          py::gil_scoped_release release;
          results = verify::run_suite(*s, threads);
        }
        py::list out;
        for (const auto& r : results) {
          py::dict d;
          d["id"] = r.id;
          d["name"] = r.name;
          d["passed"] = r.passed;
          d["detail"] = r.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("suite") = "small", py::arg("threads") = 1);
}
