#include <algorithm>

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zfhp/arith.hpp"
#include "zfhp/errors.hpp"
#include "zfhp/experiments.hpp"
#include "zfhp/functionals.hpp"
#include "zfhp/norms.hpp"
#include "zfhp/series.hpp"
#include "zfhp/special.hpp"
#include "zfhp/weights.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using cplx = std::complex<double>;

namespace {

template <class T>
py::array_t<T> to_array(std::span<const T> v) {
  py::array_t<T> out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

zfhp::ComplexSeries to_series(const std::vector<cplx>& coeffs) { return zfhp::ComplexSeries(coeffs); }

py::dict classification_dict(const zfhp::ClassificationResult& r) {
  py::object c4 = py::none();
  if (r.c4_halfplane) c4 = py::float_(*r.c4_halfplane);
  return py::dict("family"_a = r.family.name(), "params"_a = r.family.params(), "c4_r"_a = c4,
                  "rm_bounded"_a = r.easy_c3_bounded_rm, "strip"_a = zfhp::to_string(r.strip));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Möbius sums of h_k, the functionals Lambda^(s), and weight-family classification.";

  auto domain = py::register_exception<zfhp::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<zfhp::PoleError>(m, "PoleError", domain.ptr());
  py::register_exception<zfhp::ConditionError>(m, "ConditionError", domain.ptr());

  py::class_<zfhp::MobiusTable>(m, "MobiusTable")
      .def(py::init(&zfhp::build_mobius), "limit"_a)
      .def_property_readonly("limit", &zfhp::MobiusTable::limit)
      .def("at", &zfhp::MobiusTable::at, "n"_a)
      .def("values", [](const zfhp::MobiusTable& t) { return to_array(t.values()); });

  m.def("divisor_counts", [](std::uint64_t limit) {
    const auto t = zfhp::build_divisor_counts(limit);
    return to_array(t.counts());
  }, "limit"_a, "tau(0..limit) with tau(0) = 0.");

  m.def("mobius_sum_over_k", &zfhp::mobius_sum_over_k, "table"_a, "cutoff"_a);
  m.def("mobius_logsum_over_k", &zfhp::mobius_logsum_over_k, "table"_a, "cutoff"_a);

  m.def("ims_hk_coeffs", [](std::uint64_t k, std::size_t degree) {
    return to_array(zfhp::ims_hk_coeffs(k, degree).coeffs());
  }, "k"_a, "degree"_a);
  m.def("hk_coeffs", [](std::uint64_t k, std::size_t degree) {
    return to_array(zfhp::hk_coeffs(k, degree).coeffs());
  }, "k"_a, "degree"_a);
  m.def("mobius_partial_sum_ims", [](std::uint64_t n, std::size_t degree, const zfhp::MobiusTable& table) {
    return to_array(zfhp::mobius_partial_sum_ims(n, degree, table).coeffs());
  }, "n"_a, "degree"_a, "table"_a);

  m.def("zeta", [](cplx s) { return zfhp::zeta(zfhp::FunctionalPoint(s)).value; }, "s"_a);
  m.def("f_k", [](std::uint64_t k, cplx s) { return zfhp::f_k(k, zfhp::FunctionalPoint(s)); }, "k"_a, "s"_a);
  m.def("g_k", [](std::uint64_t k, cplx s) { return zfhp::g_k(k, zfhp::FunctionalPoint(s)); }, "k"_a, "s"_a);
  m.def("mellin_step_pk", [](std::uint64_t k, cplx s) {
    const auto r = zfhp::mellin_step_pk(k, zfhp::FunctionalPoint(s));
    return py::dict("quadrature"_a = r.quadrature, "closed_form"_a = r.closed_form,
                    "quadrature_error"_a = r.quadrature_error);
  }, "k"_a, "s"_a);

  m.def("lambda_apply", [](const std::vector<cplx>& coeffs, cplx s, std::optional<double> bound) {
    const auto e = zfhp::lambda_apply(to_series(coeffs), zfhp::FunctionalPoint(s), bound);
    return py::make_tuple(e.value, e.tail_bound);
  }, "coeffs"_a, "s"_a, "coefficient_bound"_a = py::none(),
        "Lambda^(s) of a truncated series; returns (value, tail_bound).");
  m.def("approx_reciprocal_s", [](std::uint64_t n, cplx s, const zfhp::MobiusTable& table) {
    return zfhp::approx_reciprocal_s(n, zfhp::FunctionalPoint(s), table);
  }, "n"_a, "s"_a, "table"_a);

  m.def("lq_norm", [](const std::vector<cplx>& coeffs, double q) {
    return zfhp::lq_norm(to_series(coeffs), q);
  }, "coeffs"_a, "q"_a);
  m.def("hp_norm_estimate", [](const std::vector<cplx>& coeffs, double p, std::size_t nodes) {
    const auto e = zfhp::hp_norm_estimate(to_series(coeffs), p, nodes);
    return py::make_tuple(e.value, e.underresolved);
  }, "coeffs"_a, "p"_a, "nodes"_a, "Returns (value, underresolved).");

  m.def("classify", [](const std::string& spec) {
    return classification_dict(zfhp::classify(zfhp::WeightFamily::parse(spec)));
  }, "family"_a);
  m.def("table1", [] {
    py::list rows;
    for (const auto& f : zfhp::table1_families()) rows.append(classification_dict(zfhp::classify(f)));
    return rows;
  });
  m.def("rm_sequence", [](const std::string& spec, std::uint64_t m_max, std::optional<std::uint64_t> cutoff) {
    const auto family = zfhp::WeightFamily::parse(spec);
    const auto r = zfhp::rm_sequence(family, m_max, cutoff.value_or(zfhp::default_tail_cutoff(family)));
    return py::make_tuple(r.values, r.tail_slack);
  }, "family"_a, "m_max"_a, "tail_cutoff"_a = py::none(), "Returns (values, tail_slack).");

  m.def("run_manifest", [](const std::string& json_text) {
    py::list out;
    for (const auto& manifest : zfhp::parse_manifests(json_text)) {
      const auto result = zfhp::run_experiment(manifest);
      py::list checks;
      for (const auto& c : result.checks) checks.append(py::make_tuple(c.name, c.passed, c.detail));
      out.append(py::dict("id"_a = manifest.id, "csv"_a = result.csv, "checks"_a = checks,
                          "notes"_a = result.notes));
    }
    return out;
  }, "json_text"_a, "Runs every experiment in a JSON manifest.");

  m.attr("__version__") = zfhp::code_version();
}
