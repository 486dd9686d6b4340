#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "rsklab/errors.hpp"
#include "rsklab/greene.hpp"
#include "rsklab/minimal.hpp"
#include "rsklab/report.hpp"
#include "rsklab/rsk.hpp"
#include "rsklab/search.hpp"

namespace py = pybind11;

namespace {

using Rows = std::vector<std::vector<int>>;

rsklab::Matrix to_matrix(const Rows& rows) { return rsklab::Matrix::from_rows(rows); }

std::vector<Rows> to_rows(const std::vector<rsklab::Matrix>& ms) {
  std::vector<Rows> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(m.rows());
  return out;
}

rsklab::SearchCaps caps_for(int weight_cap) {
  return weight_cap > 0 ? rsklab::SearchCaps::uniform(weight_cap) : rsklab::SearchCaps{};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "RSK shapes, inversion counts and minimal-matrix verification";

  py::register_exception<rsklab::CapExceeded>(m, "CapExceeded");
  py::register_exception<rsklab::OracleDisagreement>(m, "OracleDisagreement");

  m.def("conjugate", [](std::vector<int> parts) {
    return rsklab::conjugate(rsklab::Partition(std::move(parts))).parts();
  }, py::arg("partition"));

  m.def("column_multiplicities", [](std::vector<int> parts) {
    return rsklab::column_multiplicities(rsklab::Partition(std::move(parts)));
  }, py::arg("partition"));

  m.def("enumerate_partitions", [](int weight, int exact_parts) {
    std::vector<std::vector<int>> out;
    for (const auto& p : rsklab::enumerate_partitions(weight, exact_parts)) out.push_back(p.parts());
    return out;
  }, py::arg("weight"), py::arg("exact_parts"));

  m.def("inversion_count", [](const Rows& rows) { return rsklab::inversion_count(to_matrix(rows)); },
        py::arg("matrix"));

  m.def("rsk_forward", [](const Rows& rows) {
    const auto pq = rsklab::rsk_forward(to_matrix(rows));
    return py::make_tuple(pq.p.rows(), pq.q.rows());
  }, py::arg("matrix"), "Returns (P, Q) as lists of rows.");

  m.def("rsk_inverse", [](const Rows& p, const Rows& q, int n) {
    return rsklab::rsk_inverse(rsklab::Tableau(p), rsklab::Tableau(q), n).rows();
  }, py::arg("p"), py::arg("q"), py::arg("n"));

  m.def("shape_of_matrix", [](const Rows& rows) {
    return rsklab::shape_of_matrix(to_matrix(rows)).parts();
  }, py::arg("matrix"));

  m.def("greene_shape", [](const Rows& rows, int max_weight) {
    return rsklab::greene_shape(to_matrix(rows), rsklab::GreeneLimits{max_weight}).parts();
  }, py::arg("matrix"), py::arg("max_weight") = rsklab::GreeneLimits{}.max_weight);

  m.def("minimal_hankel_candidates", [](std::vector<int> parts) {
    return to_rows(rsklab::minimal_hankel_candidates(rsklab::Partition(std::move(parts))));
  }, py::arg("partition"));

  m.def("minimal_inversion_formula", [](std::vector<int> parts) {
    return rsklab::minimal_inversion_formula(rsklab::Partition(std::move(parts)));
  }, py::arg("partition"));

  m.def("brute_force_minimum", [](std::vector<int> parts, int weight_cap, int jobs) {
    const auto r = rsklab::brute_force_minimum(rsklab::Partition(std::move(parts)), caps_for(weight_cap), jobs);
    return py::make_tuple(r.min_inversions, to_rows(r.minimal_set));
  }, py::arg("partition"), py::arg("weight_cap") = 0, py::arg("jobs") = 1,
     "Returns (minimum, minimal matrices). weight_cap <= 0 keeps the default caps.");

  m.def("verify_partition_json", [](std::vector<int> parts, int weight_cap, int jobs) {
    rsklab::VerifyOptions options{caps_for(weight_cap), jobs};
    py::gil_scoped_release release;
    return rsklab::to_jsonl_line(rsklab::verify_partition(rsklab::Partition(std::move(parts)), options));
  }, py::arg("partition"), py::arg("weight_cap") = 0, py::arg("jobs") = 1);

  m.attr("__version__") = "0.1.0";
}
