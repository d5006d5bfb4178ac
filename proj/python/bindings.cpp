#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weyld/cyclic_family.hpp"
#include "weyld/oracle.hpp"
#include "weyld/rationality.hpp"
#include "weyld/rationality_graph.hpp"
#include "weyld/signed_perm.hpp"

namespace py = pybind11;
using namespace weyld;

namespace {

SubsetIndex subset_from(int rank, const std::vector<int>& members) {
  return SubsetIndex::of(rank, members);
}

py::object recognition_dict(const RecognitionResult& result) {
  py::dict out;
  switch (result.kind) {
    case RecognitionResult::Kind::W0:
      out["kind"] = "w0";
      break;
    case RecognitionResult::Kind::CFamily:
      out["kind"] = "c";
      out["subset"] = result.subset.members();
      break;
    case RecognitionResult::Kind::DFamily:
      out["kind"] = "d";
      out["subset"] = result.subset.members();
      break;
    case RecognitionResult::Kind::NotRational:
      out["kind"] = "not_rational";
      break;
  }
  return out;
}

py::object certificate_dict(const std::optional<Certificate>& cert) {
  if (!cert) return py::none();
  py::dict out;
  std::vector<std::string> roots;
  for (const Root& root : cert->roots) roots.push_back(root_to_string(root));
  switch (cert->kind) {
    case Certificate::Kind::Loop:
      out["kind"] = "loop";
      out["root"] = roots.front();
      break;
    case Certificate::Kind::TwoCycle:
      out["kind"] = "two_cycle";
      out["roots"] = roots;
      break;
    case Certificate::Kind::Cycle:
      out["kind"] = "cycle";
      out["roots"] = roots;
      break;
  }
  return out;
}

py::dict report_dict(const EnumerationReport& report) {
  py::dict out;
  out["rank"] = report.rank;
  out["group_order"] = report.group_order;
  out["rational_count"] = report.rational_count;
  out["mismatches"] = report.mismatches;
  out["elapsed_seconds"] = report.elapsed_seconds;
  out["worker_count"] = report.worker_count;
  out["counts_match"] = report.counts_match();
  std::vector<std::string> rationals;
  rationals.reserve(report.rationals.size());
  for (const SignedPerm& u : report.rationals) rationals.push_back(format_one_line(u));
  out["rationals"] = rationals;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rational Weyl group elements of odd type D";

  py::class_<SignedPerm>(m, "SignedPerm")
      .def_static("identity", &SignedPerm::identity, py::arg("rank"))
      .def_static("from_one_line",
                  [](const std::string& text) { return parse_one_line(text); },
                  py::arg("text"))
      .def_property_readonly("rank", &SignedPerm::rank)
      .def("one_line", [](const SignedPerm& u) { return format_one_line(u); })
      .def("compose", &SignedPerm::compose, py::arg("other"))
      .def("inverse", &SignedPerm::inverse)
      .def("tau_conjugate", [](const SignedPerm& u) { return tau_conjugate(u); })
      .def("length", [](const SignedPerm& u) { return length(u); })
      .def("__eq__", [](const SignedPerm& a, const SignedPerm& b) { return a == b; })
      .def("__repr__", [](const SignedPerm& u) {
        return "SignedPerm" + format_one_line(u);
      });

  m.def("simple_reflection", &simple_reflection, py::arg("a"), py::arg("rank"));
  m.def("longest_element", &longest_element, py::arg("rank"));

  m.def("is_rational",
        [](const SignedPerm& u) { return is_rational(u); }, py::arg("element"));
  m.def("is_rational",
        [](const std::string& text) { return is_rational(parse_one_line(text)); },
        py::arg("one_line"));
  m.def("rational_ascents",
        [](const SignedPerm& u) { return rational_ascents(u); }, py::arg("element"));
  m.def("nu_levels", [](const SignedPerm& u) {
    std::vector<std::vector<std::string>> levels;
    for (const auto& level : nu_sequence(u).levels) {
      std::vector<std::string> roots;
      for (const Root& root : level) roots.push_back(root_to_string(root));
      levels.push_back(std::move(roots));
    }
    return levels;
  }, py::arg("element"));
  m.def("find_certificate", [](const SignedPerm& u) {
    return certificate_dict(find_certificate(u));
  }, py::arg("element"));
  m.def("find_certificate", [](const std::string& text) {
    return certificate_dict(find_certificate(parse_one_line(text)));
  }, py::arg("one_line"));

  m.def("recognize",
        [](const SignedPerm& u) { return recognition_dict(recognize(u)); },
        py::arg("element"));
  m.def("recognize",
        [](const std::string& text) {
          return recognition_dict(recognize(parse_one_line(text)));
        },
        py::arg("one_line"));

  m.def("c_element", [](int rank, const std::vector<int>& members) {
    return c_element(subset_from(rank, members));
  }, py::arg("rank"), py::arg("subset"));
  m.def("d_element", [](int rank, const std::vector<int>& members) {
    return d_element(subset_from(rank, members));
  }, py::arg("rank"), py::arg("subset"));
  m.def("family_length", [](int rank, const std::vector<int>& members) {
    return family_length(subset_from(rank, members));
  }, py::arg("rank"), py::arg("subset"));
  m.def("family_defect", [](int rank, const std::vector<int>& members) {
    return family_defect(subset_from(rank, members));
  }, py::arg("rank"), py::arg("subset"));
  m.def("arrow_count", [](int rank, const std::vector<int>& members) {
    return arrow_count(subset_from(rank, members));
  }, py::arg("rank"), py::arg("subset"));
  m.def("defect_polynomial", &defect_polynomial, py::arg("rank"));
  m.def("deletion_word", [](int rank, const std::vector<int>& members) {
    return deletion_word(subset_from(rank, members));
  }, py::arg("rank"), py::arg("subset"));

  m.def("gamma_vertex_count", [](int rank) {
    return build_gamma(rank).vertices.size();
  }, py::arg("rank"));
  m.def("gamma_edge_count", &edge_count, py::arg("rank"));
  m.def("gamma_json", [](int rank) { return gamma_to_json(build_gamma(rank)); },
        py::arg("rank"));
  m.def("gamma_dot", [](int rank) { return gamma_to_dot(build_gamma(rank)); },
        py::arg("rank"));

  m.def("brute_force_verify", [](int rank, int workers) {
    EnumerationReport report;
    {
      py::gil_scoped_release release;
      report = brute_force_verify(rank, workers);
    }
    return report_dict(report);
  }, py::arg("rank"), py::arg("workers") = 1);
}
