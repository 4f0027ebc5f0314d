#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sipq/catalog.hpp"
#include "sipq/cli.hpp"
#include "sipq/errors.hpp"
#include "sipq/ncopies.hpp"
#include "sipq/partitions.hpp"
#include "sipq/qfactory.hpp"
#include "sipq/sip.hpp"

namespace py = pybind11;
using namespace sipq;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::int_(py::module_::import("builtins").attr("int")(v.str()));
}

py::list int_coefficients(const QSeries& s) {
  py::list out;
  for (const auto& c : s.int_coefficients()) out.append(to_py(c));
  return out;
}

py::dict verify_dict(const VerifyReport& r) {
  py::dict d;
  d["id"] = r.id;
  d["pass"] = r.pass;
  d["trunc"] = r.trunc;
  d["first_mismatch"] = r.first_mismatch ? py::object(py::int_(*r.first_mismatch)) : py::none();
  d["detail"] = r.detail;
  return d;
}

// Integer-coefficient series of a registered identity side, markers set to 1.
py::list series_side(const std::string& id, const std::string& side, std::size_t trunc) {
  const auto& e = find_identity(id);
  if (side != "lhs" && side != "rhs") throw InvalidArgument("side must be 'lhs' or 'rhs'");
  QSeries s = side == "lhs" ? e.lhs(trunc) : e.rhs(trunc);
  std::map<std::string, BigInt> ones;
  for (const auto& m : s.markers()) ones.emplace(m, BigInt(1));
  return int_coefficients(s.specialize_markers(ones).truncated(trunc));
}

std::pair<int, std::string> run_json(const std::string& command, const py::dict& options) {
  cli::RunConfig cfg;
  cfg.command = cli::parse_command(command);
  cfg.output = cli::OutputFormat::json;
  for (auto item : options) {
    auto key = py::str(item.first).cast<std::string>();
    auto value = item.second;
    if (key == "identity") cfg.identity_id = value.cast<std::string>();
    else if (key == "trunc") cfg.trunc = value.cast<std::size_t>();
    else if (key == "total_max") cfg.total_max = value.cast<int>();
    else if (key == "spec") cfg.spec = value.cast<std::string>();
    else if (key == "partition") cfg.partition = value.cast<std::string>();
    else if (key == "n") cfg.n = value.cast<int>();
    else if (key == "h_max") cfg.h_max = value.cast<int>();
    else if (key == "ncopies") cfg.ncopies = value.cast<bool>();
    else if (key == "r") cfg.r = value.cast<int>();
    else throw InvalidArgument("unknown option '" + key + "'");
  }
  std::ostringstream out, err;
  int code = cli::run(cfg, out, err);
  return {code, out.str()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Core bindings for sipq";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def("identity_ids", [] {
    std::vector<std::string> ids;
    for (const auto& e : identity_registry()) ids.push_back(e.id);
    return ids;
  });
  m.def("verify", [](const std::string& id, std::size_t trunc) { return verify_dict(verify(id, trunc)); },
        py::arg("id"), py::arg("trunc") = 40);
  m.def(
      "verify_all",
      [](std::size_t trunc) {
        py::list out;
        for (const auto& r : verify_all(trunc)) out.append(verify_dict(r));
        return out;
      },
      py::arg("trunc") = 40);
  m.def(
      "oracle_concordance",
      [](const std::string& id, int total_max) {
        auto r = oracle_concordance(id, total_max);
        py::dict d;
        d["id"] = r.id;
        d["pass"] = r.pass();
        d["oracles"] = r.oracles;
        d["mismatches"] = r.mismatches;
        return d;
      },
      py::arg("id"), py::arg("total_max") = 20);
  m.def("series", &series_side, py::arg("id"), py::arg("side"), py::arg("trunc"),
        "Coefficients of one side of an identity, markers set to 1");

  m.def("presets", [] {
    std::vector<std::string> names;
    for (const auto& s : SipClassSpec::presets()) names.push_back(s.name());
    names.push_back("schur-refined");
    return names;
  });
  m.def(
      "enumerate_basis",
      [](const std::string& spec, int n, int h_max) {
        std::vector<std::vector<int>> out;
        for (const auto& b : enumerate_basis(SipClassSpec::parse(spec), n, h_max)) out.push_back(b.parts());
        return out;
      },
      py::arg("spec"), py::arg("n"), py::arg("h_max"));
  m.def(
      "decompose",
      [](const std::string& spec, std::vector<int> parts) {
        auto d = decompose(Partition(std::move(parts)), SipClassSpec::parse(spec));
        return std::make_pair(d.basis.parts(), d.padding);
      },
      py::arg("spec"), py::arg("parts"));
  m.def(
      "recompose",
      [](std::vector<int> basis, std::vector<int> padding, int modulus) {
        return recompose(SipDecomposition{Partition(std::move(basis)), std::move(padding), modulus}).parts();
      },
      py::arg("basis"), py::arg("padding"), py::arg("modulus"));
  m.def(
      "verify_sip",
      [](const std::string& spec, int total_max) {
        auto r = verify_sip(SipClassSpec::parse(spec), total_max);
        py::dict d;
        d["pass"] = r.pass();
        d["members"] = r.members;
        d["collisions"] = r.collisions;
        d["omissions"] = r.omissions;
        d["extraneous"] = r.extraneous;
        d["out_of_class_basis"] = r.out_of_class_basis;
        d["examples"] = r.examples;
        return d;
      },
      py::arg("spec"), py::arg("total_max"));

  m.def(
      "gaussian_binomial",
      [](std::int64_t A, std::int64_t B, std::int64_t j) { return int_coefficients(gaussian_binomial(A, B, j)); },
      py::arg("A"), py::arg("B"), py::arg("j") = 1);
  m.def(
      "ncopies_gf", [](int r, std::size_t trunc) { return int_coefficients(ncopies_gf(r, trunc)); },
      py::arg("r"), py::arg("trunc"));
  m.def(
      "ncopies_counts",
      [](int total_max, std::optional<int> r) { return count_by_total(enumerate_ncopies(total_max, r), total_max); },
      py::arg("total_max"), py::arg("r") = py::none());

  m.def("run_json", &run_json, py::arg("command"), py::arg("options"));
}
