#include "sipq/cli.hpp"

#include <algorithm>
#include <ostream>

#include "sipq/catalog.hpp"
#include "sipq/errors.hpp"
#include "sipq/ncopies.hpp"
#include "sipq/partitions.hpp"
#include "sipq/sip.hpp"

namespace sipq::cli {

namespace {

const std::vector<std::pair<Command, std::string>>& command_names() {
  static const std::vector<std::pair<Command, std::string>> names{
      {Command::verify, "verify"}, {Command::verify_all, "verify-all"}, {Command::basis, "basis"},
      {Command::decompose, "decompose"}, {Command::table, "table"}, {Command::oracle, "oracle"}};
  return names;
}

SipClassSpec require_spec(const RunConfig& c) {
  if (!c.spec) throw InvalidArgument(to_string(c.command) + " needs --spec");
  return SipClassSpec::parse(*c.spec);
}

nlohmann::json parts_json(const Partition& p) { return p.parts(); }

ResultRow verify_row(const VerifyReport& v) {
  ResultRow row{v.id, v.pass, v.trunc, v.first_mismatch, v.detail, nullptr};
  return row;
}

ResultRow oracle_row(const OracleReport& o) {
  ResultRow row;
  row.id = o.id;
  row.pass = o.pass();
  row.trunc = static_cast<std::size_t>(o.total_max);
  row.detail = o.pass() ? std::to_string(o.oracles.size()) + " oracle(s) agree with both sides"
                        : o.mismatches.front();
  row.data = {{"oracles", o.oracles}, {"mismatches", o.mismatches}};
  return row;
}

void run_basis(const RunConfig& c, Report& rep) {
  auto spec = require_spec(c);
  if (c.n < 1) throw InvalidArgument("basis needs --n >= 1");
  int h_max = c.h_max ? *c.h_max : static_cast<int>(max_basis_largest(spec, c.n));
  auto elements = enumerate_basis(spec, c.n, h_max);
  ResultRow row;
  row.id = spec.to_string();
  row.trunc = static_cast<std::size_t>(h_max);
  std::vector<std::string> names;
  nlohmann::json list = nlohmann::json::array();
  std::size_t outside = 0;
  for (const auto& b : elements) {
    names.push_back(b.to_string());
    list.push_back(parts_json(b));
    if (!in_sip_class(b, spec)) ++outside;
  }
  row.pass = outside == 0;
  row.detail = std::to_string(elements.size()) + " basis element(s) with " + std::to_string(c.n) +
               " parts: ";
  for (std::size_t i = 0; i < names.size(); ++i) row.detail += (i ? ", " : "") + names[i];
  if (outside) row.detail += " (" + std::to_string(outside) + " outside the class)";
  row.data = {{"n", c.n}, {"h_max", h_max}, {"elements", list}};
  rep.results.push_back(std::move(row));
}

void run_decompose(const RunConfig& c, Report& rep) {
  if (!c.partition) throw InvalidArgument("decompose needs --partition");
  ResultRow row;
  if (c.ncopies) {
    auto p = NCopiesPartition::parse(*c.partition);
    row.id = p.to_string();
    try {
      auto split = split_exact_base(p, c.r);
      bool ok = join_exact_base(split, c.r) == p;
      row.pass = ok;
      row.detail = "base " + split.base.to_string() + ", attached";
      for (int a : split.attached) row.detail += " " + std::to_string(a);
      nlohmann::json base = nlohmann::json::array();
      for (const auto& part : split.base.parts()) base.push_back({part.value, part.subscript});
      row.data = {{"r", c.r}, {"base", base}, {"attached", split.attached}, {"round_trip", ok}};
    } catch (const ConstraintViolation& e) {
      row.detail = e.what();
    }
    rep.results.push_back(std::move(row));
    return;
  }
  auto spec = require_spec(c);
  auto p = Partition::parse(*c.partition);
  row.id = p.to_string();
  try {
    auto d = decompose(p, spec);
    bool ok = recompose(d) == p;
    bool basis_ok = in_sip_class(d.basis, spec);
    row.pass = ok && basis_ok;
    row.detail = "basis " + d.basis.to_string() + ", padding";
    for (int x : d.padding) row.detail += " " + std::to_string(x);
    if (!basis_ok) row.detail += " (basis element outside the class)";
    row.data = {{"spec", spec.to_string()},
                {"basis", parts_json(d.basis)},
                {"padding", d.padding},
                {"modulus", d.modulus},
                {"round_trip", ok},
                {"basis_in_class", basis_ok}};
  } catch (const NotInClass& e) {
    row.detail = e.what();
  } catch (const ConstraintViolation& e) {
    row.detail = e.what();
  }
  rep.results.push_back(std::move(row));
}

void run_table(const RunConfig& c, Report& rep) {
  auto spec = require_spec(c);
  if (c.n < 1) throw InvalidArgument("table needs --n >= 1");
  int h_max = c.h_max ? *c.h_max : static_cast<int>(c.trunc);
  BasisTable table(spec, c.n, h_max);
  for (int n = 1; n <= c.n; ++n) {
    ResultRow row;
    row.id = "b(" + std::to_string(n) + ")";
    row.pass = true;
    row.trunc = static_cast<std::size_t>(h_max);
    row.detail = table.row(n).to_string();
    nlohmann::json entries = nlohmann::json::object();
    for (int h = 1; h <= h_max; ++h)
      if (!table.at(n, h).is_zero()) entries[std::to_string(h)] = table.at(n, h).to_string();
    row.data = {{"n", n}, {"entries", entries}};
    rep.results.push_back(std::move(row));
  }
}

}  // namespace

std::string to_string(Command c) {
  for (const auto& [cmd, name] : command_names())
    if (cmd == c) return name;
  return "?";
}

Command parse_command(const std::string& name) {
  for (const auto& [cmd, n] : command_names())
    if (n == name) return cmd;
  throw InvalidArgument("unknown command '" + name + "'");
}

bool Report::pass() const {
  return std::all_of(results.begin(), results.end(), [](const ResultRow& r) { return r.pass; });
}

nlohmann::json Report::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json j{{"id", r.id}, {"pass", r.pass}, {"trunc", r.trunc}, {"detail", r.detail}};
    if (r.first_mismatch) j["first_mismatch"] = *r.first_mismatch;
    if (!r.data.is_null()) j["data"] = r.data;
    rows.push_back(std::move(j));
  }
  return {{"schema", schema}, {"command", command}, {"results", rows}};
}

Report Report::from_json(const nlohmann::json& j) {
  try {
    Report rep;
    rep.schema = j.at("schema").get<std::string>();
    if (rep.schema != kSchema) throw InvalidArgument("unsupported report schema '" + rep.schema + "'");
    rep.command = j.at("command").get<std::string>();
    for (const auto& r : j.at("results")) {
      ResultRow row;
      row.id = r.at("id").get<std::string>();
      row.pass = r.at("pass").get<bool>();
      row.trunc = r.at("trunc").get<std::size_t>();
      row.detail = r.at("detail").get<std::string>();
      if (r.contains("first_mismatch")) row.first_mismatch = r.at("first_mismatch").get<std::size_t>();
      if (r.contains("data")) row.data = r.at("data");
      rep.results.push_back(std::move(row));
    }
    return rep;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed report: ") + e.what());
  }
}

Report execute(const RunConfig& c) {
  if (c.trunc < 1) throw InvalidArgument("--trunc must be positive");
  if (c.total_max < 1) throw InvalidArgument("--total-max must be positive");
  Report rep;
  rep.command = to_string(c.command);
  switch (c.command) {
    case Command::verify:
      if (!c.identity_id) throw InvalidArgument("verify needs --identity");
      rep.results.push_back(verify_row(verify(*c.identity_id, c.trunc)));
      break;
    case Command::verify_all:
      for (const auto& v : verify_all(c.trunc)) rep.results.push_back(verify_row(v));
      break;
    case Command::oracle:
      if (c.identity_id) {
        rep.results.push_back(oracle_row(oracle_concordance(*c.identity_id, c.total_max)));
      } else {
        for (const auto& e : identity_registry())
          if (!e.oracles.empty()) rep.results.push_back(oracle_row(oracle_concordance(e.id, c.total_max)));
      }
      break;
    case Command::basis:
      run_basis(c, rep);
      break;
    case Command::decompose:
      run_decompose(c, rep);
      break;
    case Command::table:
      run_table(c, rep);
      break;
  }
  return rep;
}

void write_text(const Report& report, std::ostream& out) {
  for (const auto& r : report.results) {
    out << (r.pass ? "PASS " : "FAIL ") << r.id;
    if (r.first_mismatch) out << " (first mismatch at q^" << *r.first_mismatch << ")";
    out << ": " << r.detail << '\n';
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    Report rep = execute(config);
    if (config.output == OutputFormat::json)
      out << rep.to_json().dump(2) << '\n';
    else
      write_text(rep, out);
    return rep.pass() ? kAllPass : kCheckFailed;
  } catch (const UnknownIdentity& e) {
    err << "error: " << e.what() << '\n';
    return kUnknownIdentity;
  } catch (const NoOracle& e) {
    err << "error: " << e.what() << '\n';
    return kNoOracle;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace sipq::cli
