#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace sipq::cli {

enum class Command { verify, verify_all, basis, decompose, table, oracle };
enum class OutputFormat { text, json };

std::string to_string(Command c);
/// Throws InvalidArgument for unknown names.
Command parse_command(const std::string& name);

struct RunConfig {
  Command command = Command::verify_all;
  std::optional<std::string> identity_id;
  std::size_t trunc = 40;
  int total_max = 20;
  /// Preset name or "k=K,c=c1:..:ck,d=d1:..:dk".
  std::optional<std::string> spec;
  OutputFormat output = OutputFormat::text;
  /// "2,7" for ordinary partitions; "3:1,1:1~" with --ncopies.
  std::optional<std::string> partition;
  /// Part count for `basis`, largest part count for `table`.
  int n = 2;
  std::optional<int> h_max;
  bool ncopies = false;
  int r = 0;
};

struct ResultRow {
  std::string id;
  bool pass = false;
  std::size_t trunc = 0;
  std::optional<std::size_t> first_mismatch;
  std::string detail;
  nlohmann::json data;  // null when the row carries no payload

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

struct Report {
  static constexpr const char* kSchema = "sipq-report/1";
  std::string schema = kSchema;
  std::string command;
  std::vector<ResultRow> results;

  bool pass() const;
  nlohmann::json to_json() const;
  /// Throws InvalidArgument on a missing field or a foreign schema.
  static Report from_json(const nlohmann::json& j);
  friend bool operator==(const Report&, const Report&) = default;
};

/// Runs the command and collects the rows. Library errors propagate.
Report execute(const RunConfig& config);

enum ExitCode : int {
  kAllPass = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kUnknownIdentity = 3,
  kNoOracle = 4,
};

/// execute() plus formatting; errors become a message on `err` and an exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

void write_text(const Report& report, std::ostream& out);

}  // namespace sipq::cli
