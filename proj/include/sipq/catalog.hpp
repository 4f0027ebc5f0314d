#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sipq/qseries.hpp"

namespace sipq {

/// A combinatorial count whose generating function should equal both sides.
struct IdentityOracle {
  std::string name;
  std::function<std::vector<long long>(int total_max)> counts;
};

struct IdentityEntry {
  std::string id;
  std::string source;  // short human description of the identity
  std::function<QSeries(std::size_t trunc)> lhs;
  std::function<QSeries(std::size_t trunc)> rhs;
  std::vector<IdentityOracle> oracles;  // empty when no partition statement exists
  /// Series with markers are compared to oracles after setting every marker to 1.
  bool has_markers = false;
};

/// All registered identities, in a fixed order.
const std::vector<IdentityEntry>& identity_registry();
/// Throws UnknownIdentity.
const IdentityEntry& find_identity(const std::string& id);

struct VerifyReport {
  std::string id;
  std::size_t trunc = 0;
  bool pass = false;
  std::optional<std::size_t> first_mismatch;
  std::string detail;
};

/// Coefficientwise lhs == rhs through q^trunc.
VerifyReport verify(const std::string& id, std::size_t trunc);
/// Every registered identity, run concurrently; results in registry order.
std::vector<VerifyReport> verify_all(std::size_t trunc);

struct OracleReport {
  std::string id;
  int total_max = 0;
  std::vector<std::string> oracles;
  /// One entry per disagreeing (oracle or side, total) pair.
  std::vector<std::string> mismatches;
  bool pass() const { return mismatches.empty(); }
};

/// Checks every oracle count against both sides for totals <= total_max.
/// Throws NoOracle when the entry has none.
OracleReport oracle_concordance(const std::string& id, int total_max);

struct StepReport {
  std::string name;
  bool pass = false;
  std::optional<std::size_t> first_mismatch;
};

struct ChainReport {
  std::size_t trunc = 0;
  std::vector<StepReport> steps;
  bool pass() const;
};

/// For N = 1..N_max: the first N+1 terms of the mod-8 Glasgow series sum to
/// (-q^3;q^4)_N / (q^2;q^2)_N, and consecutive right sides differ by term N.
ChainReport telescope_check(int N_max, std::size_t trunc);

/// The Gollnitz-Gordon pivot (-q;q^2)_inf sum q^{2j^2}/(-q;-q)_{2j} against
/// both sides, then the q -> -q^2 chain down to the theta-sum form.
ChainReport gollnitz_gordon_pivot(std::size_t trunc);

/// q -> -q^2.
inline QSeries negate_square(const QSeries& s) { return s.substitute(-1, 2); }

}  // namespace sipq
