#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sipq/qseries.hpp"

namespace sipq {

/// The part m_i (1 <= i <= m), optionally overlined.
struct CopyPart {
  int value = 1;
  int subscript = 1;
  bool overline = false;

  CopyPart() = default;
  /// Throws InvalidArgument unless 1 <= subscript <= value.
  CopyPart(int value, int subscript, bool overline = false);

  std::string to_string() const;
  /// Lexicographic on (value, subscript); the overline does not take part.
  friend bool lex_less(const CopyPart& a, const CopyPart& b) {
    return a.value < b.value || (a.value == b.value && a.subscript < b.subscript);
  }
  friend bool operator==(const CopyPart&, const CopyPart&) = default;
  friend auto operator<=>(const CopyPart&, const CopyPart&) = default;
};

/// ((a - b)) = a.value - b.value - a.subscript - b.subscript.
int weighted_difference(const CopyPart& a, const CopyPart& b);

/// Partition with n copies of n, parts in ascending lexicographic order.
class NCopiesPartition {
 public:
  NCopiesPartition() = default;
  /// Throws InvalidArgument when the parts are not in ascending order.
  explicit NCopiesPartition(std::vector<CopyPart> parts);

  const std::vector<CopyPart>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  const CopyPart& operator[](std::size_t i) const { return parts_[i]; }
  int total() const;
  /// Weighted differences of successive parts, upper minus lower.
  std::vector<int> successive_differences() const;
  /// Smallest part has the form i_i (true for the empty partition).
  bool smallest_is_diagonal() const;

  /// Parses "3:1,1:1~" in any order; "~" overlines a part.
  static NCopiesPartition parse(const std::string& text);
  /// Ascending, e.g. "1_1~+3_1".
  std::string to_string() const;

  friend bool operator==(const NCopiesPartition&, const NCopiesPartition&) = default;
  friend auto operator<=>(const NCopiesPartition&, const NCopiesPartition&) = default;

 private:
  std::vector<CopyPart> parts_;
};

using NCopiesPredicate = std::function<bool(const NCopiesPartition&)>;

/// All n-copies partitions of total <= total_max whose successive weighted
/// differences are >= min_difference (no constraint when empty), passing
/// `keep`. Parts are not overlined.
std::vector<NCopiesPartition> enumerate_ncopies(int total_max,
                                                std::optional<int> min_difference = std::nullopt,
                                                const NCopiesPredicate& keep = {});

/// Successive weighted differences all equal r and the smallest part is i_i.
bool is_exact_base(const NCopiesPartition& p, int r);

struct ExactBaseSplit {
  NCopiesPartition base;      // same subscripts, differences exactly r, smallest i_i
  std::vector<int> attached;  // non-decreasing, non-negative, one per part
};

/// Splits p (successive differences >= r, r >= -1) into its exact-r base and
/// the attached non-decreasing list. Throws ConstraintViolation otherwise.
ExactBaseSplit split_exact_base(const NCopiesPartition& p, int r);
/// Adds the attached list to the base values. Throws ConstraintViolation when
/// the base is not exact-r or the attached list is not non-decreasing.
NCopiesPartition join_exact_base(const ExactBaseSplit& split, int r);

/// g_r(n, m, j): generating function of exact-r partitions with n parts,
/// smallest part i_i and largest part m_j.
class GrTable {
 public:
  GrTable(int r, int max_n, int max_m);
  int r() const noexcept { return r_; }
  int max_n() const noexcept { return max_n_; }
  int max_m() const noexcept { return max_m_; }
  /// Zero outside the table or when j is outside 1..m.
  const QSeries& at(int n, int m, int j) const;

 private:
  int r_, max_n_, max_m_;
  QSeries zero_;
  std::vector<std::vector<std::vector<QSeries>>> entries_;
};

inline GrTable gr_table(int r, int max_n, int max_m) { return GrTable(r, max_n, max_m); }

/// Closed form of g_r(n, m, j), picking the formula by the parities of r, n,
/// m and j; zero outside the four parity patterns. r >= -1.
QSeries gr_closed(int r, int n, int m, int j);

/// q^{m^2 + r m(m-1)/2} / (q; q^2)_m to `trunc`.
QSeries beta_r(int m, int r, std::size_t trunc);
/// sum_m beta_r(m) / (q; q)_m to `trunc`.
QSeries ncopies_gf(int r, std::size_t trunc);

/// Differences >= 0; inside each maximal run of parts linked by zero
/// differences only the lexicographically smallest part may be overlined.
std::vector<NCopiesPartition> enumerate_ncopies_over(int total_max);

/// Even subscripts, differences >= 0, and no adjacent pair of odd values
/// with zero weighted difference.
std::vector<NCopiesPartition> enumerate_even_subscript(int total_max);

/// Every n-copies partition with at most one overlined instance of each m_i.
std::vector<NCopiesPartition> enumerate_ncopies_overpartitions(int total_max);

}  // namespace sipq
