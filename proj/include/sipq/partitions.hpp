#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "sipq/qseries.hpp"
#include "sipq/sip_spec.hpp"

namespace sipq {

/// Ordinary partition with parts listed in ascending order.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidArgument unless parts are positive and non-decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int largest() const { return parts_.empty() ? 0 : parts_.back(); }
  int total() const;

  /// Parses "2,7" (ascending); an empty string gives the empty partition.
  static Partition parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// A partition in which some part sizes carry one overlined copy.
class Overpartition {
 public:
  Overpartition() = default;
  Overpartition(Partition base, std::set<int> overlined);

  const Partition& base() const noexcept { return base_; }
  const std::set<int>& overlined() const noexcept { return overlined_; }
  int total() const { return base_.total(); }
  std::string to_string() const;

  friend bool operator==(const Overpartition&, const Overpartition&) = default;
  friend auto operator<=>(const Overpartition&, const Overpartition&) = default;

 private:
  Partition base_;
  std::set<int> overlined_;
};

using PartitionPredicate = std::function<bool(const Partition&)>;
using OverpartitionPredicate = std::function<bool(const Overpartition&)>;

/// Calls `visit` on every partition of every total 0..total_max passing
/// `keep` (all when empty), each exactly once.
void for_each_partition(int total_max, const PartitionPredicate& keep,
                        const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate_partitions(int total_max, const PartitionPredicate& keep = {});

bool in_sip_class(const Partition& p, const SipClassSpec& spec);

/// Class members of total <= total_max, generated with residue-aware pruning.
std::vector<Partition> enumerate_sip_class(const SipClassSpec& spec, int total_max);

std::vector<Overpartition> enumerate_overpartitions(int total_max,
                                                    const OverpartitionPredicate& keep = {});

/// sum_n (#objects of total n) q^n, truncated at `trunc`; objects above trunc
/// are ignored.
template <class Range>
QSeries counting_series(const Range& objects, std::size_t trunc) {
  std::vector<BigInt> c(trunc + 1, BigInt(0));
  for (const auto& o : objects) {
    auto t = static_cast<std::size_t>(o.total());
    if (t <= trunc) c[t] += 1;
  }
  return QSeries::from_integers(c);
}

/// Class generating function by enumeration, with marker weights per part
/// when the class carries them.
QSeries class_series_by_enumeration(const SipClassSpec& spec, std::size_t trunc);

/// Per-total counts 0..total_max.
template <class Range>
std::vector<long long> count_by_total(const Range& objects, int total_max) {
  std::vector<long long> c(static_cast<std::size_t>(total_max) + 1, 0);
  for (const auto& o : objects) {
    int t = o.total();
    if (t <= total_max) ++c[static_cast<std::size_t>(t)];
  }
  return c;
}

/// The Glasgow B-condition read literally: parts >= 2, and each odd part is
/// at least 3 larger than any other part not exceeding it.
bool glasgow_condition(const Partition& p);

}  // namespace sipq
