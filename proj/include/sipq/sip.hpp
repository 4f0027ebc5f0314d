#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sipq/partitions.hpp"
#include "sipq/qseries.hpp"
#include "sipq/sip_spec.hpp"

namespace sipq {

/// Basis elements with exactly `n_parts` parts and largest part <= h_max:
/// the first part is c_r, and each later part is the unique value of its
/// residue r in [prev + d_r, prev + d_r + k).
std::vector<Partition> enumerate_basis(const SipClassSpec& spec, int n_parts, int h_max);

/// Every basis element (any part count, including the empty one) of total
/// at most total_max.
std::vector<Partition> enumerate_basis_upto(const SipClassSpec& spec, int total_max);

/// p_i = basis_i + padding_i, padding a non-decreasing list of non-negative
/// multiples of the modulus.
struct SipDecomposition {
  Partition basis;
  std::vector<int> padding;
  int modulus = 1;

  friend bool operator==(const SipDecomposition&, const SipDecomposition&) = default;
};

/// Left-to-right construction: the first basis part is c_r for the residue of
/// p_1; each later one is the value congruent to p_i in
/// [prev + d_r, prev + d_r + k). Throws NotInClass when p is not a class
/// member and ConstraintViolation when the padding comes out negative or
/// decreasing (the class then has no unique-decomposition property).
SipDecomposition decompose(const Partition& p, const SipClassSpec& spec);

/// Adds the padding back. Throws InvalidArgument on malformed padding.
Partition recompose(const SipDecomposition& d);

struct SipReport {
  std::size_t members = 0;            // class members of total <= total_max
  std::size_t basis_elements = 0;     // basis elements of total <= total_max
  std::size_t collisions = 0;         // partitions hit by more than one (basis, padding)
  std::size_t omissions = 0;          // members no (basis, padding) produces
  std::size_t extraneous = 0;         // recompositions that fall outside the class
  std::size_t out_of_class_basis = 0; // basis elements that are not class members
  std::size_t round_trip_failures = 0;
  std::vector<std::string> examples;  // a few offending partitions

  bool pass() const {
    return collisions == 0 && omissions == 0 && extraneous == 0 && out_of_class_basis == 0 &&
           round_trip_failures == 0;
  }
};

/// Exhaustive check of existence and uniqueness over basis x padding.
SipReport verify_sip(const SipClassSpec& spec, int total_max);

/// Smallest total of an n-part basis element.
long long min_basis_total(const SipClassSpec& spec, int n);
/// Largest possible largest part of an n-part basis element.
long long max_basis_largest(const SipClassSpec& spec, int n);

/// b(n, h): generating function (marker-weighted when the class has weights)
/// of basis elements with n parts and largest part h.
class BasisTable {
 public:
  BasisTable(const SipClassSpec& spec, int max_n, int max_h);

  int max_n() const noexcept { return max_n_; }
  int max_h() const noexcept { return max_h_; }
  const MarkerRegistry& markers() const noexcept { return markers_; }
  /// Zero outside 1..max_n x 1..max_h.
  const QSeries& at(int n, int h) const;
  /// sum_h b(n, h) over the table's h range.
  QSeries row(int n) const;

 private:
  int max_n_, max_h_;
  MarkerRegistry markers_;
  QSeries zero_;
  std::vector<std::vector<QSeries>> entries_;
};

inline BasisTable basis_table(const SipClassSpec& spec, int max_n, int max_h) {
  return BasisTable(spec, max_n, max_h);
}

/// sum_n b(n) / (q^k; q^k)_n to `trunc`. Throws InsufficientTableDepth when
/// the table misses basis elements of total <= trunc.
QSeries assemble_gf(const SipClassSpec& spec, const BasisTable& table, std::size_t trunc);
/// Builds a table of sufficient depth first.
QSeries assemble_gf(const SipClassSpec& spec, std::size_t trunc);

}  // namespace sipq
