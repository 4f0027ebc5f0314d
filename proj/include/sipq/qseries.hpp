#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sipq/bigint.hpp"
#include "sipq/marker_poly.hpp"

namespace sipq {

/// Sorted list of marker names; the slot of a name is its index.
using MarkerRegistry = std::vector<std::string>;

/// Truncated power series in q whose coefficients are marker polynomials.
///
/// A series is exact for every q-exponent 0..trunc(). Arithmetic between two
/// truncated series keeps the smaller truncation. A series flagged `exact()`
/// is a polynomial: every coefficient above trunc() is known to be zero, so it
/// never lowers the truncation of a result it takes part in.
///
/// Operands living in different marker registries are promoted to the sorted
/// union of both registries before combining.
class QSeries {
 public:
  /// The zero series, truncated at `trunc`.
  explicit QSeries(std::size_t trunc = 0, MarkerRegistry markers = {});

  static QSeries zero(std::size_t trunc, MarkerRegistry markers = {});
  static QSeries one(std::size_t trunc, MarkerRegistry markers = {});
  /// Exact zero / one polynomials.
  static QSeries zero_polynomial(MarkerRegistry markers = {});
  static QSeries one_polynomial(MarkerRegistry markers = {});
  /// Integer coefficients c[0..], truncated at c.size()-1 unless `exact`.
  static QSeries from_integers(const std::vector<BigInt>& coeffs, bool exact = false);
  static QSeries from_integers(std::initializer_list<long long> coeffs, bool exact = false);
  /// coeff * q^exponent as an exact polynomial.
  static QSeries monomial(std::size_t exponent, const BigInt& coeff = 1);
  /// coeff * q^exponent as an exact polynomial with marker coefficient.
  static QSeries monomial(std::size_t exponent, MarkerPoly coeff, MarkerRegistry markers);
  /// marker^power * q^exponent, e.g. marker_monomial("u", 1, 1) == u*q.
  static QSeries marker_monomial(const std::string& name, std::uint32_t power,
                                 std::size_t exponent);
  /// Exact polynomial from marker-polynomial coefficients.
  static QSeries polynomial(std::vector<MarkerPoly> coeffs, MarkerRegistry markers);

  std::size_t trunc() const noexcept { return trunc_; }
  bool exact() const noexcept { return exact_; }
  const MarkerRegistry& markers() const noexcept { return markers_; }
  std::size_t arity() const noexcept { return markers_.size(); }

  /// Coefficient of q^n. Throws TruncationExceeded when n > trunc() on a
  /// truncated series; exact polynomials answer zero above their degree.
  MarkerPoly coefficient(std::size_t n) const;
  /// Integer coefficient of q^n; the series must carry no marker terms at n.
  BigInt int_coefficient(std::size_t n) const;
  /// Coefficient of q^n restricted to one marker monomial.
  BigInt coefficient(std::size_t n, const Monomial& m) const;
  /// Integer coefficients 0..trunc() (requires marker-free coefficients).
  std::vector<BigInt> int_coefficients() const;

  bool is_zero() const;
  /// Highest non-zero q-exponent, or -1 for zero.
  long degree() const;

  QSeries& operator+=(const QSeries& rhs);
  QSeries& operator-=(const QSeries& rhs);
  QSeries& operator*=(const QSeries& rhs);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries operator-() const;
  QSeries scaled(const BigInt& factor) const;
  QSeries scaled(const MarkerPoly& factor) const;

  /// Multiplicative inverse; the constant term must be exactly 1.
  /// Exact non-constant polynomials need an explicit truncation.
  QSeries inverse() const;
  QSeries inverse(std::size_t trunc) const;

  /// Multiply by q^k.
  QSeries shifted(std::size_t k) const;
  /// Drop everything above `trunc` (never raises the truncation of a
  /// truncated series; exact polynomials become truncated when cut).
  QSeries truncated(std::size_t trunc) const;
  /// Substitute q -> sign * q^step.
  QSeries substitute(int sign, std::size_t step) const;
  /// Replace every marker by an integer; the assignment must cover all markers.
  QSeries specialize_markers(const std::map<std::string, BigInt>& assignment) const;
  /// Replace only the named markers.
  QSeries partially_specialize(const std::map<std::string, BigInt>& assignment) const;
  /// Embed into a registry that contains all current markers.
  QSeries with_markers(const MarkerRegistry& registry) const;

  /// Exact structural equality after registry promotion: same truncation,
  /// same exactness and the same coefficients.
  friend bool operator==(const QSeries& a, const QSeries& b);

  std::string to_string() const;

 private:
  void normalize_exact();

  MarkerRegistry markers_;
  std::size_t trunc_ = 0;
  bool exact_ = false;
  std::vector<MarkerPoly> coeffs_;
};

/// First q-exponent at which a and b differ, comparing 0..min truncation.
/// Empty when they agree on the common range.
std::optional<std::size_t> first_mismatch(const QSeries& a, const QSeries& b);

/// True when a and b agree on every exponent up to `upto` (both must reach it).
bool agree_up_to(const QSeries& a, const QSeries& b, std::size_t upto);

MarkerRegistry merge_registries(const MarkerRegistry& a, const MarkerRegistry& b);

// Free-function spellings of the core operations.
inline QSeries series_add(const QSeries& a, const QSeries& b) { return a + b; }
inline QSeries series_mul(const QSeries& a, const QSeries& b) { return a * b; }
inline QSeries series_inverse(const QSeries& a) { return a.inverse(); }
inline MarkerPoly coefficient(const QSeries& a, std::size_t n) { return a.coefficient(n); }
inline QSeries specialize_markers(const QSeries& a, const std::map<std::string, BigInt>& values) {
  return a.specialize_markers(values);
}

}  // namespace sipq
