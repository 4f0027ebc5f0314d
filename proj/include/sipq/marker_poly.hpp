#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sipq/bigint.hpp"

namespace sipq {

/// One exponent per registered marker, in registry order.
using Monomial = std::vector<std::uint32_t>;

/// Polynomial in a fixed number of markers (u, v, ...) with big-integer
/// coefficients. The arity is the size of the marker registry the polynomial
/// lives in; zero terms are never stored.
class MarkerPoly {
 public:
  using Terms = std::map<Monomial, BigInt>;

  MarkerPoly() = default;
  explicit MarkerPoly(std::size_t arity) : arity_(arity) {}
  MarkerPoly(BigInt constant, std::size_t arity);

  static MarkerPoly monomial(Monomial exponents, BigInt coeff);
  /// The single marker `index` raised to `power` in a registry of `arity`.
  static MarkerPoly marker(std::size_t index, std::size_t arity, std::uint32_t power = 1);

  std::size_t arity() const noexcept { return arity_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  /// True when the only possible term is the constant one.
  bool is_constant() const;
  BigInt constant_term() const;
  BigInt coefficient(const Monomial& m) const;
  /// Total degree in markers, or -1 for zero.
  int degree() const;

  MarkerPoly& operator+=(const MarkerPoly& rhs);
  MarkerPoly& operator-=(const MarkerPoly& rhs);
  MarkerPoly& operator*=(const BigInt& scalar);
  /// Accumulate a*b into *this without a temporary.
  void add_product(const MarkerPoly& a, const MarkerPoly& b);

  friend MarkerPoly operator+(MarkerPoly a, const MarkerPoly& b) { return a += b; }
  friend MarkerPoly operator-(MarkerPoly a, const MarkerPoly& b) { return a -= b; }
  friend MarkerPoly operator*(const MarkerPoly& a, const MarkerPoly& b);
  friend MarkerPoly operator*(MarkerPoly a, const BigInt& s) { return a *= s; }
  MarkerPoly operator-() const;

  friend bool operator==(const MarkerPoly& a, const MarkerPoly& b);

  /// Re-index into a larger registry: `mapping[i]` is the new slot of marker i.
  MarkerPoly reindexed(const std::vector<std::size_t>& mapping, std::size_t new_arity) const;
  /// Substitute integer values for every marker.
  BigInt evaluate(const std::vector<BigInt>& values) const;
  /// Substitute integer values for a subset of markers; the others stay symbolic.
  MarkerPoly partially_evaluate(const std::vector<std::optional<BigInt>>& values) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void check_arity(const MarkerPoly& other) const;

  std::size_t arity_ = 0;
  Terms terms_;
};

}  // namespace sipq
