#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "sipq/qseries.hpp"

namespace sipq {

/// Describes the factors of (+-x q^offset; q^step): each factor is
/// (1 - x q^{offset + i*step}) or, when `negated`, (1 + x q^{offset + i*step}).
/// `marker` names x; when absent x = 1.
struct PochSpec {
  bool negated = false;
  std::optional<std::string> marker;
  std::int64_t offset = 1;
  std::int64_t step = 1;

  /// (q^offset; q^step)
  static PochSpec minus(std::int64_t offset, std::int64_t step) {
    return PochSpec{false, std::nullopt, offset, step};
  }
  /// (-q^offset; q^step)
  static PochSpec plus(std::int64_t offset, std::int64_t step) {
    return PochSpec{true, std::nullopt, offset, step};
  }
};

/// The n-factor product. Exact when its degree is at most `trunc`.
QSeries poch_finite(const PochSpec& spec, std::size_t n, std::size_t trunc);

/// The infinite product; throws DivergentProduct when the first factor has
/// q-exponent 0.
QSeries poch_infinite(const PochSpec& spec, std::size_t trunc);

/// Gaussian binomial [A, B] in base q^j, zero for B < 0 or B > A.
QSeries gaussian_binomial(std::int64_t A, std::int64_t B, std::int64_t j = 1);

struct CongruenceProductSpec {
  enum class Mode { allowed, excluded };
  std::int64_t modulus = 1;
  std::set<std::int64_t> residues;
  Mode mode = Mode::allowed;

  /// Residues may be given as negatives (e.g. -4 for 6 mod 10).
  static CongruenceProductSpec allowed(std::int64_t modulus, std::set<std::int64_t> residues);
  static CongruenceProductSpec excluded(std::int64_t modulus, std::set<std::int64_t> residues);
  bool admits(std::int64_t n) const;
};

/// prod 1/(1 - q^n) over admitted n.
QSeries congruence_product(const CongruenceProductSpec& spec, std::size_t trunc);

/// sum over all integers n of (+-1)^n q^{a n^2 + b n}. Requires a >= 1 and
/// |b| <= a so that every exponent is non-negative.
QSeries theta_sum(std::int64_t a, std::int64_t b, std::size_t trunc, bool alternating = false);

}  // namespace sipq
