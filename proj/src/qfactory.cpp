#include "sipq/qfactory.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "sipq/errors.hpp"

namespace sipq {

namespace {

void check_spec(const PochSpec& spec) {
  if (spec.step < 1) throw InvalidArgument("Pochhammer step must be positive");
  if (spec.offset < 0) throw InvalidArgument("Pochhammer offset must be non-negative");
}

// Multiply `coeffs` (length cap+1) in place by (1 +- x q^e).
void mul_factor(std::vector<MarkerPoly>& coeffs, std::size_t e, const MarkerPoly& signed_x) {
  if (e >= coeffs.size()) return;
  for (std::size_t i = coeffs.size(); i-- > e;) {
    if (coeffs[i - e].is_zero()) continue;
    coeffs[i].add_product(coeffs[i - e], signed_x);
  }
}

QSeries poch_product(const PochSpec& spec, std::size_t n, std::size_t cap, bool exact) {
  MarkerRegistry reg;
  if (spec.marker) reg.push_back(*spec.marker);
  MarkerPoly x = spec.marker ? MarkerPoly::marker(0, 1) : MarkerPoly(1, 0);
  MarkerPoly signed_x = spec.negated ? x : -x;
  std::vector<MarkerPoly> coeffs(cap + 1, MarkerPoly(reg.size()));
  coeffs[0] = MarkerPoly(1, reg.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t e = static_cast<std::size_t>(spec.offset) + i * static_cast<std::size_t>(spec.step);
    if (e == 0) {
      // (1 +- x) is a constant factor.
      MarkerPoly f = MarkerPoly(1, reg.size()) + signed_x;
      for (auto& c : coeffs) c = c * f;
      continue;
    }
    mul_factor(coeffs, e, signed_x);
  }
  QSeries out = QSeries::polynomial(std::move(coeffs), reg);
  return exact ? out : out.truncated(cap);
}

}  // namespace

QSeries poch_finite(const PochSpec& spec, std::size_t n, std::size_t trunc) {
  check_spec(spec);
  std::size_t degree = n * static_cast<std::size_t>(spec.offset) +
                       (n == 0 ? 0 : n * (n - 1) / 2 * static_cast<std::size_t>(spec.step));
  if (degree <= trunc) return poch_product(spec, n, degree, true);
  return poch_product(spec, n, trunc, false);
}

QSeries poch_infinite(const PochSpec& spec, std::size_t trunc) {
  check_spec(spec);
  if (spec.offset == 0) throw DivergentProduct("infinite product has a factor with q-exponent 0");
  std::size_t offset = static_cast<std::size_t>(spec.offset);
  std::size_t n = offset > trunc ? 0 : (trunc - offset) / static_cast<std::size_t>(spec.step) + 1;
  return poch_product(spec, n, trunc, false);
}

namespace {

using IntPoly = std::vector<BigInt>;

// Memo shared by all threads; entries are never erased, so references into
// the map stay valid once inserted.
std::mutex binomial_mutex;
std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, IntPoly> binomial_memo;

const IntPoly& binomial_rec(std::int64_t A, std::int64_t B, std::int64_t j) {
  static const IntPoly zero;
  static const IntPoly one{1};
  if (B < 0 || B > A) return zero;
  if (B == 0 || B == A) return one;
  auto key = std::make_tuple(A, B, j);
  {
    std::lock_guard<std::mutex> lock(binomial_mutex);
    auto it = binomial_memo.find(key);
    if (it != binomial_memo.end()) return it->second;
  }
  const IntPoly& left = binomial_rec(A - 1, B - 1, j);
  const IntPoly& right = binomial_rec(A - 1, B, j);
  std::size_t shift = static_cast<std::size_t>(j * B);
  IntPoly out(std::max(left.size(), right.size() + shift), BigInt(0));
  for (std::size_t i = 0; i < left.size(); ++i) out[i] += left[i];
  for (std::size_t i = 0; i < right.size(); ++i) out[i + shift] += right[i];
  std::lock_guard<std::mutex> lock(binomial_mutex);
  return binomial_memo.emplace(key, std::move(out)).first->second;
}

}  // namespace

QSeries gaussian_binomial(std::int64_t A, std::int64_t B, std::int64_t j) {
  if (j < 1) throw InvalidArgument("Gaussian binomial base step must be positive");
  // Recurse on the smaller of B and A-B to keep the memo shallow.
  if (B >= 0 && B <= A && A - B < B) B = A - B;
  return QSeries::from_integers(binomial_rec(A, B, j), true);
}

CongruenceProductSpec CongruenceProductSpec::allowed(std::int64_t modulus,
                                                     std::set<std::int64_t> residues) {
  if (modulus < 1) throw InvalidArgument("modulus must be positive");
  CongruenceProductSpec s;
  s.modulus = modulus;
  s.mode = Mode::allowed;
  for (auto r : residues) s.residues.insert(((r % modulus) + modulus) % modulus);
  return s;
}

CongruenceProductSpec CongruenceProductSpec::excluded(std::int64_t modulus,
                                                      std::set<std::int64_t> residues) {
  CongruenceProductSpec s = allowed(modulus, std::move(residues));
  s.mode = Mode::excluded;
  return s;
}

bool CongruenceProductSpec::admits(std::int64_t n) const {
  bool in = residues.count(n % modulus) > 0;
  return mode == Mode::allowed ? in : !in;
}

QSeries congruence_product(const CongruenceProductSpec& spec, std::size_t trunc) {
  if (spec.modulus < 1) throw InvalidArgument("modulus must be positive");
  for (auto r : spec.residues)
    if (r < 0 || r >= spec.modulus) throw InvalidArgument("residue outside 0..modulus-1");
  std::vector<BigInt> c(trunc + 1, BigInt(0));
  c[0] = 1;
  for (std::size_t n = 1; n <= trunc; ++n) {
    if (!spec.admits(static_cast<std::int64_t>(n))) continue;
    for (std::size_t i = n; i <= trunc; ++i) c[i] += c[i - n];
  }
  return QSeries::from_integers(c);
}

QSeries theta_sum(std::int64_t a, std::int64_t b, std::size_t trunc, bool alternating) {
  if (a < 1) throw InvalidArgument("theta sum needs a >= 1");
  if (b > a || b < -a) throw InvalidArgument("theta sum needs |b| <= a");
  std::vector<BigInt> c(trunc + 1, BigInt(0));
  auto T = static_cast<std::int64_t>(trunc);
  for (int dir : {1, -1}) {
    for (std::int64_t n = (dir == 1 ? 0 : -1);; n += dir) {
      std::int64_t e = a * n * n + b * n;
      // a n^2 + b n is non-decreasing in |n| once |b| <= a.
      if (e > T) break;
      c[static_cast<std::size_t>(e)] += (alternating && (n % 2 != 0)) ? -1 : 1;
    }
  }
  return QSeries::from_integers(c);
}

}  // namespace sipq
