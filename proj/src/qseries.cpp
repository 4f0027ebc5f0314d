#include "sipq/qseries.hpp"

#include <algorithm>
#include <sstream>

#include "sipq/errors.hpp"

namespace sipq {

namespace {

std::vector<std::size_t> slot_mapping(const MarkerRegistry& from, const MarkerRegistry& to) {
  std::vector<std::size_t> mapping(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    auto it = std::find(to.begin(), to.end(), from[i]);
    if (it == to.end()) throw MarkerMismatch("marker '" + from[i] + "' missing from registry");
    mapping[i] = static_cast<std::size_t>(it - to.begin());
  }
  return mapping;
}

MarkerRegistry sorted_unique(MarkerRegistry r) {
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

}  // namespace

MarkerRegistry merge_registries(const MarkerRegistry& a, const MarkerRegistry& b) {
  MarkerRegistry all = a;
  all.insert(all.end(), b.begin(), b.end());
  return sorted_unique(std::move(all));
}

QSeries::QSeries(std::size_t trunc, MarkerRegistry markers)
    : markers_(sorted_unique(std::move(markers))), trunc_(trunc) {
  coeffs_.assign(trunc + 1, MarkerPoly(markers_.size()));
}

QSeries QSeries::zero(std::size_t trunc, MarkerRegistry markers) {
  return QSeries(trunc, std::move(markers));
}

QSeries QSeries::one(std::size_t trunc, MarkerRegistry markers) {
  QSeries s(trunc, std::move(markers));
  s.coeffs_[0] = MarkerPoly(1, s.arity());
  return s;
}

QSeries QSeries::zero_polynomial(MarkerRegistry markers) {
  QSeries s(0, std::move(markers));
  s.exact_ = true;
  return s;
}

QSeries QSeries::one_polynomial(MarkerRegistry markers) {
  QSeries s = one(0, std::move(markers));
  s.exact_ = true;
  return s;
}

QSeries QSeries::from_integers(const std::vector<BigInt>& coeffs, bool exact) {
  if (coeffs.empty()) return exact ? zero_polynomial() : zero(0);
  QSeries s(coeffs.size() - 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) s.coeffs_[i] = MarkerPoly(coeffs[i], 0);
  s.exact_ = exact;
  s.normalize_exact();
  return s;
}

QSeries QSeries::from_integers(std::initializer_list<long long> coeffs, bool exact) {
  std::vector<BigInt> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.emplace_back(c);
  return from_integers(v, exact);
}

QSeries QSeries::monomial(std::size_t exponent, const BigInt& coeff) {
  QSeries s(exponent);
  s.coeffs_[exponent] = MarkerPoly(coeff, 0);
  s.exact_ = true;
  s.normalize_exact();
  return s;
}

QSeries QSeries::monomial(std::size_t exponent, MarkerPoly coeff, MarkerRegistry markers) {
  QSeries s(exponent, std::move(markers));
  if (coeff.arity() != s.arity())
    throw MarkerMismatch("monomial coefficient arity does not match registry");
  s.coeffs_[exponent] = std::move(coeff);
  s.exact_ = true;
  s.normalize_exact();
  return s;
}

QSeries QSeries::marker_monomial(const std::string& name, std::uint32_t power,
                                 std::size_t exponent) {
  return monomial(exponent, MarkerPoly::marker(0, 1, power), {name});
}

QSeries QSeries::polynomial(std::vector<MarkerPoly> coeffs, MarkerRegistry markers) {
  QSeries s = zero_polynomial(std::move(markers));
  if (coeffs.empty()) return s;
  for (const auto& c : coeffs)
    if (c.arity() != s.arity()) throw MarkerMismatch("coefficient arity does not match registry");
  s.coeffs_ = std::move(coeffs);
  s.trunc_ = s.coeffs_.size() - 1;
  s.normalize_exact();
  return s;
}

void QSeries::normalize_exact() {
  if (!exact_) return;
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
  trunc_ = coeffs_.size() - 1;
}

MarkerPoly QSeries::coefficient(std::size_t n) const {
  if (n > trunc_) {
    if (exact_) return MarkerPoly(arity());
    throw TruncationExceeded("coefficient q^" + std::to_string(n) +
                             " requested beyond truncation " + std::to_string(trunc_));
  }
  return coeffs_[n];
}

BigInt QSeries::int_coefficient(std::size_t n) const {
  MarkerPoly c = coefficient(n);
  if (!c.is_constant())
    throw InvalidArgument("coefficient of q^" + std::to_string(n) + " carries marker terms");
  return c.constant_term();
}

BigInt QSeries::coefficient(std::size_t n, const Monomial& m) const {
  return coefficient(n).coefficient(m);
}

std::vector<BigInt> QSeries::int_coefficients() const {
  std::vector<BigInt> out;
  out.reserve(trunc_ + 1);
  for (std::size_t i = 0; i <= trunc_; ++i) out.push_back(int_coefficient(i));
  return out;
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const MarkerPoly& c) { return c.is_zero(); });
}

long QSeries::degree() const {
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    if (!coeffs_[i].is_zero()) return static_cast<long>(i);
  return -1;
}

QSeries QSeries::with_markers(const MarkerRegistry& registry) const {
  MarkerRegistry target = sorted_unique(registry);
  if (target == markers_) return *this;
  auto mapping = slot_mapping(markers_, target);
  QSeries out = *this;
  out.markers_ = target;
  for (auto& c : out.coeffs_) c = c.reindexed(mapping, target.size());
  return out;
}

QSeries& QSeries::operator+=(const QSeries& rhs_in) {
  const QSeries* rhs = &rhs_in;
  QSeries promoted;
  if (rhs_in.markers_ != markers_) {
    MarkerRegistry merged = merge_registries(markers_, rhs_in.markers_);
    *this = with_markers(merged);
    promoted = rhs_in.with_markers(merged);
    rhs = &promoted;
  }
  if (exact_ && rhs->exact_) {
    if (rhs->coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs->coeffs_.size(), MarkerPoly(arity()));
  } else {
    std::size_t t = exact_ ? rhs->trunc_ : rhs->exact_ ? trunc_ : std::min(trunc_, rhs->trunc_);
    coeffs_.resize(t + 1, MarkerPoly(arity()));
    trunc_ = t;
    exact_ = false;
  }
  std::size_t n = std::min(coeffs_.size(), rhs->coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) coeffs_[i] += rhs->coeffs_[i];
  normalize_exact();
  return *this;
}

QSeries QSeries::operator-() const {
  QSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

QSeries& QSeries::operator-=(const QSeries& rhs) { return *this += -rhs; }

QSeries& QSeries::operator*=(const QSeries& rhs) {
  *this = *this * rhs;
  return *this;
}

QSeries operator*(const QSeries& a_in, const QSeries& b_in) {
  const QSeries* a = &a_in;
  const QSeries* b = &b_in;
  QSeries pa, pb;
  if (a_in.markers_ != b_in.markers_) {
    MarkerRegistry merged = merge_registries(a_in.markers_, b_in.markers_);
    pa = a_in.with_markers(merged);
    pb = b_in.with_markers(merged);
    a = &pa;
    b = &pb;
  }
  QSeries out(0, a->markers_);
  std::size_t limit;
  if (a->exact_ && b->exact_) {
    out.exact_ = true;
    limit = a->coeffs_.size() + b->coeffs_.size() - 2;
  } else {
    limit = a->exact_ ? b->trunc_ : b->exact_ ? a->trunc_ : std::min(a->trunc_, b->trunc_);
  }
  out.trunc_ = limit;
  out.coeffs_.assign(limit + 1, MarkerPoly(a->arity()));
  for (std::size_t i = 0; i < a->coeffs_.size() && i <= limit; ++i) {
    if (a->coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b->coeffs_.size() && i + j <= limit; ++j) {
      if (b->coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j].add_product(a->coeffs_[i], b->coeffs_[j]);
    }
  }
  out.normalize_exact();
  return out;
}

QSeries QSeries::scaled(const BigInt& factor) const {
  QSeries out = *this;
  for (auto& c : out.coeffs_) c *= factor;
  out.normalize_exact();
  return out;
}

QSeries QSeries::scaled(const MarkerPoly& factor) const {
  QSeries f = monomial(0, factor, factor.arity() == arity() ? markers_ : MarkerRegistry{});
  return *this * f;
}

QSeries QSeries::inverse() const {
  if (!coeffs_[0].is_one())
    throw NonUnitConstantTerm("series inverse needs constant term 1, got " +
                              coeffs_[0].to_string(markers_));
  if (exact_) {
    if (coeffs_.size() == 1) return *this;
    throw InvalidArgument("inverse of a non-constant polynomial needs a truncation");
  }
  QSeries out = one(trunc_, markers_);
  for (std::size_t n = 1; n <= trunc_; ++n) {
    MarkerPoly acc(arity());
    for (std::size_t k = 1; k <= n; ++k) {
      if (coeffs_[k].is_zero() || out.coeffs_[n - k].is_zero()) continue;
      acc.add_product(coeffs_[k], out.coeffs_[n - k]);
    }
    out.coeffs_[n] = -acc;
  }
  return out;
}

QSeries QSeries::inverse(std::size_t trunc) const { return truncated(trunc).inverse(); }

QSeries QSeries::shifted(std::size_t k) const {
  QSeries out = *this;
  out.coeffs_.insert(out.coeffs_.begin(), k, MarkerPoly(arity()));
  out.trunc_ = trunc_ + k;
  out.normalize_exact();
  return out;
}

QSeries QSeries::truncated(std::size_t trunc) const {
  QSeries out = *this;
  std::size_t t = exact_ ? trunc : std::min(trunc, trunc_);
  out.coeffs_.resize(t + 1, MarkerPoly(arity()));
  out.trunc_ = t;
  out.exact_ = false;
  return out;
}

QSeries QSeries::substitute(int sign, std::size_t step) const {
  if (step == 0) throw InvalidArgument("substitution step must be positive");
  if (sign != 1 && sign != -1) throw InvalidArgument("substitution sign must be +1 or -1");
  std::size_t t = exact_ ? trunc_ * step : (trunc_ + 1) * step - 1;
  QSeries out(t, markers_);
  out.exact_ = exact_;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    if (e * step > t) break;
    out.coeffs_[e * step] = (sign < 0 && e % 2 == 1) ? -coeffs_[e] : coeffs_[e];
  }
  out.normalize_exact();
  return out;
}

QSeries QSeries::partially_specialize(const std::map<std::string, BigInt>& assignment) const {
  std::vector<std::optional<BigInt>> values(arity());
  MarkerRegistry kept;
  for (std::size_t i = 0; i < arity(); ++i) {
    auto it = assignment.find(markers_[i]);
    if (it != assignment.end())
      values[i] = it->second;
    else
      kept.push_back(markers_[i]);
  }
  QSeries out(0, kept);
  out.trunc_ = trunc_;
  out.exact_ = exact_;
  out.coeffs_.clear();
  out.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.coeffs_.push_back(c.partially_evaluate(values));
  out.normalize_exact();
  return out;
}

QSeries QSeries::specialize_markers(const std::map<std::string, BigInt>& assignment) const {
  for (const auto& name : markers_)
    if (!assignment.count(name))
      throw InvalidArgument("no value assigned to marker '" + name + "'");
  return partially_specialize(assignment);
}

bool operator==(const QSeries& a, const QSeries& b) {
  if (a.trunc_ != b.trunc_ || a.exact_ != b.exact_) return false;
  if (a.markers_ == b.markers_) return a.coeffs_ == b.coeffs_;
  MarkerRegistry merged = merge_registries(a.markers_, b.markers_);
  return a.with_markers(merged).coeffs_ == b.with_markers(merged).coeffs_;
}

std::optional<std::size_t> first_mismatch(const QSeries& a_in, const QSeries& b_in) {
  MarkerRegistry merged = merge_registries(a_in.markers(), b_in.markers());
  QSeries a = a_in.with_markers(merged);
  QSeries b = b_in.with_markers(merged);
  std::size_t upto;
  if (a.exact() && b.exact())
    upto = std::max(a.trunc(), b.trunc());
  else
    upto = a.exact() ? b.trunc() : b.exact() ? a.trunc() : std::min(a.trunc(), b.trunc());
  for (std::size_t n = 0; n <= upto; ++n)
    if (!(a.coefficient(n) == b.coefficient(n))) return n;
  return std::nullopt;
}

bool agree_up_to(const QSeries& a, const QSeries& b, std::size_t upto) {
  if ((!a.exact() && a.trunc() < upto) || (!b.exact() && b.trunc() < upto))
    throw TruncationExceeded("comparison range exceeds series truncation");
  auto mm = first_mismatch(a.truncated(upto), b.truncated(upto));
  return !mm.has_value();
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string cs = c.to_string(markers_);
    bool compound = c.terms().size() > 1;
    bool negative = !compound && cs.front() == '-';
    if (negative) cs.erase(0, 1);
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    first = false;
    if (i == 0) {
      os << (compound ? "(" + cs + ")" : cs);
      continue;
    }
    if (compound)
      os << "(" << cs << ")*";
    else if (cs != "1")
      os << cs << "*";
    os << "q";
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  if (!exact_) os << " + O(q^" << trunc_ + 1 << ")";
  return os.str();
}

}  // namespace sipq
