#include "sipq/marker_poly.hpp"

#include <sstream>

#include "sipq/errors.hpp"

namespace sipq {

MarkerPoly::MarkerPoly(BigInt constant, std::size_t arity) : arity_(arity) {
  if (constant != 0) terms_.emplace(Monomial(arity, 0), std::move(constant));
}

MarkerPoly MarkerPoly::monomial(Monomial exponents, BigInt coeff) {
  MarkerPoly p(exponents.size());
  if (coeff != 0) p.terms_.emplace(std::move(exponents), std::move(coeff));
  return p;
}

MarkerPoly MarkerPoly::marker(std::size_t index, std::size_t arity, std::uint32_t power) {
  if (index >= arity) throw InvalidArgument("marker index outside registry");
  Monomial m(arity, 0);
  m[index] = power;
  return monomial(std::move(m), 1);
}

bool MarkerPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->second == 1 && is_constant();
}

bool MarkerPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  for (auto e : terms_.begin()->first)
    if (e != 0) return false;
  return true;
}

BigInt MarkerPoly::constant_term() const { return coefficient(Monomial(arity_, 0)); }

BigInt MarkerPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int MarkerPoly::degree() const {
  int best = -1;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (auto e : m) d += static_cast<int>(e);
    best = std::max(best, d);
  }
  return best;
}

void MarkerPoly::check_arity(const MarkerPoly& other) const {
  if (arity_ != other.arity_)
    throw MarkerMismatch("marker polynomials live in registries of different size");
}

MarkerPoly& MarkerPoly::operator+=(const MarkerPoly& rhs) {
  check_arity(rhs);
  for (const auto& [m, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MarkerPoly& MarkerPoly::operator-=(const MarkerPoly& rhs) {
  check_arity(rhs);
  for (const auto& [m, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, BigInt(-c));
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MarkerPoly& MarkerPoly::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

void MarkerPoly::add_product(const MarkerPoly& a, const MarkerPoly& b) {
  a.check_arity(b);
  check_arity(a);
  if (arity_ == 0) {
    if (a.terms_.empty() || b.terms_.empty()) return;
    BigInt prod = a.terms_.begin()->second * b.terms_.begin()->second;
    auto [it, inserted] = terms_.try_emplace(Monomial{}, prod);
    if (!inserted) {
      it->second += prod;
      if (it->second == 0) terms_.erase(it);
    }
    return;
  }
  Monomial m(arity_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < arity_; ++i) m[i] = ma[i] + mb[i];
      auto [it, inserted] = terms_.try_emplace(m, BigInt(ca * cb));
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) terms_.erase(it);
      }
    }
  }
}

MarkerPoly operator*(const MarkerPoly& a, const MarkerPoly& b) {
  MarkerPoly out(a.arity_);
  out.add_product(a, b);
  return out;
}

MarkerPoly MarkerPoly::operator-() const {
  MarkerPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const MarkerPoly& a, const MarkerPoly& b) {
  return a.arity_ == b.arity_ && a.terms_ == b.terms_;
}

MarkerPoly MarkerPoly::reindexed(const std::vector<std::size_t>& mapping,
                                 std::size_t new_arity) const {
  if (mapping.size() != arity_) throw MarkerMismatch("re-index mapping has wrong length");
  MarkerPoly out(new_arity);
  for (const auto& [m, c] : terms_) {
    Monomial nm(new_arity, 0);
    for (std::size_t i = 0; i < arity_; ++i) nm[mapping[i]] = m[i];
    out.terms_.emplace(std::move(nm), c);
  }
  return out;
}

BigInt MarkerPoly::evaluate(const std::vector<BigInt>& values) const {
  if (values.size() != arity_) throw InvalidArgument("marker assignment has wrong length");
  BigInt total = 0;
  for (const auto& [m, c] : terms_) {
    BigInt t = c;
    for (std::size_t i = 0; i < arity_; ++i) t *= boost::multiprecision::pow(values[i], m[i]);
    total += t;
  }
  return total;
}

MarkerPoly MarkerPoly::partially_evaluate(const std::vector<std::optional<BigInt>>& values) const {
  if (values.size() != arity_) throw InvalidArgument("marker assignment has wrong length");
  std::size_t kept = 0;
  std::vector<std::size_t> slot(arity_);
  for (std::size_t i = 0; i < arity_; ++i)
    if (!values[i]) slot[i] = kept++;
  MarkerPoly out(kept);
  for (const auto& [m, c] : terms_) {
    BigInt t = c;
    Monomial nm(kept, 0);
    for (std::size_t i = 0; i < arity_; ++i) {
      if (values[i])
        t *= boost::multiprecision::pow(*values[i], m[i]);
      else
        nm[slot[i]] = m[i];
    }
    if (t == 0) continue;
    auto [it, inserted] = out.terms_.try_emplace(nm, t);
    if (!inserted) {
      it->second += t;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

std::string MarkerPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads more naturally for u, v polynomials.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool has_marker = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (has_marker) mono << "*";
      mono << (i < names.size() ? names[i] : "x" + std::to_string(i));
      if (m[i] > 1) mono << "^" << m[i];
      has_marker = true;
    }
    if (!has_marker)
      os << mag;
    else if (mag == 1)
      os << mono.str();
    else
      os << mag << "*" << mono.str();
  }
  return os.str();
}

}  // namespace sipq
