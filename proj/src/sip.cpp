#include "sipq/sip.hpp"

#include <algorithm>
#include <map>

#include "sipq/errors.hpp"
#include "sipq/qfactory.hpp"

namespace sipq {

namespace {

int mod(int a, int k) { return ((a % k) + k) % k; }

// The unique value congruent to r mod k in [prev + d_r, prev + d_r + k).
int next_basis_part(const SipClassSpec& spec, int prev, int r) {
  int lo = prev + spec.d(r);
  return lo + mod(r - lo, spec.k());
}

void grow_basis(const SipClassSpec& spec, std::vector<int>& parts, int n_left, int h_max,
                int budget, std::vector<Partition>& out) {
  if (n_left == 0) {
    out.emplace_back(parts);
    return;
  }
  for (int r = 1; r <= spec.k(); ++r) {
    int x = parts.empty() ? spec.c(r) : next_basis_part(spec, parts.back(), r);
    if (x > h_max || x > budget) continue;
    parts.push_back(x);
    grow_basis(spec, parts, n_left - 1, h_max, budget - x, out);
    parts.pop_back();
  }
}

void grow_basis_all(const SipClassSpec& spec, std::vector<int>& parts, int budget,
                    std::vector<Partition>& out) {
  out.emplace_back(parts);
  for (int r = 1; r <= spec.k(); ++r) {
    int x = parts.empty() ? spec.c(r) : next_basis_part(spec, parts.back(), r);
    if (x > budget) continue;
    parts.push_back(x);
    grow_basis_all(spec, parts, budget - x, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_basis(const SipClassSpec& spec, int n_parts, int h_max) {
  if (n_parts < 1) throw InvalidArgument("basis enumeration needs n_parts >= 1");
  std::vector<Partition> out;
  std::vector<int> parts;
  // Parts never decrease, so the total is at most n_parts * h_max.
  grow_basis(spec, parts, n_parts, h_max, n_parts * std::max(h_max, 0), out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> enumerate_basis_upto(const SipClassSpec& spec, int total_max) {
  std::vector<Partition> out;
  std::vector<int> parts;
  grow_basis_all(spec, parts, total_max, out);
  return out;
}

SipDecomposition decompose(const Partition& p, const SipClassSpec& spec) {
  if (!in_sip_class(p, spec))
    throw NotInClass(p.to_string() + " is not in class " + spec.to_string());
  const int k = spec.k();
  std::vector<int> basis, padding;
  for (std::size_t i = 0; i < p.size(); ++i) {
    int r = spec.residue(p[i]);
    int b = i == 0 ? spec.c(r) : next_basis_part(spec, basis.back(), r);
    int pad = p[i] - b;
    if (pad < 0 || (!padding.empty() && pad < padding.back()))
      throw ConstraintViolation(p.to_string() + " has no decomposition under " +
                                spec.to_string());
    basis.push_back(b);
    padding.push_back(pad);
  }
  return SipDecomposition{Partition(std::move(basis)), std::move(padding), k};
}

Partition recompose(const SipDecomposition& d) {
  if (d.padding.size() != d.basis.size())
    throw InvalidArgument("padding and basis differ in length");
  if (d.modulus < 1) throw InvalidArgument("modulus must be positive");
  std::vector<int> parts(d.basis.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    int pad = d.padding[i];
    if (pad < 0 || pad % d.modulus != 0)
      throw InvalidArgument("padding entries must be non-negative multiples of the modulus");
    if (i > 0 && pad < d.padding[i - 1]) throw InvalidArgument("padding must be non-decreasing");
    parts[i] = d.basis[i] + pad;
  }
  return Partition(std::move(parts));
}

namespace {

// Non-decreasing paddings of length n, multiples of k, total <= budget.
void for_each_padding(std::size_t n, int k, int budget, std::vector<int>& pad,
                      const std::function<void()>& visit) {
  if (pad.size() == n) {
    visit();
    return;
  }
  int lo = pad.empty() ? 0 : pad.back();
  int left = static_cast<int>(n - pad.size());
  for (int v = lo; v * left <= budget; v += k) {
    pad.push_back(v);
    for_each_padding(n, k, budget - v, pad, visit);
    pad.pop_back();
  }
}

void note(SipReport& rep, const std::string& what) {
  if (rep.examples.size() < 8) rep.examples.push_back(what);
}

}  // namespace

SipReport verify_sip(const SipClassSpec& spec, int total_max) {
  SipReport rep;
  std::map<Partition, int> hits;
  auto basis = enumerate_basis_upto(spec, total_max);
  rep.basis_elements = basis.size();
  for (const auto& b : basis) {
    if (!in_sip_class(b, spec)) {
      ++rep.out_of_class_basis;
      note(rep, "basis element outside class: " + b.to_string());
    }
    std::vector<int> pad;
    for_each_padding(b.size(), spec.k(), total_max - b.total(), pad, [&] {
      ++hits[recompose(SipDecomposition{b, pad, spec.k()})];
    });
  }
  auto members = enumerate_sip_class(spec, total_max);
  rep.members = members.size();
  for (const auto& m : members) {
    auto it = hits.find(m);
    if (it == hits.end()) {
      ++rep.omissions;
      note(rep, "omitted: " + m.to_string());
    } else if (it->second > 1) {
      ++rep.collisions;
      note(rep, "collision: " + m.to_string());
    }
    try {
      if (!(recompose(decompose(m, spec)) == m)) {
        ++rep.round_trip_failures;
        note(rep, "round trip changed " + m.to_string());
      }
    } catch (const Error&) {
      ++rep.round_trip_failures;
      note(rep, "no decomposition: " + m.to_string());
    }
  }
  for (const auto& [p, count] : hits) {
    if (!in_sip_class(p, spec)) {
      ++rep.extraneous;
      note(rep, "outside class: " + p.to_string());
    }
  }
  return rep;
}

namespace {

// For each reachable last part of an n-part basis element, the minimal total.
std::map<int, long long> basis_frontier(const SipClassSpec& spec, int n) {
  if (n < 1) throw InvalidArgument("part count must be positive");
  std::map<int, long long> level;
  for (int r = 1; r <= spec.k(); ++r) level.emplace(spec.c(r), spec.c(r));
  for (int i = 2; i <= n; ++i) {
    std::map<int, long long> next;
    for (const auto& [last, total] : level) {
      for (int r = 1; r <= spec.k(); ++r) {
        int x = next_basis_part(spec, last, r);
        auto [it, inserted] = next.emplace(x, total + x);
        if (!inserted) it->second = std::min(it->second, total + x);
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace

long long min_basis_total(const SipClassSpec& spec, int n) {
  if (n == 0) return 0;
  long long best = -1;
  for (const auto& [last, total] : basis_frontier(spec, n))
    if (best < 0 || total < best) best = total;
  return best;
}

long long max_basis_largest(const SipClassSpec& spec, int n) {
  if (n == 0) return 0;
  return basis_frontier(spec, n).rbegin()->first;
}

BasisTable::BasisTable(const SipClassSpec& spec, int max_n, int max_h)
    : max_n_(max_n), max_h_(max_h), markers_(spec.markers()),
      zero_(QSeries::zero_polynomial(spec.markers())) {
  if (max_n < 1) throw InvalidArgument("basis table needs max_n >= 1");
  if (max_h < 0) throw InvalidArgument("basis table needs max_h >= 0");
  const int k = spec.k();
  entries_.assign(static_cast<std::size_t>(max_n) + 1,
                  std::vector<QSeries>(static_cast<std::size_t>(max_h) + 1, zero_));
  for (int r = 1; r <= k; ++r) {
    int c = spec.c(r);
    if (c <= max_h)
      entries_[1][static_cast<std::size_t>(c)] =
          QSeries::monomial(static_cast<std::size_t>(c), spec.weight(c), markers_);
  }
  for (int n = 2; n <= max_n; ++n) {
    for (int h = 1; h <= max_h; ++h) {
      int d = spec.d(spec.residue(h));
      QSeries sum = zero_;
      for (int g = std::max(1, h - d - k + 1); g <= h - d; ++g)
        sum += entries_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(g)];
      if (sum.is_zero()) continue;
      entries_[static_cast<std::size_t>(n)][static_cast<std::size_t>(h)] =
          sum.shifted(static_cast<std::size_t>(h)).scaled(spec.weight(h));
    }
  }
}

const QSeries& BasisTable::at(int n, int h) const {
  if (n < 1 || n > max_n_ || h < 1 || h > max_h_) return zero_;
  return entries_[static_cast<std::size_t>(n)][static_cast<std::size_t>(h)];
}

QSeries BasisTable::row(int n) const {
  QSeries sum = zero_;
  for (int h = 1; h <= max_h_; ++h) sum += at(n, h);
  return sum;
}

QSeries assemble_gf(const SipClassSpec& spec, const BasisTable& table, std::size_t trunc) {
  const auto T = static_cast<long long>(trunc);
  QSeries total = QSeries::one(trunc, spec.markers());
  for (int n = 1; min_basis_total(spec, n) <= T; ++n) {
    if (n > table.max_n())
      throw InsufficientTableDepth("basis table stops at n = " + std::to_string(table.max_n()) +
                                   " but " + std::to_string(n) +
                                   "-part basis elements reach total " + std::to_string(T));
    if (table.max_h() < std::min(T, max_basis_largest(spec, n)))
      throw InsufficientTableDepth("basis table stops at largest part " +
                                   std::to_string(table.max_h()));
    QSeries denom = poch_finite(PochSpec::minus(spec.k(), spec.k()), static_cast<std::size_t>(n), trunc);
    total += table.row(n).truncated(trunc) * denom.inverse(trunc);
  }
  return total;
}

QSeries assemble_gf(const SipClassSpec& spec, std::size_t trunc) {
  const auto T = static_cast<long long>(trunc);
  int max_n = 1;
  while (min_basis_total(spec, max_n + 1) <= T) ++max_n;
  return assemble_gf(spec, BasisTable(spec, max_n, static_cast<int>(trunc)), trunc);
}

}  // namespace sipq
