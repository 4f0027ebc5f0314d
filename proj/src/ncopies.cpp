#include "sipq/ncopies.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sipq/errors.hpp"
#include "sipq/qfactory.hpp"

namespace sipq {

CopyPart::CopyPart(int v, int s, bool o) : value(v), subscript(s), overline(o) {
  if (s < 1 || s > v)
    throw InvalidArgument("subscript " + std::to_string(s) + " outside 1.." + std::to_string(v));
}

std::string CopyPart::to_string() const {
  return std::to_string(value) + "_" + std::to_string(subscript) + (overline ? "~" : "");
}

int weighted_difference(const CopyPart& a, const CopyPart& b) {
  return a.value - b.value - a.subscript - b.subscript;
}

NCopiesPartition::NCopiesPartition(std::vector<CopyPart> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    const auto& a = parts_[i - 1];
    const auto& b = parts_[i];
    if (lex_less(b, a)) throw InvalidArgument("n-copies parts must be in ascending order");
    // Equal pairs: the single overlined copy, if any, comes first.
    if (!lex_less(a, b) && b.overline)
      throw InvalidArgument("at most one overlined copy of " + b.to_string() + ", listed first");
  }
}

int NCopiesPartition::total() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0,
                         [](int s, const CopyPart& p) { return s + p.value; });
}

std::vector<int> NCopiesPartition::successive_differences() const {
  std::vector<int> out;
  for (std::size_t i = 1; i < parts_.size(); ++i)
    out.push_back(weighted_difference(parts_[i], parts_[i - 1]));
  return out;
}

bool NCopiesPartition::smallest_is_diagonal() const {
  return parts_.empty() || parts_[0].value == parts_[0].subscript;
}

NCopiesPartition NCopiesPartition::parse(const std::string& text) {
  std::vector<CopyPart> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    bool over = false;
    while (!item.empty() && (item.back() == '~' || item.back() == ' ')) {
      if (item.back() == '~') over = true;
      item.pop_back();
    }
    auto colon = item.find(':');
    if (colon == std::string::npos) throw InvalidArgument("n-copies part '" + item + "' needs value:subscript");
    int v = 0, s = 0;
    try {
      std::size_t u1 = 0, u2 = 0;
      std::string a = item.substr(0, colon), b = item.substr(colon + 1);
      v = std::stoi(a, &u1);
      s = std::stoi(b, &u2);
      if (u1 != a.size() || u2 != b.size()) throw InvalidArgument("");
    } catch (const std::exception&) {
      throw InvalidArgument("bad n-copies part '" + item + "'");
    }
    parts.emplace_back(v, s, over);
  }
  std::stable_sort(parts.begin(), parts.end(), [](const CopyPart& a, const CopyPart& b) {
    if (lex_less(a, b)) return true;
    if (lex_less(b, a)) return false;
    return a.overline && !b.overline;
  });
  return NCopiesPartition(std::move(parts));
}

std::string NCopiesPartition::to_string() const {
  if (parts_.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) out += (i ? "+" : "") + parts_[i].to_string();
  return out;
}

namespace {

void grow_ncopies(std::vector<CopyPart>& parts, int remaining, const std::optional<int>& min_diff,
                  const NCopiesPredicate& keep, std::vector<NCopiesPartition>& out) {
  NCopiesPartition p(parts);
  if (!keep || keep(p)) out.push_back(std::move(p));
  int start_value = parts.empty() ? 1 : parts.back().value;
  for (int v = start_value; v <= remaining; ++v) {
    int start_sub = (!parts.empty() && v == parts.back().value) ? parts.back().subscript : 1;
    for (int s = start_sub; s <= v; ++s) {
      CopyPart next(v, s);
      if (min_diff && !parts.empty() && weighted_difference(next, parts.back()) < *min_diff) continue;
      parts.push_back(next);
      grow_ncopies(parts, remaining - v, min_diff, keep, out);
      parts.pop_back();
    }
  }
}

}  // namespace

std::vector<NCopiesPartition> enumerate_ncopies(int total_max, std::optional<int> min_difference,
                                                const NCopiesPredicate& keep) {
  if (total_max < 0) throw InvalidArgument("total_max must be non-negative");
  if (min_difference && *min_difference < -1)
    throw InvalidArgument("weighted-difference bound must be >= -1");
  std::vector<NCopiesPartition> out;
  std::vector<CopyPart> parts;
  grow_ncopies(parts, total_max, min_difference, keep, out);
  return out;
}

bool is_exact_base(const NCopiesPartition& p, int r) {
  if (!p.smallest_is_diagonal()) return false;
  for (int d : p.successive_differences())
    if (d != r) return false;
  return true;
}

ExactBaseSplit split_exact_base(const NCopiesPartition& p, int r) {
  if (r < -1) throw ConstraintViolation("weighted-difference bound must be >= -1");
  for (int d : p.successive_differences())
    if (d < r)
      throw ConstraintViolation(p.to_string() + " has a weighted difference below " + std::to_string(r));
  std::vector<CopyPart> base;
  std::vector<int> attached;
  for (std::size_t k = 0; k < p.size(); ++k) {
    int s = p[k].subscript;
    int v = k == 0 ? s : base.back().value + base.back().subscript + s + r;
    base.emplace_back(v, s);
    attached.push_back(p[k].value - v);
  }
  return {NCopiesPartition(std::move(base)), std::move(attached)};
}

NCopiesPartition join_exact_base(const ExactBaseSplit& split, int r) {
  if (!is_exact_base(split.base, r))
    throw ConstraintViolation(split.base.to_string() + " is not an exact base for r = " + std::to_string(r));
  if (split.attached.size() != split.base.size())
    throw ConstraintViolation("attached list length differs from the base");
  std::vector<CopyPart> parts;
  for (std::size_t k = 0; k < split.base.size(); ++k) {
    int psi = split.attached[k];
    if (psi < 0 || (k > 0 && psi < split.attached[k - 1]))
      throw ConstraintViolation("attached list must be non-negative and non-decreasing");
    parts.emplace_back(split.base[k].value + psi, split.base[k].subscript);
  }
  return NCopiesPartition(std::move(parts));
}

GrTable::GrTable(int r, int max_n, int max_m)
    : r_(r), max_n_(max_n), max_m_(max_m), zero_(QSeries::zero_polynomial()) {
  if (r < -1) throw InvalidArgument("g_r needs r >= -1");
  if (max_n < 1 || max_m < 0) throw InvalidArgument("g_r table needs max_n >= 1, max_m >= 0");
  auto N = static_cast<std::size_t>(max_n), M = static_cast<std::size_t>(max_m);
  entries_.assign(N + 1, std::vector<std::vector<QSeries>>(M + 1));
  for (std::size_t n = 1; n <= N; ++n)
    for (std::size_t m = 1; m <= M; ++m) entries_[n][m].assign(m + 1, zero_);
  for (int m = 1; m <= max_m; ++m)
    entries_[1][static_cast<std::size_t>(m)][static_cast<std::size_t>(m)] =
        QSeries::monomial(static_cast<std::size_t>(m));
  for (int n = 2; n <= max_n; ++n)
    for (int m = 1; m <= max_m; ++m)
      for (int j = 1; j <= m; ++j) {
        QSeries sum = zero_;
        for (int i = 1; i <= m; ++i) sum += at(n - 1, m - j - i - r, i);
        if (!sum.is_zero())
          entries_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] =
              sum.shifted(static_cast<std::size_t>(m));
      }
}

const QSeries& GrTable::at(int n, int m, int j) const {
  if (n < 1 || n > max_n_ || m < 1 || m > max_m_ || j < 1 || j > m) return zero_;
  return entries_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)][static_cast<std::size_t>(j)];
}

namespace {

// q^e [A, B]_2, zero when the binomial vanishes.
QSeries monomial_binomial(long long e, long long A, long long B) {
  QSeries b = gaussian_binomial(A, B, 2);
  if (b.is_zero()) return b;
  if (e < 0) throw InvalidArgument("g_r closed form produced a negative exponent");
  return QSeries::monomial(static_cast<std::size_t>(e)) * b;
}

}  // namespace

QSeries gr_closed(int r, int n, int m, int j) {
  if (r < -1) throw InvalidArgument("g_r needs r >= -1");
  if (n < 1 || m < 1 || j < 1 || j > m) return QSeries::zero_polynomial();
  if (n == 1) return m == j ? QSeries::monomial(static_cast<std::size_t>(m)) : QSeries::zero_polynomial();
  const bool n_even = n % 2 == 0;
  const long long N = n_even ? n / 2 : (n + 1) / 2;
  if (r % 2 != 0) {
    const long long R = (r + 1) / 2;  // r = 2R - 1
    if (n_even) {
      // g(2N, 2M, 2J-1), and g(2N, 2M-1, 2J-2) = q^{-1} g(2N, 2M, 2J-1).
      long long M, J, drop;
      if (m % 2 == 0 && j % 2 == 1) {
        M = m / 2, J = (j + 1) / 2, drop = 0;
      } else if (m % 2 == 1 && j % 2 == 0) {
        M = (m + 1) / 2, J = (j + 2) / 2, drop = 1;
      } else {
        return QSeries::zero_polynomial();
      }
      return monomial_binomial(3 * M - J + (4 * R + 2) * N * N - (8 * R + 2) * N + 3 * R + 1 - drop,
                               M - (2 * R - 1) * N - J + R - 1, 2 * N - 2);
    }
    if (m % 2 != j % 2) return QSeries::zero_polynomial();
    long long drop = m % 2;
    long long M = (m + drop) / 2, J = (j + drop) / 2;
    return monomial_binomial(3 * M - J + (4 * R + 2) * N * N - (12 * R + 4) * N + 8 * R + 2 - drop,
                             M - (2 * R - 1) * N - J + 2 * R - 2, 2 * N - 3);
  }
  const long long R = r / 2;
  if (m % 2 != j % 2) return QSeries::zero_polynomial();
  long long drop = m % 2;
  long long M = (m + drop) / 2, J = (j + drop) / 2;
  if (n_even)
    return monomial_binomial(3 * M - J + (4 * R + 4) * N * N - (8 * R + 6) * N + 3 * R + 2 - drop,
                             M - 2 * R * N - J + R - 1, 2 * N - 2);
  return monomial_binomial(3 * M - J + (4 * R + 4) * N * N - (12 * R + 10) * N + 8 * R + 6 - drop,
                           M - 2 * R * N - J + 2 * R - 1, 2 * N - 3);
}

QSeries beta_r(int m, int r, std::size_t trunc) {
  if (r < -1 || m < 0) throw InvalidArgument("beta_r needs r >= -1, m >= 0");
  long long e = 1LL * m * m + 1LL * r * m * (m - 1) / 2;
  if (e > static_cast<long long>(trunc)) return QSeries::zero(trunc);
  return QSeries::monomial(static_cast<std::size_t>(e)) *
         poch_finite(PochSpec::minus(1, 2), static_cast<std::size_t>(m), trunc).inverse(trunc);
}

QSeries ncopies_gf(int r, std::size_t trunc) {
  if (r < -1) throw InvalidArgument("ncopies_gf needs r >= -1");
  QSeries sum = QSeries::zero(trunc);
  for (int m = 0;; ++m) {
    long long e = 1LL * m * m + 1LL * r * m * (m - 1) / 2;
    if (e > static_cast<long long>(trunc)) break;
    sum += beta_r(m, r, trunc) *
           poch_finite(PochSpec::minus(1, 1), static_cast<std::size_t>(m), trunc).inverse(trunc);
  }
  return sum;
}

std::vector<NCopiesPartition> enumerate_ncopies_over(int total_max) {
  std::vector<NCopiesPartition> out;
  for (const auto& p : enumerate_ncopies(total_max, 0)) {
    // Heads of maximal zero-difference runs are the only overline slots.
    std::vector<std::size_t> heads;
    auto diffs = p.successive_differences();
    for (std::size_t k = 0; k < p.size(); ++k)
      if (k == 0 || diffs[k - 1] != 0) heads.push_back(k);
    for (std::size_t mask = 0; mask < (std::size_t{1} << heads.size()); ++mask) {
      std::vector<CopyPart> parts = p.parts();
      for (std::size_t b = 0; b < heads.size(); ++b)
        if (mask >> b & 1) parts[heads[b]].overline = true;
      out.emplace_back(std::move(parts));
    }
  }
  return out;
}

std::vector<NCopiesPartition> enumerate_even_subscript(int total_max) {
  return enumerate_ncopies(total_max, 0, [](const NCopiesPartition& p) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p[k].subscript % 2 != 0) return false;
      if (k > 0 && p[k].value % 2 == 1 && p[k - 1].value % 2 == 1 &&
          weighted_difference(p[k], p[k - 1]) == 0)
        return false;
    }
    return true;
  });
}

std::vector<NCopiesPartition> enumerate_ncopies_overpartitions(int total_max) {
  std::vector<NCopiesPartition> out;
  for (const auto& p : enumerate_ncopies(total_max)) {
    std::vector<std::size_t> firsts;  // first copy of each distinct pair
    for (std::size_t k = 0; k < p.size(); ++k)
      if (k == 0 || lex_less(p[k - 1], p[k])) firsts.push_back(k);
    for (std::size_t mask = 0; mask < (std::size_t{1} << firsts.size()); ++mask) {
      std::vector<CopyPart> parts = p.parts();
      for (std::size_t b = 0; b < firsts.size(); ++b)
        if (mask >> b & 1) parts[firsts[b]].overline = true;
      out.emplace_back(std::move(parts));
    }
  }
  return out;
}

}  // namespace sipq
