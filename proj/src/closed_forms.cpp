#include "sipq/closed_forms.hpp"

#include "sipq/errors.hpp"
#include "sipq/qfactory.hpp"
#include "sipq/sip.hpp"

namespace sipq {

namespace {

const MarkerRegistry kUV{"u", "v"};

QSeries q_pow(long long e) {
  if (e < 0) throw InvalidArgument("closed form produced a negative q-exponent");
  return QSeries::monomial(static_cast<std::size_t>(e));
}

// u^a v^b q^e in the {u, v} registry.
QSeries uvq(long long a, long long b, long long e) {
  if (a < 0 || b < 0 || e < 0) throw InvalidArgument("closed form produced a negative exponent");
  return QSeries::monomial(static_cast<std::size_t>(e),
                           MarkerPoly::monomial({static_cast<std::uint32_t>(a),
                                                 static_cast<std::uint32_t>(b)},
                                                1),
                           kUV);
}

QSeries g3(long long A, long long B) { return gaussian_binomial(A, B, 3); }

QSeries one_plus_uq() { return QSeries::one_polynomial(kUV) + uvq(1, 0, 1); }

QSeries schur_minus1(int n, int h) {
  QSeries sum = QSeries::zero_polynomial(kUV);
  for (int j = 0; j <= n - h; ++j) {
    QSeries outer = g3(n - j - 1, h);
    if (outer.is_zero()) continue;
    for (int i = 0; i <= h; ++i) {
      QSeries bin = outer * g3(j + h - i, h) * g3(h, i);
      if (bin.is_zero()) continue;
      long long twice = 1LL * n * (3 * n + 1) + 1LL * h * (3 * h + 5) + 1LL * i * (3 * i + 1);
      sum += uvq(j + h - i, n - j, twice / 2 - j) * bin;
    }
  }
  return sum;
}

QSeries schur_minus2(int n, int h) {
  if (h < 0) return QSeries::zero_polynomial(kUV);
  if (h == 0) return uvq(n, 0, 1LL * n * (3 * n - 1) / 2);
  QSeries sum = QSeries::zero_polynomial(kUV);
  for (int j = 0; j <= n - h + 1; ++j) {
    QSeries outer = g3(n - j - 1, h - 1);
    if (outer.is_zero()) continue;
    for (int i = 0; i <= h; ++i) {
      QSeries bin = outer * g3(j + h - i, h) * g3(h - 1, i - 1);
      if (bin.is_zero()) continue;
      long long twice = 1LL * n * (3 * n + 1) + 1LL * h * (3 * h + 5) + 1LL * i * (3 * i - 5);
      sum += uvq(j + h - i, n - j, twice / 2 - j) * bin;
    }
  }
  return one_plus_uq() * sum;
}

}  // namespace

std::string to_string(ClosedFormId id) {
  switch (id) {
    case ClosedFormId::gollnitz: return "gollnitz";
    case ClosedFormId::schur_minus1: return "schur-3n+3h-1";
    case ClosedFormId::schur_minus2: return "schur-3n+3h-2";
    case ClosedFormId::schur_zero: return "schur-3n+3h";
    case ClosedFormId::schur_combined: return "schur-combined";
    case ClosedFormId::glasgow_plus1: return "glasgow-4h+1";
    case ClosedFormId::glasgow_zero: return "glasgow-4h";
    case ClosedFormId::glasgow_minus1: return "glasgow-4h-1";
    case ClosedFormId::glasgow_minus2: return "glasgow-4h-2";
    case ClosedFormId::glasgow_row_sums: return "glasgow-row-sums";
    case ClosedFormId::chu_vandermonde: return "chu-vandermonde";
    case ClosedFormId::reciprocal_pochhammer: return "reciprocal-pochhammer";
  }
  return "unknown";
}

std::vector<ClosedFormId> all_closed_forms() {
  return {ClosedFormId::gollnitz,       ClosedFormId::schur_minus1,     ClosedFormId::schur_minus2,
          ClosedFormId::schur_zero,     ClosedFormId::schur_combined,   ClosedFormId::glasgow_plus1,
          ClosedFormId::glasgow_zero,   ClosedFormId::glasgow_minus1,   ClosedFormId::glasgow_minus2,
          ClosedFormId::glasgow_row_sums, ClosedFormId::chu_vandermonde,
          ClosedFormId::reciprocal_pochhammer};
}

QSeries gollnitz_closed(int n, int h) {
  if (n < 1 || h < 0) throw InvalidArgument("gollnitz_closed needs n >= 1, h >= 0");
  return q_pow(1LL * n * n + 1LL * h * h + 2LL * h) * gaussian_binomial(n - 1, h, 2);
}

QSeries schur_closed(int n, int h, SchurBranch branch) {
  if (n < 1) throw InvalidArgument("schur_closed needs n >= 1");
  switch (branch) {
    case SchurBranch::minus1: return schur_minus1(n, h);
    case SchurBranch::minus2: return schur_minus2(n, h);
    case SchurBranch::zero: return uvq(1, 0, 1) * schur_minus1(n, h);
  }
  throw InvalidArgument("unknown Schur branch");
}

QSeries glasgow_closed(int n, int h, GlasgowClass cls) {
  if (n < 2) throw InvalidArgument("glasgow_closed needs n >= 2");
  const long long sq = 2LL * h * h;
  switch (cls) {
    case GlasgowClass::plus1: {
      auto b = gaussian_binomial(n - 2, h - 1, 4);
      return b.is_zero() ? b : q_pow(2LL * n + sq + h) * b;
    }
    case GlasgowClass::zero: {
      auto b = gaussian_binomial(n - 2, h - 1, 4);
      return b.is_zero() ? b : q_pow(4LL * n - 4 + sq + h) * b;
    }
    case GlasgowClass::minus1: {
      auto b = gaussian_binomial(n - 2, h - 2, 4);
      return b.is_zero() ? b : q_pow(4LL * n + sq - 3LL * h) * b;
    }
    case GlasgowClass::minus2: {
      auto b = gaussian_binomial(n - 2, h - 1, 4);
      return b.is_zero() ? b : q_pow(2LL * n - 3 + sq + h) * b;
    }
  }
  throw InvalidArgument("unknown Glasgow class");
}

GlasgowRowSums glasgow_row_sums(int n) {
  if (n < 2) throw InvalidArgument("glasgow_row_sums needs n >= 2");
  auto p = poch_finite(PochSpec::plus(7, 4), static_cast<std::size_t>(n - 2),
                       static_cast<std::size_t>(2 * n * n + 10 * n + 10));
  return {q_pow(2LL * n + 3) * p, q_pow(4LL * n - 1) * p, q_pow(4LL * n + 2) * p,
          q_pow(2LL * n) * p};
}

QSeries combined_row_formula(int n, int h) {
  if (n < 1 || h < -1) throw InvalidArgument("combined_row_formula needs n >= 1, h >= -1");
  QSeries sum = QSeries::zero_polynomial(kUV);
  for (int j = 0; j <= n - h; ++j) {
    // [-1, -1]_3 is 1 here (ratio of empty Pochhammers), not the zero extension.
    QSeries outer = (n - 1 - j == -1 && h == -1) ? QSeries::one_polynomial() : g3(n - 1 - j, h);
    if (outer.is_zero()) continue;
    for (int i = -1; i <= h; ++i) {
      QSeries bin = outer * g3(j + h - i, j) * g3(j + 1, i + 1);
      if (bin.is_zero()) continue;
      long long twice = 1LL * n * (3 * n + 1) + 1LL * h * (3 * h + 5) + 1LL * i * (3 * i + 1);
      sum += uvq(j + h - i, n - j, twice / 2 - j) * bin;
    }
  }
  return sum;
}

bool chu_vandermonde_check(int r, int s, int n) {
  if (r < 0 || n < 0 || s < 1) throw InvalidArgument("chu_vandermonde_check needs r, n >= 0, s >= 1");
  QSeries lhs = QSeries::zero_polynomial();
  for (int h = 0; h <= r; ++h) {
    long long e = 3LL * h * h + 3LL * h * (n + 1 - r);
    QSeries bin = g3(s - 1, h) * g3(n + 1, r - h);
    if (bin.is_zero()) continue;
    lhs += q_pow(e) * bin;
  }
  return lhs == g3(n + s, r);
}

namespace {

QSeries q3_poch(int n, std::size_t trunc) {
  return poch_finite(PochSpec::minus(3, 3), static_cast<std::size_t>(n), trunc);
}

}  // namespace

bool reciprocal_pochhammer_check(int r, int s, std::size_t trunc) {
  if (r < 0 || s < 0) throw InvalidArgument("reciprocal_pochhammer_check needs r, s >= 0");
  QSeries lhs = QSeries::zero(trunc);
  for (int n = 0; n <= r; ++n) {
    QSeries bin = g3(r, n) * g3(n + s, r);
    if (bin.is_zero()) continue;
    long long e = 3LL * n * n + 3LL * n * (s - r);
    if (e > static_cast<long long>(trunc)) continue;
    lhs += q_pow(e) * bin * q3_poch(n + s, trunc).inverse(trunc);
  }
  QSeries rhs = (q3_poch(r, trunc) * q3_poch(s, trunc)).inverse(trunc);
  return lhs == rhs;
}

bool schur_coefficient_check(int r, int s, std::size_t trunc) {
  if (r < 0 || s < 0) throw InvalidArgument("schur_coefficient_check needs r, s >= 0");
  const auto T = static_cast<long long>(trunc);
  // An n-part basis element has total at least n(3n-1)/2, which bounds n.
  std::vector<BigInt> lhs(trunc + 1, BigInt(0));
  if (r == 0 && s == 0) lhs[0] = 1;
  for (int n = 1; 1LL * n * (3 * n - 1) / 2 <= T; ++n) {
    QSeries row = QSeries::zero_polynomial(kUV);
    for (int h = -1; h <= n; ++h) row += combined_row_formula(n, h);
    QSeries term = row.truncated(trunc) * q3_poch(n, trunc).inverse(trunc);
    for (std::size_t e = 0; e <= trunc; ++e)
      lhs[e] += term.coefficient(e, Monomial{static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(s)});
  }
  long long e0 = 1LL * r * (3 * r - 1) / 2 + 1LL * s * (3 * s + 1) / 2;
  QSeries rhs = e0 > T ? QSeries::zero(trunc)
                       : q_pow(e0) * (q3_poch(r, trunc) * q3_poch(s, trunc)).inverse(trunc);
  return QSeries::from_integers(lhs) == rhs;
}

namespace {

void compare(ConcordanceReport& rep, const QSeries& formula, const QSeries& table,
             const std::string& where) {
  ++rep.checked;
  if (!(formula == table)) rep.mismatches.push_back(where);
}

std::string at(int n, int h) { return "n=" + std::to_string(n) + ",h=" + std::to_string(h); }

}  // namespace

ConcordanceReport closed_form_concordance(ClosedFormId id, int max_n) {
  ConcordanceReport rep{id, 0, {}};
  switch (id) {
    case ClosedFormId::gollnitz: {
      auto spec = SipClassSpec::gollnitz_gordon();
      int H = static_cast<int>(max_basis_largest(spec, max_n)) + 2;
      BasisTable t(spec, max_n, H);
      for (int n = 1; n <= max_n; ++n)
        for (int h = 0; 2 * n + 2 * h <= H; ++h) {
          compare(rep, gollnitz_closed(n, h), t.at(n, 2 * n + 2 * h - 1), at(n, h));
          compare(rep, gollnitz_closed(n, h).shifted(1), t.at(n, 2 * n + 2 * h), at(n, h) + " even");
        }
      break;
    }
    case ClosedFormId::schur_minus1:
    case ClosedFormId::schur_minus2:
    case ClosedFormId::schur_zero:
    case ClosedFormId::schur_combined: {
      auto spec = SipClassSpec::schur_refined();
      int H = static_cast<int>(max_basis_largest(spec, max_n)) + 4;
      BasisTable t(spec, max_n, H);
      for (int n = 1; n <= max_n; ++n) {
        for (int h = -1; 3 * n + 3 * h + 1 <= H; ++h) {
          switch (id) {
            case ClosedFormId::schur_minus1:
              compare(rep, schur_closed(n, h, SchurBranch::minus1), t.at(n, 3 * n + 3 * h - 1), at(n, h));
              break;
            case ClosedFormId::schur_minus2:
              compare(rep, schur_closed(n, h, SchurBranch::minus2), t.at(n, 3 * n + 3 * h - 2), at(n, h));
              break;
            case ClosedFormId::schur_zero:
              compare(rep, schur_closed(n, h, SchurBranch::zero), t.at(n, 3 * n + 3 * h), at(n, h));
              break;
            default:
              compare(rep, combined_row_formula(n, h),
                      one_plus_uq() * t.at(n, 3 * n + 3 * h - 1) + t.at(n, 3 * n + 3 * h + 1), at(n, h));
          }
        }
      }
      if (id == ClosedFormId::schur_combined)
        for (int r = 0; r <= 3; ++r)
          for (int s = 0; s <= 3; ++s) {
            ++rep.checked;
            if (!schur_coefficient_check(r, s, 40))
              rep.mismatches.push_back("u^" + std::to_string(r) + " v^" + std::to_string(s));
          }
      break;
    }
    case ClosedFormId::glasgow_plus1:
    case ClosedFormId::glasgow_zero:
    case ClosedFormId::glasgow_minus1:
    case ClosedFormId::glasgow_minus2:
    case ClosedFormId::glasgow_row_sums: {
      auto spec = SipClassSpec::glasgow();
      int H = static_cast<int>(max_basis_largest(spec, max_n)) + 4;
      BasisTable t(spec, max_n, H);
      const std::pair<GlasgowClass, int> classes[] = {{GlasgowClass::plus1, 1},
                                                      {GlasgowClass::zero, 0},
                                                      {GlasgowClass::minus1, -1},
                                                      {GlasgowClass::minus2, -2}};
      for (int n = 2; n <= max_n; ++n) {
        if (id == ClosedFormId::glasgow_row_sums) {
          auto sums = glasgow_row_sums(n);
          const QSeries* parts[] = {&sums.plus1, &sums.zero, &sums.minus1, &sums.minus2};
          for (int c = 0; c < 4; ++c) {
            QSeries table_sum = QSeries::zero_polynomial();
            for (int h = 0; 4 * h + classes[c].second <= H; ++h)
              table_sum += t.at(n, 4 * h + classes[c].second);
            compare(rep, *parts[c], table_sum, "n=" + std::to_string(n) + " class " + std::to_string(c));
          }
          compare(rep, sums.total(), t.row(n), "n=" + std::to_string(n) + " total");
          continue;
        }
        for (const auto& [cls, offset] : classes) {
          bool wanted = (id == ClosedFormId::glasgow_plus1 && cls == GlasgowClass::plus1) ||
                        (id == ClosedFormId::glasgow_zero && cls == GlasgowClass::zero) ||
                        (id == ClosedFormId::glasgow_minus1 && cls == GlasgowClass::minus1) ||
                        (id == ClosedFormId::glasgow_minus2 && cls == GlasgowClass::minus2);
          if (!wanted) continue;
          for (int h = 0; 4 * h + offset <= H; ++h)
            compare(rep, glasgow_closed(n, h, cls), t.at(n, 4 * h + offset), at(n, h));
        }
      }
      break;
    }
    case ClosedFormId::chu_vandermonde:
      for (int r = 0; r <= 6; ++r)
        for (int s = 1; s <= 6; ++s)
          for (int n = 0; n <= 6; ++n) {
            ++rep.checked;
            if (!chu_vandermonde_check(r, s, n))
              rep.mismatches.push_back("r=" + std::to_string(r) + ",s=" + std::to_string(s) +
                                       ",n=" + std::to_string(n));
          }
      break;
    case ClosedFormId::reciprocal_pochhammer:
      for (int r = 0; r <= 5; ++r)
        for (int s = 0; s <= 5; ++s) {
          ++rep.checked;
          if (!reciprocal_pochhammer_check(r, s, 40))
            rep.mismatches.push_back("r=" + std::to_string(r) + ",s=" + std::to_string(s));
        }
      break;
  }
  return rep;
}

}  // namespace sipq
