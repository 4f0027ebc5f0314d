#include "sipq/catalog.hpp"

#include <algorithm>
#include <future>
#include <map>

#include "sipq/errors.hpp"
#include "sipq/ncopies.hpp"
#include "sipq/partitions.hpp"
#include "sipq/qfactory.hpp"
#include "sipq/sip.hpp"

namespace sipq {

namespace {

using Term = std::function<QSeries(std::size_t n, std::size_t trunc)>;

// sum_{n >= 0} term(n), stopping once the leading exponent passes trunc.
QSeries sum_terms(std::size_t trunc, const std::function<long long(std::size_t)>& lead,
                  const Term& term, const MarkerRegistry& markers = {}) {
  QSeries total = QSeries::zero(trunc, markers);
  for (std::size_t n = 0; lead(n) <= static_cast<long long>(trunc); ++n) total += term(n, trunc);
  return total;
}

QSeries inv(const QSeries& s, std::size_t trunc) { return s.inverse(trunc); }

QSeries qq(std::size_t n, std::size_t trunc) { return poch_finite(PochSpec::minus(1, 1), n, trunc); }

// q^e / ((q;q)_n (q;q^2)_n)
QSeries slater_term(long long e, std::size_t n, std::size_t trunc) {
  if (e > static_cast<long long>(trunc)) return QSeries::zero(trunc);
  return QSeries::monomial(static_cast<std::size_t>(e)) *
         inv(qq(n, trunc) * poch_finite(PochSpec::minus(1, 2), n, trunc), trunc);
}

QSeries product_allowed(std::int64_t m, std::set<std::int64_t> residues, std::size_t trunc) {
  return congruence_product(CongruenceProductSpec::allowed(m, std::move(residues)), trunc);
}

QSeries product_excluded(std::int64_t m, std::set<std::int64_t> residues, std::size_t trunc) {
  return congruence_product(CongruenceProductSpec::excluded(m, std::move(residues)), trunc);
}

QSeries all_markers_one(const QSeries& s) {
  std::map<std::string, BigInt> ones;
  for (const auto& name : s.markers()) ones.emplace(name, BigInt(1));
  return s.specialize_markers(ones);
}

// Oracles: brute-force counts, no generating functions involved.

template <class Range>
std::vector<long long> tally(const Range& objects, int total_max) {
  return count_by_total(objects, total_max);
}

IdentityOracle parts_oracle(std::string name, std::function<bool(int)> allowed) {
  return {std::move(name), [allowed](int T) {
            return tally(enumerate_partitions(T, [allowed](const Partition& p) {
                           return std::all_of(p.parts().begin(), p.parts().end(), allowed);
                         }),
                         T);
          }};
}

IdentityOracle class_oracle(std::string name, SipClassSpec spec) {
  return {std::move(name), [spec](int T) { return tally(enumerate_sip_class(spec, T), T); }};
}

IdentityOracle ncopies_oracle(std::string name, int r) {
  return {std::move(name), [r](int T) { return tally(enumerate_ncopies(T, r), T); }};
}

std::vector<IdentityEntry> build_registry() {
  std::vector<IdentityEntry> reg;

  reg.push_back({"euler-any", "sum q^n/(q;q)_n = 1/(q;q)_inf",
                 [](std::size_t T) {
                   return sum_terms(T, [](std::size_t n) { return static_cast<long long>(n); },
                                    [](std::size_t n, std::size_t t) {
                                      return QSeries::monomial(n) * inv(qq(n, t), t);
                                    });
                 },
                 [](std::size_t T) { return inv(poch_infinite(PochSpec::minus(1, 1), T), T); },
                 {parts_oracle("all partitions", [](int) { return true; })}});

  reg.push_back({"euler-distinct", "sum q^{n(n+1)/2}/(q;q)_n = (-q;q)_inf",
                 [](std::size_t T) {
                   return sum_terms(
                       T, [](std::size_t n) { return static_cast<long long>(n * (n + 1) / 2); },
                       [](std::size_t n, std::size_t t) {
                         return QSeries::monomial(n * (n + 1) / 2) * inv(qq(n, t), t);
                       });
                 },
                 [](std::size_t T) { return poch_infinite(PochSpec::plus(1, 1), T); },
                 {class_oracle("distinct parts", SipClassSpec::distinct())}});

  reg.push_back({"rogers-ramanujan", "sum q^{n^2}/(q;q)_n = 1/((q;q^5)_inf (q^4;q^5)_inf)",
                 [](std::size_t T) {
                   return sum_terms(T, [](std::size_t n) { return static_cast<long long>(n * n); },
                                    [](std::size_t n, std::size_t t) {
                                      return QSeries::monomial(n * n) * inv(qq(n, t), t);
                                    });
                 },
                 [](std::size_t T) {
                   return inv(poch_infinite(PochSpec::minus(1, 5), T) *
                                  poch_infinite(PochSpec::minus(4, 5), T),
                              T);
                 },
                 {class_oracle("parts differ by at least 2", SipClassSpec::rogers_ramanujan()),
                  parts_oracle("parts 1, 4 mod 5", [](int n) { return n % 5 == 1 || n % 5 == 4; })}});

  reg.push_back(
      {"gollnitz-gordon-1",
       "sum q^{n^2}(-q;q^2)_n/(q^2;q^2)_n = 1/((q;q^8)(q^4;q^8)(q^7;q^8))_inf",
       [](std::size_t T) {
         return sum_terms(T, [](std::size_t n) { return static_cast<long long>(n * n); },
                          [](std::size_t n, std::size_t t) {
                            return QSeries::monomial(n * n) * poch_finite(PochSpec::plus(1, 2), n, t) *
                                   inv(poch_finite(PochSpec::minus(2, 2), n, t), t);
                          });
       },
       [](std::size_t T) {
         return inv(poch_infinite(PochSpec::minus(1, 8), T) * poch_infinite(PochSpec::minus(4, 8), T) *
                        poch_infinite(PochSpec::minus(7, 8), T),
                    T);
       },
       {class_oracle("difference >= 2, >= 4 between evens", SipClassSpec::gollnitz_gordon()),
        parts_oracle("parts 1, 4, 7 mod 8", [](int n) { return n % 8 == 1 || n % 8 == 4 || n % 8 == 7; })}});

  reg.push_back(
      {"schur-refined",
       "sum b_S(n)/(q^3;q^3)_n = (-uq;q^3)_inf (-vq^2;q^3)_inf",
       [](std::size_t T) { return assemble_gf(SipClassSpec::schur_refined(), T); },
       [](std::size_t T) {
         return poch_infinite(PochSpec{true, "u", 1, 3}, T) * poch_infinite(PochSpec{true, "v", 2, 3}, T);
       },
       {class_oracle("Schur class", SipClassSpec::schur()),
        {"distinct parts 1, 2 mod 3",
         [](int T) {
           return tally(enumerate_partitions(T,
                                             [](const Partition& p) {
                                               const auto& v = p.parts();
                                               for (std::size_t i = 0; i < v.size(); ++i)
                                                 if (v[i] % 3 == 0 || (i > 0 && v[i] == v[i - 1])) return false;
                                               return true;
                                             }),
                        T);
         }},
        parts_oracle("parts 1, 5 mod 6", [](int n) { return n % 6 == 1 || n % 6 == 5; })},
       true});

  reg.push_back(
      {"glasgow-mod8",
       "1 + (q^2+q^3)/(1-q^2) + sum_{n>=2} (-q^3;q^4)_{n-1} q^{2n}(1+q^{2n-1})/(q^2;q^2)_n = "
       "prod_{n not 1,5,6 mod 8} 1/(1-q^n)",
       [](std::size_t T) {
         QSeries total = QSeries::one(T);
         total += (QSeries::monomial(2) + QSeries::monomial(3)) *
                  inv(QSeries::one_polynomial() - QSeries::monomial(2), T);
         for (std::size_t n = 2; 2 * n <= T; ++n)
           total += poch_finite(PochSpec::plus(3, 4), n - 1, T) * QSeries::monomial(2 * n) *
                    (QSeries::one_polynomial() + QSeries::monomial(2 * n - 1)) *
                    inv(poch_finite(PochSpec::minus(2, 2), n, T), T);
         return total;
       },
       [](std::size_t T) { return product_excluded(8, {1, 5, 6}, T); },
       {{"B: glasgow condition",
         [](int T) { return tally(enumerate_partitions(T, glasgow_condition), T); }},
        class_oracle("glasgow SIP class", SipClassSpec::glasgow()),
        parts_oracle("A: parts not 1, 5, 6 mod 8",
                     [](int n) { return n % 8 != 1 && n % 8 != 5 && n % 8 != 6; })}});

  reg.push_back({"slater-46", "sum q^{n(3n-1)/2}/((q;q)_n (q;q^2)_n) = prod_{n not 0,+-4 mod 10} 1/(1-q^n)",
                 [](std::size_t T) {
                   return sum_terms(
                       T, [](std::size_t n) { return static_cast<long long>(n * (3 * n - 1) / 2); },
                       [](std::size_t n, std::size_t t) {
                         return slater_term(static_cast<long long>(n * (3 * n - 1) / 2), n, t);
                       });
                 },
                 [](std::size_t T) { return product_excluded(10, {0, 4, -4}, T); },
                 {ncopies_oracle("n copies of n, weighted difference >= 1", 1),
                  parts_oracle("parts not 0, +-4 mod 10",
                               [](int n) { return n % 10 != 0 && n % 10 != 4 && n % 10 != 6; })}});

  reg.push_back({"slater-61", "sum q^{n^2}/((q;q)_n (q;q^2)_n) = prod_{n not 0,+-6 mod 14} 1/(1-q^n)",
                 [](std::size_t T) {
                   return sum_terms(T, [](std::size_t n) { return static_cast<long long>(n * n); },
                                    [](std::size_t n, std::size_t t) {
                                      return slater_term(static_cast<long long>(n * n), n, t);
                                    });
                 },
                 [](std::size_t T) { return product_excluded(14, {0, 6, -6}, T); },
                 {ncopies_oracle("n copies of n, weighted difference >= 0", 0),
                  parts_oracle("parts not 0, +-6 mod 14",
                               [](int n) { return n % 14 != 0 && n % 14 != 6 && n % 14 != 8; })}});

  reg.push_back(
      {"slater-81",
       "sum q^{n(n+1)/2}/((q;q)_n (q;q^2)_n) = prod (1+q^{7n}) / ((1-q^{14m-3})(1-q^{14m-11})) "
       "* prod_{n = +-1..+-5 mod 14} 1/(1-q^n)",
       [](std::size_t T) {
         return sum_terms(T, [](std::size_t n) { return static_cast<long long>(n * (n + 1) / 2); },
                          [](std::size_t n, std::size_t t) {
                            return slater_term(static_cast<long long>(n * (n + 1) / 2), n, t);
                          });
       },
       [](std::size_t T) {
         return poch_infinite(PochSpec::plus(7, 7), T) * product_allowed(14, {3, -3}, T) *
                product_allowed(14, {1, -1, 2, -2, 3, -3, 4, -4, 5, -5}, T);
       },
       {ncopies_oracle("n copies of n, weighted difference >= -1", -1)}});

  reg.push_back(
      {"slater-6-corrected",
       "sum (-1;q)_n q^{n^2}/((q;q)_n (q;q^2)_n) = prod_{3 !| n} (1+q^n)/(1-q^n)",
       [](std::size_t T) {
         return sum_terms(T, [](std::size_t n) { return static_cast<long long>(n * n); },
                          [](std::size_t n, std::size_t t) {
                            // (-1;q)_n: factors 1 + q^i for i = 0..n-1.
                            return poch_finite(PochSpec::plus(0, 1), n, t) *
                                   slater_term(static_cast<long long>(n * n), n, t);
                          });
       },
       [](std::size_t T) {
         return poch_infinite(PochSpec::plus(1, 3), T) * poch_infinite(PochSpec::plus(2, 3), T) *
                product_excluded(3, {0}, T);
       },
       {{"L: n-copies overpartitions", [](int T) { return tally(enumerate_ncopies_over(T), T); }},
        {"J: overpartitions, no part divisible by 3", [](int T) {
           return tally(enumerate_overpartitions(T,
                                                 [](const Overpartition& o) {
                                                   for (int x : o.base().parts())
                                                     if (x % 3 == 0) return false;
                                                   return true;
                                                 }),
                        T);
         }}}});

  reg.push_back(
      {"slater-86", "sum q^{2n^2}/(q;q)_{2n} = prod_{n = +-2,+-3,+-4,+-5 mod 16} 1/(1-q^n)",
       [](std::size_t T) {
         return sum_terms(T, [](std::size_t n) { return static_cast<long long>(2 * n * n); },
                          [](std::size_t n, std::size_t t) {
                            return QSeries::monomial(2 * n * n) * inv(qq(2 * n, t), t);
                          });
       },
       [](std::size_t T) { return product_allowed(16, {2, -2, 3, -3, 4, -4, 5, -5}, T); },
       {{"H: even subscripts", [](int T) { return tally(enumerate_even_subscript(T), T); }},
        parts_oracle("G: parts +-2, +-3, +-4, +-5 mod 16", [](int n) {
          int x = n % 16;
          return x >= 2 && x <= 14 && (x <= 5 || x >= 11);
        })}});

  reg.push_back(
      {"mod7-sum", "sum_N q^{N^2}/(q;q)_N sum_m [N,m] q^{m^2} = prod_{n not 0,+-3 mod 7} 1/(1-q^n)",
       [](std::size_t T) {
         return sum_terms(T, [](std::size_t N) { return static_cast<long long>(N * N); },
                          [](std::size_t N, std::size_t t) {
                            QSeries inner = QSeries::zero_polynomial();
                            for (std::size_t m = 0; m <= N && N * N + m * m <= t; ++m)
                              inner += QSeries::monomial(m * m) *
                                       gaussian_binomial(static_cast<std::int64_t>(N),
                                                         static_cast<std::int64_t>(m));
                            return QSeries::monomial(N * N) * inner.truncated(t) * inv(qq(N, t), t);
                          });
       },
       [](std::size_t T) { return product_excluded(7, {0, 3, -3}, T); },
       {}});

  return reg;
}

}  // namespace

const std::vector<IdentityEntry>& identity_registry() {
  static const std::vector<IdentityEntry> reg = build_registry();
  return reg;
}

const IdentityEntry& find_identity(const std::string& id) {
  for (const auto& e : identity_registry())
    if (e.id == id) return e;
  throw UnknownIdentity("no identity named '" + id + "'");
}

VerifyReport verify(const std::string& id, std::size_t trunc) {
  const auto& entry = find_identity(id);
  VerifyReport rep;
  rep.id = id;
  rep.trunc = trunc;
  QSeries lhs = entry.lhs(trunc).truncated(trunc);
  QSeries rhs = entry.rhs(trunc).truncated(trunc);
  if (lhs.trunc() < trunc || rhs.trunc() < trunc) {
    rep.detail = "a side stopped short of q^" + std::to_string(trunc);
    return rep;
  }
  rep.first_mismatch = first_mismatch(lhs, rhs);
  rep.pass = !rep.first_mismatch;
  if (rep.pass) {
    rep.detail = "agrees through q^" + std::to_string(trunc);
  } else {
    std::size_t e = *rep.first_mismatch;
    rep.detail = "q^" + std::to_string(e) + ": lhs " + lhs.coefficient(e).to_string(lhs.markers()) +
                 ", rhs " + rhs.coefficient(e).to_string(rhs.markers());
  }
  return rep;
}

std::vector<VerifyReport> verify_all(std::size_t trunc) {
  std::vector<std::future<VerifyReport>> jobs;
  for (const auto& e : identity_registry())
    jobs.push_back(std::async(std::launch::async, [id = e.id, trunc] { return verify(id, trunc); }));
  std::vector<VerifyReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

OracleReport oracle_concordance(const std::string& id, int total_max) {
  const auto& entry = find_identity(id);
  if (entry.oracles.empty()) throw NoOracle("identity '" + id + "' has no partition statement");
  if (total_max < 0) throw InvalidArgument("total_max must be non-negative");
  auto T = static_cast<std::size_t>(total_max);
  OracleReport rep;
  rep.id = id;
  rep.total_max = total_max;
  QSeries lhs = all_markers_one(entry.lhs(T));
  QSeries rhs = all_markers_one(entry.rhs(T));
  for (const auto& o : entry.oracles) {
    rep.oracles.push_back(o.name);
    auto counts = o.counts(total_max);
    for (std::size_t n = 0; n <= T; ++n) {
      BigInt c = n < counts.size() ? BigInt(counts[n]) : BigInt(0);
      if (lhs.int_coefficient(n) != c)
        rep.mismatches.push_back(o.name + " vs lhs at " + std::to_string(n));
      if (rhs.int_coefficient(n) != c)
        rep.mismatches.push_back(o.name + " vs rhs at " + std::to_string(n));
    }
  }
  return rep;
}

bool ChainReport::pass() const {
  return !steps.empty() &&
         std::all_of(steps.begin(), steps.end(), [](const StepReport& s) { return s.pass; });
}

namespace {

StepReport compare(std::string name, const QSeries& a, const QSeries& b, std::size_t trunc) {
  StepReport s;
  s.name = std::move(name);
  QSeries x = a.truncated(trunc), y = b.truncated(trunc);
  if (x.trunc() < trunc || y.trunc() < trunc) return s;
  s.first_mismatch = first_mismatch(x, y);
  s.pass = !s.first_mismatch;
  return s;
}

}  // namespace

ChainReport telescope_check(int N_max, std::size_t trunc) {
  if (N_max < 1) throw InvalidArgument("telescope_check needs N_max >= 1");
  ChainReport rep;
  rep.trunc = trunc;
  auto term = [trunc](std::size_t n) {
    if (n == 1)
      return (QSeries::monomial(2) + QSeries::monomial(3)) *
             (QSeries::one_polynomial() - QSeries::monomial(2)).inverse(trunc);
    return poch_finite(PochSpec::plus(3, 4), n - 1, trunc) * QSeries::monomial(2 * n) *
           (QSeries::one_polynomial() + QSeries::monomial(2 * n - 1)) *
           poch_finite(PochSpec::minus(2, 2), n, trunc).inverse(trunc);
  };
  auto closed = [trunc](std::size_t N) {
    return poch_finite(PochSpec::plus(3, 4), N, trunc) *
           poch_finite(PochSpec::minus(2, 2), N, trunc).inverse(trunc);
  };
  QSeries partial = QSeries::one(trunc);
  QSeries prev_closed = QSeries::one(trunc);
  for (int N = 1; N <= N_max; ++N) {
    auto n = static_cast<std::size_t>(N);
    QSeries t = term(n);
    partial += t;
    QSeries c = closed(n);
    rep.steps.push_back(compare("partial sum through N=" + std::to_string(N), partial, c, trunc));
    rep.steps.push_back(compare("step N=" + std::to_string(N), c - prev_closed, t, trunc));
    prev_closed = c;
  }
  return rep;
}

ChainReport gollnitz_gordon_pivot(std::size_t trunc) {
  ChainReport rep;
  rep.trunc = trunc;
  const auto& gg = find_identity("gollnitz-gordon-1");
  // (-q;-q)_{2j} is (q;q)_{2j} with q -> -q.
  QSeries inner = QSeries::zero(trunc);
  for (std::size_t j = 0; 2 * j * j <= trunc; ++j)
    inner += QSeries::monomial(2 * j * j) *
             poch_finite(PochSpec::minus(1, 1), 2 * j, trunc).substitute(-1, 1).inverse(trunc);
  QSeries pivot = poch_infinite(PochSpec::plus(1, 2), trunc) * inner;
  QSeries lhs = gg.lhs(trunc), rhs = gg.rhs(trunc);
  rep.steps.push_back(compare("pivot = series side", pivot, lhs, trunc));
  rep.steps.push_back(compare("pivot = product side", pivot, rhs, trunc));

  // P_G(-q^2), read against forms in q. Substitution doubles the reach.
  const std::size_t T2 = 2 * trunc;
  QSeries at_neg = negate_square(pivot);
  QSeries q2q4 = poch_infinite(PochSpec::minus(2, 4), T2);
  QSeries q4q4_inv = poch_infinite(PochSpec::minus(4, 4), T2).inverse(T2);
  QSeries half_sum = (poch_infinite(PochSpec::plus(1, 2), T2) + poch_infinite(PochSpec::minus(1, 2), T2));
  QSeries even_j = QSeries::zero(T2);
  for (std::size_t j = 0; j * j <= T2; j += 2)
    even_j += QSeries::monomial(j * j) * poch_finite(PochSpec::minus(2, 2), j, T2).inverse(T2);
  rep.steps.push_back(compare("(q^2;q^4) * sum over even j", at_neg, q2q4 * even_j, T2));
  // (q^2;q^4)/2 ((-q;q^2) + (q;q^2)); halve coefficientwise.
  std::vector<BigInt> halved;
  for (std::size_t i = 0; i <= T2; ++i) halved.push_back(half_sum.int_coefficient(i) / 2);
  rep.steps.push_back(
      compare("(q^2;q^4) ((-q;q^2) + (q;q^2)) / 2", at_neg, q2q4 * QSeries::from_integers(halved).truncated(T2), T2));
  rep.steps.push_back(compare("theta form sum q^{8n^2-2n}", at_neg,
                              q2q4 * q4q4_inv * theta_sum(8, -2, T2), T2));
  QSeries triple = poch_infinite(PochSpec::minus(16, 16), T2) * poch_infinite(PochSpec::plus(6, 16), T2) *
                   poch_infinite(PochSpec::plus(10, 16), T2);
  rep.steps.push_back(compare("triple product form", at_neg, q2q4 * q4q4_inv * triple, T2));
  rep.steps.push_back(compare("product side at -q^2", at_neg, negate_square(rhs), T2));
  return rep;
}

}  // namespace sipq
