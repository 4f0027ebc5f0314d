#include <map>
#include <set>
#include <tuple>

#include "doctest.h"
#include "oracle.hpp"
#include "sipq/errors.hpp"
#include "sipq/ncopies.hpp"
#include "sipq/partitions.hpp"
#include "sipq/qfactory.hpp"

using namespace sipq;

namespace {

std::set<std::string> names(const std::vector<NCopiesPartition>& ps, int total) {
  std::set<std::string> out;
  for (const auto& p : ps)
    if (p.total() == total) out.insert(p.to_string());
  return out;
}

std::vector<long long> counts(const std::vector<NCopiesPartition>& ps, int T) {
  std::vector<long long> c(static_cast<std::size_t>(T) + 1, 0);
  for (const auto& p : ps)
    if (p.total() <= T) ++c[static_cast<std::size_t>(p.total())];
  return c;
}

// Product over n >= 1 of 1/(1 - q^n) for n with allowed(n).
template <class Pred>
oracle::Poly product(std::size_t T, Pred allowed) {
  auto p = oracle::one(T);
  for (std::size_t n = 1; n <= T; ++n)
    if (allowed(n)) p = oracle::div_one_minus(p, n);
  return p;
}

// 1/(q;q^2)_m as a plain series.
oracle::Poly inv_odd_poch(int m, std::size_t T) {
  auto p = oracle::one(T);
  for (int i = 0; i < m; ++i) p = oracle::div_one_minus(p, static_cast<std::size_t>(2 * i + 1));
  return p;
}

oracle::Poly shift(const oracle::Poly& a, long long e) {
  oracle::Poly r(a.size(), 0);
  for (std::size_t i = 0; i + static_cast<std::size_t>(e) < a.size(); ++i)
    r[i + static_cast<std::size_t>(e)] = a[i];
  return r;
}

oracle::Poly add(oracle::Poly a, const oracle::Poly& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

}  // namespace

TEST_CASE("weighted differences and part validation") {
  CHECK(weighted_difference(CopyPart(7, 2), CopyPart(3, 2)) == 0);
  CHECK(weighted_difference(CopyPart(2, 2), CopyPart(1, 1)) == -2);
  CHECK(weighted_difference(CopyPart(8, 6), CopyPart(1, 1)) == 0);
  CHECK_THROWS_AS(CopyPart(3, 4), InvalidArgument);
  CHECK_THROWS_AS(CopyPart(3, 0), InvalidArgument);
  CHECK_THROWS_AS(NCopiesPartition({CopyPart(3, 1), CopyPart(2, 2)}), InvalidArgument);
  auto p = NCopiesPartition::parse("3:1,1:1~");
  CHECK(p.to_string() == "1_1~+3_1");
  CHECK(p.total() == 4);
  CHECK(p.successive_differences() == std::vector<int>{0});
  CHECK(NCopiesPartition::parse("1:1,1:1~").to_string() == "1_1~+1_1");
  CHECK_THROWS_AS(NCopiesPartition::parse("2-1"), InvalidArgument);
  CHECK(NCopiesPartition().to_string() == "()");
}

TEST_CASE("six n-copies partitions of 3") {
  auto all = enumerate_ncopies(3);
  CHECK(names(all, 3) ==
        std::set<std::string>{"3_1", "3_2", "3_3", "1_1+2_2", "1_1+2_1", "1_1+1_1+1_1"});
  auto zero = enumerate_ncopies(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());
  // Unrestricted counts are the coefficients of prod 1/(1-q^n)^n.
  const std::size_t T = 12;
  auto prod = oracle::one(T);
  for (std::size_t n = 1; n <= T; ++n)
    for (std::size_t c = 0; c < n; ++c) prod = oracle::div_one_minus(prod, n);
  CHECK(counts(enumerate_ncopies(static_cast<int>(T)), static_cast<int>(T)) == prod);
}

TEST_CASE("M1(m) = M2(m)") {
  auto m2 = enumerate_ncopies(25, 0, [](const NCopiesPartition& p) { return is_exact_base(p, 0); });
  CHECK(names(m2, 9) == std::set<std::string>{"9_9", "1_1+8_6", "2_2+7_3", "1_1+3_1+5_1"});
  // M1: unique largest part, every other part exactly twice.
  auto m1 = enumerate_partitions(25, [](const Partition& p) {
    if (p.empty()) return true;
    std::map<int, int> mult;
    for (int x : p.parts()) ++mult[x];
    auto largest = mult.rbegin();
    if (largest->second != 1) return false;
    for (auto it = std::next(largest); it != mult.rend(); ++it)
      if (it->second != 2) return false;
    return true;
  });
  std::vector<long long> c1(26, 0);
  for (const auto& p : m1) ++c1[static_cast<std::size_t>(p.total())];
  CHECK(c1[9] == 4);
  CHECK(counts(m2, 25) == c1);
}

TEST_CASE("exact-base split is a bijection") {
  for (int r = -1; r <= 1; ++r) {
    CAPTURE(r);
    const int T = 18;
    auto valid = enumerate_ncopies(T, r);
    std::set<std::pair<std::string, std::vector<int>>> seen;
    for (const auto& p : valid) {
      auto split = split_exact_base(p, r);
      CHECK(is_exact_base(split.base, r));
      REQUIRE(split.base.size() == p.size());
      for (std::size_t k = 0; k < p.size(); ++k) {
        CHECK(split.base[k].subscript == p[k].subscript);
        CHECK(split.attached[k] >= 0);
        if (k > 0)
          CHECK(split.attached[k] - split.attached[k - 1] ==
                weighted_difference(p[k], p[k - 1]) - r);
      }
      CHECK(join_exact_base(split, r) == p);
      seen.insert({split.base.to_string(), split.attached});
    }
    CHECK(seen.size() == valid.size());
    // Cardinality: bases of each size times non-decreasing lists that fit.
    auto bases = enumerate_ncopies(T, r, [r](const NCopiesPartition& p) { return is_exact_base(p, r); });
    std::size_t total = 0;
    for (const auto& b : bases) {
      int room = T - b.total();
      int h = static_cast<int>(b.size());
      for (int s = 0; s <= room; ++s)
        total += static_cast<std::size_t>(h == 0 ? (s == 0) : oracle::count_parts(s, h, [](int) { return true; }));
    }
    CHECK(total == valid.size());
  }
  CHECK_THROWS_AS(split_exact_base(NCopiesPartition::parse("1:1,2:2"), 0), ConstraintViolation);
  ExactBaseSplit bad{NCopiesPartition::parse("1:1,3:1"), {2, 1}};
  CHECK_THROWS_AS(join_exact_base(bad, 0), ConstraintViolation);
  ExactBaseSplit not_base{NCopiesPartition::parse("2:1"), {0}};
  CHECK_THROWS_AS(join_exact_base(not_base, 0), ConstraintViolation);
}

TEST_CASE("g_r table against enumeration") {
  const int T = 18;
  for (int r = -1; r <= 2; ++r) {
    CAPTURE(r);
    GrTable t(r, 8, T);
    std::map<std::tuple<int, int, int>, std::vector<long long>> by_key;
    for (const auto& p : enumerate_ncopies(T, r, [r](const NCopiesPartition& p) {
           return !p.empty() && is_exact_base(p, r);
         })) {
      auto key = std::make_tuple(static_cast<int>(p.size()), p.parts().back().value, p.parts().back().subscript);
      auto& v = by_key[key];
      v.resize(T + 1, 0);
      ++v[static_cast<std::size_t>(p.total())];
    }
    for (int n = 1; n <= 8; ++n)
      for (int m = 1; m <= T; ++m)
        for (int j = 1; j <= m; ++j) {
          auto it = by_key.find({n, m, j});
          std::vector<long long> want(T + 1, 0);
          if (it != by_key.end()) want = it->second;
          CHECK(oracle::coeffs(t.at(n, m, j), T) == want);
        }
  }
  GrTable t(0, 3, 6);
  CHECK(t.at(1, 4, 4) == QSeries::monomial(4));
  CHECK(t.at(1, 4, 2).is_zero());
  CHECK(t.at(2, 7, 8).is_zero());
  CHECK_THROWS_AS(GrTable(-2, 2, 2), InvalidArgument);
}

TEST_CASE("g_r closed forms against the table") {
  std::size_t nonzero = 0;
  for (int r = -1; r <= 3; ++r) {
    CAPTURE(r);
    GrTable t(r, 7, 29);
    for (int n = 1; n <= 7; ++n)
      for (int m = 1; m <= 29; ++m)
        for (int j = 1; j <= m; ++j) {
          CAPTURE(n);
          CAPTURE(m);
          CAPTURE(j);
          auto c = gr_closed(r, n, m, j);
          CHECK(c == t.at(n, m, j));
          if (!c.is_zero()) ++nonzero;
        }
  }
  CHECK(nonzero > 500);
  // Two-part anchor: q^{3m-j-r+1} at (2, 2m, 2j-1) for odd r written as 2r-1.
  for (int R = 0; R <= 2; ++R)
    for (int m = 2; m <= 10; ++m)
      for (int j = 1; 2 * j - 1 <= 2 * m; ++j) {
        auto c = gr_closed(2 * R - 1, 2, 2 * m, 2 * j - 1);
        if (!c.is_zero()) CHECK(c == QSeries::monomial(static_cast<std::size_t>(3 * m - j - R + 1)));
      }
  // Parity patterns outside the listed ones vanish.
  CHECK(gr_closed(1, 2, 6, 6).is_zero());
  CHECK(gr_closed(0, 3, 8, 3).is_zero());
}

TEST_CASE("beta_r sums g_r over the largest part") {
  const std::size_t T = 40;
  CHECK(beta_r(0, 1, T) == QSeries::one(T));
  for (int r = -1; r <= 1; ++r) {
    GrTable t(r, 6, static_cast<int>(T));
    for (int n = 1; n <= 6; ++n) {
      QSeries sum = QSeries::zero(T);
      for (int m = 1; m <= static_cast<int>(T); ++m)
        for (int j = 1; j <= m; ++j) sum += t.at(n, m, j);
      auto want = shift(inv_odd_poch(n, T), 1LL * n * n + 1LL * r * n * (n - 1) / 2);
      CHECK(oracle::coeffs(sum.truncated(T), T) == want);
      CHECK(oracle::coeffs(beta_r(n, r, T), T) == want);
    }
  }
  CHECK_THROWS_AS(beta_r(1, -2, 10), InvalidArgument);
}

TEST_CASE("n-copies generating functions and products") {
  const std::size_t T = 25;
  const int Ti = static_cast<int>(T);
  // r = 1: parts not congruent to 0, +-4 mod 10.
  auto p1 = product(T, [](std::size_t n) { return n % 10 != 0 && n % 10 != 4 && n % 10 != 6; });
  // r = 0: parts not congruent to 0, +-6 mod 14.
  auto p0 = product(T, [](std::size_t n) { return n % 14 != 0 && n % 14 != 6 && n % 14 != 8; });
  // r = -1: (-q^7;q^7) times parts +-1..+-5 mod 14, with 3 and 11 in two colours.
  auto pm = product(T, [](std::size_t n) {
    auto x = n % 14;
    return x != 0 && x != 6 && x != 7 && x != 8;
  });
  for (std::size_t n = 3; n <= T; n += 14) pm = oracle::div_one_minus(pm, n);
  for (std::size_t n = 11; n <= T; n += 14) pm = oracle::div_one_minus(pm, n);
  for (std::size_t n = 7; n <= T; n += 7) pm = oracle::mul_binomial(pm, n, 1);
  std::map<int, oracle::Poly> want{{1, p1}, {0, p0}, {-1, pm}};
  for (int r = -1; r <= 1; ++r) {
    CAPTURE(r);
    CHECK(oracle::coeffs(ncopies_gf(r, T), T) == want[r]);
    CHECK(counts(enumerate_ncopies(Ti, r), Ti) == want[r]);
  }
  CHECK(oracle::coeffs(ncopies_gf(1, 50), 50) ==
        product(50, [](std::size_t n) { return n % 10 != 0 && n % 10 != 4 && n % 10 != 6; }));
}

TEST_CASE("mock theta psi_10 from beta_{-1}") {
  const std::size_t T = 40;
  QSeries sum = QSeries::zero(T);
  for (int m = 0; m * (m + 1) / 2 <= static_cast<int>(T); ++m) sum += beta_r(m, -1, T);
  oracle::Poly psi(T + 1, 0);
  for (int n = 0; n * (n + 1) / 2 <= static_cast<int>(T); ++n)
    psi = add(psi, shift(inv_odd_poch(n, T), n * (n + 1) / 2));
  CHECK(oracle::coeffs(sum, T) == psi);
}

TEST_CASE("overpartitions with n copies of n") {
  auto over = enumerate_ncopies_over(4);
  CHECK(names(over, 4) == std::set<std::string>{"4_4", "4_4~", "4_3", "4_3~", "4_2", "4_2~", "4_1",
                                                "4_1~", "1_1+3_1", "1_1~+3_1"});
  CHECK(counts(over, 0)[0] == 1);
  // L series against sum (-1;q)_m q^{m^2} / ((q;q)_m (q;q^2)_m).
  const std::size_t T = 25;
  oracle::Poly L(T + 1, 0);
  for (int m = 0; m * m <= static_cast<int>(T); ++m) {
    auto term = inv_odd_poch(m, T);
    for (int i = 0; i < m; ++i) term = oracle::mul_binomial(term, static_cast<std::size_t>(i), 1);
    for (int i = 1; i <= m; ++i) term = oracle::div_one_minus(term, static_cast<std::size_t>(i));
    L = add(L, shift(term, m * m));
  }
  auto Lc = counts(enumerate_ncopies_over(static_cast<int>(T)), static_cast<int>(T));
  CHECK(Lc == L);
  // J(m): overpartitions with no part divisible by 3.
  auto J = count_by_total(enumerate_overpartitions(static_cast<int>(T), [](const Overpartition& o) {
    for (int x : o.base().parts())
      if (x % 3 == 0) return false;
    return true;
  }), static_cast<int>(T));
  CHECK(J[4] == 10);
  CHECK(Lc == J);
  // Unrestricted n-copies overpartitions: prod ((1+q^n)/(1-q^n))^n.
  auto all = counts(enumerate_ncopies_overpartitions(8), 8);
  CHECK(std::vector<long long>(all.begin(), all.begin() + 5) == std::vector<long long>{1, 2, 6, 16, 38});
  auto prod = oracle::one(8);
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t c = 0; c < n; ++c) prod = oracle::div_one_minus(oracle::mul_binomial(prod, n, 1), n);
  CHECK(all == prod);
}

TEST_CASE("even subscripts: G(n) = H(n)") {
  const int T = 25;
  auto H = enumerate_even_subscript(T);
  CHECK(names(H, 10) == std::set<std::string>{"10_10", "10_8", "10_6", "10_4", "10_2", "2_2+8_2", "2_2+8_4"});
  auto h10 = names(enumerate_ncopies(10, 0), 10);
  CHECK(h10.count("3_2+7_2") == 1);
  CHECK(names(H, 10).count("3_2+7_2") == 0);
  auto G = oracle::coeffs(
      congruence_product(CongruenceProductSpec::allowed(16, {2, 14, 3, 13, 4, 12, 5, 11}), T), T);
  CHECK(G[10] == 7);
  CHECK(counts(H, T) == G);
}
