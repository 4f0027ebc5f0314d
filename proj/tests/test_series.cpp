#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "sipq/errors.hpp"
#include "sipq/qfactory.hpp"
#include "sipq/qseries.hpp"

using namespace sipq;

namespace {

QSeries random_series(std::mt19937& rng, std::size_t trunc, bool unit = false) {
  std::uniform_int_distribution<int> dist(-4, 4);
  std::vector<BigInt> c(trunc + 1);
  for (auto& x : c) x = dist(rng);
  if (unit) c[0] = 1;
  return QSeries::from_integers(c);
}

QSeries uv_series(std::mt19937& rng, std::size_t trunc) {
  std::uniform_int_distribution<int> dist(-3, 3);
  QSeries s = QSeries::zero(trunc, {"u", "v"});
  for (std::size_t i = 0; i <= trunc; ++i) {
    s += QSeries::monomial(i, dist(rng)).truncated(trunc);
    s += QSeries::marker_monomial("u", 1, i).scaled(dist(rng)).truncated(trunc);
    s += QSeries::marker_monomial("v", 2, i).scaled(dist(rng)).truncated(trunc);
  }
  return s;
}

}  // namespace

TEST_CASE("addition keeps the smaller truncation") {
  auto a = QSeries::from_integers({1, 1, 0, 0, 0, 0});
  auto b = QSeries::from_integers({0, 1, 1, 0});
  auto s = a + b;
  CHECK(s.trunc() == 3);
  CHECK(s == QSeries::from_integers({1, 2, 1, 0}));
  CHECK(QSeries::zero(7) + a == a.truncated(5));
}

TEST_CASE("exact polynomials do not lower truncation") {
  auto p = QSeries::from_integers({1, -1}, true);
  auto s = QSeries::one(10);
  CHECK((p * s).trunc() == 10);
  CHECK((p + s).trunc() == 10);
  CHECK((p * p).exact());
  CHECK((p * p) == QSeries::from_integers({1, -2, 1}, true));
}

TEST_CASE("partial sum of sum q^n/(q;q)_n through n = 2") {
  // Partitions of 0, 1, 2: 1, 1, 2.
  const std::size_t T = 2;
  QSeries sum = QSeries::zero(T);
  for (std::size_t n = 0; n <= 2; ++n)
    sum += QSeries::monomial(n) * poch_finite(PochSpec::minus(1, 1), n, T).inverse(T);
  CHECK(sum == QSeries::from_integers({1, 1, 2}));
}

TEST_CASE("multiplication and inverse") {
  const std::size_t T = 12;
  auto geo = QSeries::from_integers(std::vector<BigInt>(T + 1, 1));
  auto one_minus_q = QSeries::from_integers({1, -1}, true);
  CHECK(one_minus_q * geo == QSeries::one(T));
  CHECK(one_minus_q.inverse(T) == geo);
  CHECK(QSeries::one(5).inverse() == QSeries::one(5));

  auto q3 = poch_finite(PochSpec::minus(1, 1), 3, 100);
  REQUIRE(q3.exact());
  // Partitions into parts <= 3, counted by hand-rolled recursion.
  auto inv = q3.inverse(5);
  for (int n = 0; n <= 5; ++n)
    CHECK(inv.int_coefficient(n) == oracle::count_parts(n, 3, [](int) { return true; }));

  auto uq = QSeries::one_polynomial() + QSeries::marker_monomial("u", 1, 1);
  auto vq2 = QSeries::one_polynomial() + QSeries::marker_monomial("v", 1, 2);
  auto prod = uq * vq2;
  CHECK(prod.markers() == MarkerRegistry{"u", "v"});
  CHECK(prod.to_string() == "1 + u*q + v*q^2 + u*v*q^3");
}

TEST_CASE("inverse rejects a non-unit constant term") {
  CHECK_THROWS_AS(QSeries::from_integers({2, 1}).inverse(), NonUnitConstantTerm);
  CHECK_THROWS_AS(QSeries::zero(3).inverse(), NonUnitConstantTerm);
  CHECK_THROWS_AS(QSeries::marker_monomial("u", 1, 0).truncated(4).inverse(), NonUnitConstantTerm);
  CHECK_THROWS_AS(QSeries::from_integers({1, 1}, true).inverse(), InvalidArgument);
}

TEST_CASE("coefficient access respects truncation") {
  auto s = QSeries::from_integers({3, 4, 5});
  CHECK(s.int_coefficient(0) == 3);
  CHECK_THROWS_AS(s.coefficient(3), TruncationExceeded);
  auto p = QSeries::from_integers({3, 4, 5}, true);
  CHECK(p.int_coefficient(50) == 0);
  CHECK_THROWS_AS(QSeries::marker_monomial("u", 1, 2).int_coefficient(2), InvalidArgument);
}

TEST_CASE("overpartition-with-copies product has q^3 coefficient 16") {
  const std::size_t T = 6;
  QSeries prod = QSeries::one(T);
  for (std::size_t n = 1; n <= T; ++n) {
    auto plus = QSeries::one_polynomial() + QSeries::monomial(n);
    auto minus = (QSeries::one_polynomial() - QSeries::monomial(n)).inverse(T);
    for (std::size_t i = 0; i < n; ++i) prod = prod * plus * minus;
  }
  CHECK(prod.int_coefficient(3) == 16);
}

TEST_CASE("marker specialization") {
  auto s = QSeries::one_polynomial() + QSeries::marker_monomial("u", 1, 1);
  CHECK(s.specialize_markers({{"u", 1}}) == QSeries::from_integers({1, 1}, true));
  auto t = QSeries::marker_monomial("u", 1, 1) + QSeries::marker_monomial("v", 1, 2) +
           QSeries::marker_monomial("u", 1, 3) * QSeries::marker_monomial("v", 1, 0);
  CHECK(t.specialize_markers({{"u", 1}, {"v", 0}}) == QSeries::monomial(1));
  CHECK_THROWS_AS(t.specialize_markers({{"u", 1}}), InvalidArgument);
  auto partial = t.partially_specialize({{"v", 1}});
  CHECK(partial.markers() == MarkerRegistry{"u"});
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t T = 1 + trial % 12;
    auto a = random_series(rng, T), b = random_series(rng, T), c = random_series(rng, T);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    auto u = random_series(rng, T, true);
    CHECK(u * u.inverse() == QSeries::one(T));
  }
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t T = 1 + trial % 8;
    auto a = uv_series(rng, T), b = uv_series(rng, T), c = uv_series(rng, T);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    auto u = QSeries::one(T) + a.shifted(1).truncated(T);
    CHECK(u * u.inverse() == QSeries::one(T, {"u", "v"}));
  }
}

TEST_CASE("coefficients of a product match the schoolbook convolution") {
  std::mt19937 rng(99);
  const std::size_t T = 10;
  auto a = random_series(rng, T), b = random_series(rng, T);
  auto p = a * b;
  for (std::size_t n = 0; n <= T; ++n) {
    BigInt s = 0;
    for (std::size_t i = 0; i <= n; ++i) s += a.int_coefficient(i) * b.int_coefficient(n - i);
    CHECK(p.int_coefficient(n) == s);
  }
}

TEST_CASE("substitution q -> -q^2") {
  auto s = QSeries::from_integers({1, 2, 3});
  auto t = s.substitute(-1, 2);
  CHECK(t.trunc() == 5);
  CHECK(t == QSeries::from_integers({1, 0, -2, 0, 3, 0}));
  CHECK(QSeries::from_integers({1, 1}, true).substitute(1, 3) ==
        QSeries::from_integers({1, 0, 0, 1}, true));
}

TEST_CASE("first mismatch") {
  auto a = QSeries::from_integers({1, 2, 3, 4});
  auto b = QSeries::from_integers({1, 2, 0, 4, 5});
  CHECK(first_mismatch(a, b) == std::optional<std::size_t>(2));
  CHECK_FALSE(first_mismatch(a, a).has_value());
  CHECK(agree_up_to(a, b, 1));
  CHECK_THROWS_AS(agree_up_to(a, b, 4), TruncationExceeded);
}
