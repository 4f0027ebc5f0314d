#include <map>

#include "doctest.h"
#include "sipq/errors.hpp"
#include "sipq/qfactory.hpp"
#include "sipq/sip.hpp"

using namespace sipq;

namespace {

std::set<std::string> as_strings(const std::vector<Partition>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(p.to_string());
  return out;
}

std::vector<SipClassSpec> all_specs() {
  auto specs = SipClassSpec::presets();
  specs.push_back(SipClassSpec::schur_refined());
  return specs;
}

}  // namespace

TEST_CASE("basis enumeration") {
  CHECK(as_strings(enumerate_basis(SipClassSpec::gollnitz_gordon(), 1, 50)) ==
        std::set<std::string>{"1", "2"});
  CHECK(as_strings(enumerate_basis(SipClassSpec::schur(), 1, 50)) ==
        std::set<std::string>{"1", "2", "3"});
  CHECK(as_strings(enumerate_basis(SipClassSpec::glasgow(), 2, 50)) ==
        std::set<std::string>{"2+2", "2+5", "3+4", "3+7"});
  CHECK(as_strings(enumerate_basis(SipClassSpec::natural(), 3, 5)) == std::set<std::string>{"1+1+1"});
  CHECK(as_strings(enumerate_basis(SipClassSpec::rogers_ramanujan(), 3, 5)) ==
        std::set<std::string>{"1+3+5"});
  CHECK_THROWS_AS(enumerate_basis(SipClassSpec::natural(), 0, 5), InvalidArgument);
}

TEST_CASE("decomposition") {
  auto gg = SipClassSpec::gollnitz_gordon();
  auto d = decompose(Partition({1}), gg);
  CHECK(d.basis == Partition({1}));
  CHECK(d.padding == std::vector<int>{0});
  CHECK_THROWS_AS(decompose(Partition({1, 2}), gg), NotInClass);

  auto nat = decompose(Partition({2, 2, 5}), SipClassSpec::natural());
  CHECK(nat.basis == Partition({1, 1, 1}));
  CHECK(nat.padding == std::vector<int>{1, 1, 4});

  // Brute force: the unique basis element and lattice padding summing to p.
  for (const auto& p : enumerate_sip_class(gg, 18)) {
    if (p.empty()) continue;
    int found = 0;
    SipDecomposition match;
    for (const auto& b : enumerate_basis(gg, static_cast<int>(p.size()), p.largest())) {
      std::vector<int> pad;
      bool ok = true;
      for (std::size_t i = 0; i < p.size(); ++i) {
        int x = p[i] - b[i];
        if (x < 0 || x % 2 != 0 || (i > 0 && x < pad.back())) ok = false;
        pad.push_back(x);
      }
      if (ok) {
        ++found;
        match = SipDecomposition{b, pad, 2};
      }
    }
    CHECK(found == 1);
    CHECK(decompose(p, gg) == match);
  }
}

TEST_CASE("recomposition") {
  auto rr = SipClassSpec::rogers_ramanujan();
  CHECK(recompose({Partition({1, 3}), {0, 2}, 1}) == Partition({1, 5}));
  CHECK(in_sip_class(Partition({1, 5}), rr));
  CHECK(recompose({Partition({1, 3, 5}), {0, 0, 0}, 1}) == Partition({1, 3, 5}));
  CHECK_THROWS_AS(recompose({Partition({1, 3}), {2, 0}, 1}), InvalidArgument);
  CHECK_THROWS_AS(recompose({Partition({1, 4}), {0, 1}, 2}), InvalidArgument);
  for (const auto& spec : all_specs())
    for (const auto& p : enumerate_sip_class(spec, 25)) CHECK(recompose(decompose(p, spec)) == p);
}

TEST_CASE("decompose inverts recompose on valid decompositions") {
  for (const auto& spec : SipClassSpec::presets()) {
    for (const auto& b : enumerate_basis_upto(spec, 16)) {
      if (b.empty()) continue;
      std::vector<int> pad(b.size(), 0);
      for (int last = 0; last <= 6; last += spec.k()) {
        pad.back() = last;
        SipDecomposition d{b, pad, spec.k()};
        CHECK(decompose(recompose(d), spec) == d);
      }
    }
  }
}

TEST_CASE("SIP verification for the six classes") {
  for (const auto& spec : SipClassSpec::presets()) {
    auto rep = verify_sip(spec, 20);
    INFO(spec.name());
    CHECK(rep.pass());
    CHECK(rep.members > 0);
  }
}

TEST_CASE("thresholds the gap rule cannot reach break unique decomposition") {
  SipClassSpec bad(2, {5, 2}, {0, 0});
  auto rep = verify_sip(bad, 14);
  CHECK_FALSE(rep.pass());
  CHECK(rep.out_of_class_basis > 0);
  CHECK_FALSE(in_sip_class(Partition({2, 3}), bad));
}

TEST_CASE("basis table values") {
  auto gg = basis_table(SipClassSpec::gollnitz_gordon(), 8, 40);
  CHECK(gg.at(1, 1) == QSeries::monomial(1));
  CHECK(gg.at(1, 2) == QSeries::monomial(2));
  CHECK(gg.at(2, 3) == QSeries::monomial(4));
  for (int n = 2; n <= 8; ++n)
    for (int h = 1; 2 * h <= 40; ++h) CHECK(gg.at(n, 2 * h) == gg.at(n, 2 * h - 1).shifted(1));
  auto s = basis_table(SipClassSpec::schur_refined(), 2, 10);
  CHECK(s.at(1, 1).to_string() == "u*q");
  CHECK(s.at(1, 2).to_string() == "v*q^2");
  CHECK(s.at(1, 3).to_string() == "u*v*q^3");
  CHECK(s.at(9, 1).is_zero());
}

TEST_CASE("basis table equals basis enumeration") {
  for (const auto& spec : all_specs()) {
    INFO(spec.name());
    const int N = 8, H = 30;
    auto table = basis_table(spec, N, H);
    for (int n = 1; n <= N; ++n) {
      std::map<int, QSeries> by_h;
      for (const auto& b : enumerate_basis(spec, n, H)) {
        MarkerPoly w(1, spec.markers().size());
        for (int part : b.parts()) w = w * spec.weight(part);
        auto term = QSeries::monomial(static_cast<std::size_t>(b.total()), w, spec.markers());
        auto [it, fresh] = by_h.try_emplace(b.largest(), term);
        if (!fresh) it->second += term;
      }
      for (int h = 1; h <= H; ++h) {
        auto it = by_h.find(h);
        QSeries expect = it == by_h.end() ? QSeries::zero_polynomial(spec.markers()) : it->second;
        CHECK(table.at(n, h) == expect);
      }
    }
  }
}

TEST_CASE("generating-function assembly") {
  const std::size_t T = 30;
  CHECK(assemble_gf(SipClassSpec::natural(), T) == poch_infinite(PochSpec::minus(1, 1), T).inverse());

  QSeries rr = QSeries::zero(T);
  for (std::size_t n = 0; n * n <= T; ++n)
    rr += QSeries::monomial(n * n) * poch_finite(PochSpec::minus(1, 1), n, T).inverse(T);
  CHECK(assemble_gf(SipClassSpec::rogers_ramanujan(), T) == rr);

  auto gg_product = congruence_product(CongruenceProductSpec::allowed(8, {1, 4, 7}), T);
  CHECK(assemble_gf(SipClassSpec::gollnitz_gordon(), T) == gg_product);

  for (const auto& spec : SipClassSpec::presets()) {
    INFO(spec.name());
    CHECK(assemble_gf(spec, T) == class_series_by_enumeration(spec, T));
  }
  CHECK(assemble_gf(SipClassSpec::schur_refined(), 18) ==
        class_series_by_enumeration(SipClassSpec::schur_refined(), 18));
}

TEST_CASE("assembly refuses a shallow table") {
  auto spec = SipClassSpec::natural();
  CHECK_THROWS_AS(assemble_gf(spec, basis_table(spec, 3, 30), 10), InsufficientTableDepth);
  CHECK_THROWS_AS(assemble_gf(spec, basis_table(spec, 10, 0), 10), InsufficientTableDepth);
  CHECK_NOTHROW(assemble_gf(spec, basis_table(spec, 10, 1), 10));
}

TEST_CASE("minimal basis totals") {
  CHECK(min_basis_total(SipClassSpec::natural(), 4) == 4);
  CHECK(min_basis_total(SipClassSpec::rogers_ramanujan(), 4) == 16);
  CHECK(min_basis_total(SipClassSpec::gollnitz_gordon(), 3) == 9);
  CHECK(min_basis_total(SipClassSpec::glasgow(), 2) == 4);
  CHECK(max_basis_largest(SipClassSpec::rogers_ramanujan(), 3) == 5);
}
