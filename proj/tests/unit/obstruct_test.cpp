#include <gtest/gtest.h>

#include "steenrod/obstruct.hpp"
#include "steenrod/suites.hpp"

using namespace steenrod;
using suites::full_polynomial;
using suites::hopf_span;
using suites::two_layers;

namespace {

// Stunted projective space H*(RP^hi / RP^{lo-1}): u^n for lo <= n <= hi.
FiniteModuleTable projective_window(long lo, long hi) {
  FiniteModuleTable t;
  for (long n = lo; n <= hi; ++n) {
    t.labels.push_back("u" + std::to_string(n));
    t.degrees.push_back(n);
  }
  for (std::uint64_t k = 1; static_cast<long>(k) <= hi; k <<= 1)
    for (long n = lo; n + static_cast<long>(k) <= hi; ++n)
      if (binomial_odd(static_cast<std::uint64_t>(n), k))
        t.ops[{OpKey::Kind::Sq, k}][static_cast<std::size_t>(n - lo)] = {{static_cast<std::size_t>(n - lo) + k, 1}};
  return t;
}

}  // namespace

TEST(GapScan, HopfSpan) {
  const auto r = gap_scan(hopf_span(300));
  EXPECT_EQ(r.occupied, (std::vector<long>{1, 2, 4, 8, 16, 32, 64, 128, 256}));
  ASSERT_EQ(r.gaps.size(), 7U);
  EXPECT_EQ(r.gaps.front(), (Gap{2, 1}));
  EXPECT_EQ(r.gaps.back(), (Gap{128, 127}));
  EXPECT_TRUE(r.bound_truncated);
}

TEST(GapScan, DenseAndFiltered) {
  const auto dense = gap_scan(full_polynomial(50));
  EXPECT_EQ(dense.occupied.size(), 50U);
  EXPECT_TRUE(dense.gaps.empty());

  const auto two = gap_scan(two_layers(3, 600));
  std::set<long> expected;
  for (long k = 1; k <= 512; k <<= 1) {
    expected.insert(k);
    if (k + 3 <= 600) expected.insert(k + 3);
  }
  EXPECT_EQ(two.occupied, std::vector<long>(expected.begin(), expected.end()));
}

TEST(GapScan, SuspensionShiftsDegrees) {
  auto mod = hopf_span(300);
  mod.suspension = -5;
  const auto r = gap_scan(mod);
  EXPECT_EQ(r.occupied.front(), -4);
  EXPECT_EQ(r.gaps.front(), (Gap{-3, 1}));
}

TEST(TypeT, HopfCertificate) {
  const auto r = type_t_check(hopf_span(300));
  ASSERT_TRUE(r.certificate) << r.reason;
  const auto& c = *r.certificate;
  EXPECT_EQ(c.delta, 0);
  EXPECT_EQ(c.j_max, 1);
  EXPECT_EQ(c.base_threshold, 32);
  EXPECT_EQ(c.threshold, 32);
  EXPECT_EQ(c.gap, (Gap{64, 63}));
  EXPECT_EQ(c.layers.front().n, (std::vector<long>{1, 2}));
  EXPECT_EQ(revalidate(c), std::nullopt);
}

TEST(TypeT, NoCertificateReasons) {
  EXPECT_EQ(type_t_check(full_polynomial(50)).reason, "no qualifying gap");
  EXPECT_EQ(type_t_check(hopf_span(40)).reason, "bound truncation before qualifying gap");
}

TEST(TypeT, WrongKindOrPrime) {
  EXPECT_THROW(type_t_check(two_layers(3, 600)), PreconditionError);
  EXPECT_THROW(type_t_filtration_check(hopf_span(300)), PreconditionError);
  auto odd = hopf_span(300);
  odd.prime = 3;
  EXPECT_THROW(type_t_check(odd), PreconditionError);
  EXPECT_THROW(verdict(odd), PreconditionError);
  EXPECT_THROW(verdict_odd(hopf_span(300)), PreconditionError);
}

TEST(TypeT, FiltrationCertificate) {
  const auto r = type_t_filtration_check(two_layers(3, 600));
  ASSERT_TRUE(r.certificate) << r.reason;
  const auto& c = *r.certificate;
  EXPECT_EQ(c.layer_count, 2);
  EXPECT_EQ(c.delta, 1);
  EXPECT_EQ(c.j_max, 2);
  EXPECT_EQ(c.base_threshold, 128);
  EXPECT_EQ(c.threshold, 128);
  EXPECT_EQ(c.gap, (Gap{259, 252}));
  EXPECT_EQ(revalidate(c), std::nullopt);
}

TEST(TypeT, SingleLayerFiltrationMatchesSpan) {
  auto single = hopf_span(300);
  single.kind = ModuleKind::Filtration;
  const auto f = type_t_filtration_check(single);
  const auto s = type_t_check(hopf_span(300));
  ASSERT_TRUE(f.certificate && s.certificate);
  EXPECT_EQ(f.certificate->threshold, s.certificate->threshold);
  EXPECT_EQ(f.certificate->gap, s.certificate->gap);
}

TEST(TypeT, DenseLayerBlocksGaps) {
  auto mod = two_layers(3, 200);
  mod.layers[0] = full_polynomial(150).layers[0];
  EXPECT_FALSE(type_t_filtration_check(mod).certificate);
}

TEST(Thresholds, Formulas) {
  EXPECT_EQ(delta_for(1, 2), 0);
  EXPECT_EQ(delta_for(2, 2), 1);
  EXPECT_EQ(delta_for(5, 2), 3);
  EXPECT_EQ(delta_for(3, 3), 1);
  EXPECT_EQ(delta_for(4, 3), 2);
  EXPECT_EQ(j_max_for(1, 0, 2), 1);
  EXPECT_EQ(j_max_for(3, 0, 2), 5);
  EXPECT_EQ(j_max_for(1, 0, 3), 3);
  EXPECT_EQ(base_threshold_for(1, 0, 2), 32);
  EXPECT_EQ(base_threshold_for(2, 3, 2), 256);
  EXPECT_EQ(base_threshold_for(1, 0, 3), 108);
}

TEST(Conditions, PairwiseDifferences) {
  EXPECT_TRUE(condition1_check({0, 3}).holds());
  EXPECT_FALSE(condition1_check({0, 1}).holds());
  const auto t = condition1_check({0, 3, 8});
  EXPECT_FALSE(t.holds());
  ASSERT_EQ(t.violations.size(), 1U);
  EXPECT_EQ(t.violations.front(), (std::pair<long, long>{0, 8}));
  EXPECT_TRUE(cond2_check({0, 5}, 3).holds());
  EXPECT_FALSE(cond2_check({0, 4}, 3).holds());
  EXPECT_FALSE(cond2_check({0, 1}, 5).holds());
  EXPECT_FALSE(cond2_check({0, 8}, 5).holds());
  EXPECT_THROW(cond2_check({0, 5}, 2), PreconditionError);
  EXPECT_THROW(condition1_check({3, 0}), PreconditionError);
}

TEST(Verdict, Examples) {
  EXPECT_EQ(verdict(hopf_span(300)).outcome, Outcome::NotRealizable);
  const auto dense = verdict(full_polynomial(50));
  EXPECT_EQ(dense.outcome, Outcome::Inconclusive);
  EXPECT_EQ(dense.reason, "no qualifying gap");
  const auto adjacent = verdict(two_layers(1, 600));
  EXPECT_EQ(adjacent.outcome, Outcome::Inconclusive);
  EXPECT_EQ(adjacent.reason, "Condition 1 violated: difference 1");
  const auto filtered = verdict(two_layers(3, 600));
  ASSERT_EQ(filtered.outcome, Outcome::NotRealizable);
  ASSERT_TRUE(filtered.certificate->condition);
  EXPECT_TRUE(filtered.certificate->condition->holds());
}

TEST(Verdict, SuspensionInvariance) {
  const auto base = verdict(two_layers(3, 600));
  for (long shift : {-40L, -1L, 1L, 7L, 100L}) {
    auto mod = two_layers(3, 600);
    mod.suspension = shift;
    const auto v = verdict(mod);
    EXPECT_EQ(v.outcome, base.outcome);
    ASSERT_TRUE(v.certificate);
    EXPECT_EQ(v.certificate->gap, base.certificate->gap);
    EXPECT_EQ(v.certificate->threshold, base.certificate->threshold);
  }
}

TEST(Verdict, MonotoneInBound) {
  std::optional<Gap> first;
  for (long bound = 100; bound <= 1200; bound += 25) {
    const auto v = verdict(hopf_span(bound));
    if (first) {
      ASSERT_EQ(v.outcome, Outcome::NotRealizable) << bound;
      EXPECT_EQ(v.certificate->gap, *first) << bound;
    } else if (v.certificate) {
      first = v.certificate->gap;
      EXPECT_EQ(bound, 150);
    }
  }
  EXPECT_TRUE(first);
}

TEST(Revalidate, TamperedCertificatesFail) {
  const auto good = *verdict(two_layers(3, 600)).certificate;
  auto c = good;
  c.threshold = 64;
  EXPECT_TRUE(revalidate(c));
  c = good;
  c.gap.length += 1;
  EXPECT_TRUE(revalidate(c));
  c = good;
  c.occupied.push_back(300);
  std::sort(c.occupied.begin(), c.occupied.end());
  EXPECT_TRUE(revalidate(c));
  c = good;
  c.layers[1].m = 1;
  EXPECT_TRUE(revalidate(c));
  c = good;
  c.j_max = 1;
  EXPECT_TRUE(revalidate(c));
  c = good;
  c.degree_bound = 400;
  EXPECT_TRUE(revalidate(c));
}

TEST(ModuleValidation, Rejects) {
  auto m = hopf_span(300);
  m.layers = {{0, {monomial({400})}}};
  EXPECT_THROW(m.validate(), InvalidInput);
  m = hopf_span(300);
  m.layers.push_back({3, {monomial({1})}});
  EXPECT_THROW(m.validate(), InvalidInput);
  m = two_layers(3, 600);
  m.layers[1].m = 0;
  EXPECT_THROW(m.validate(), InvalidInput);
  m = hopf_span(300);
  m.d = 2;
  EXPECT_THROW(m.validate(), InvalidInput);
  m = hopf_span(300);
  m.layers = {{0, {monomial({1}, 2)}}};
  EXPECT_THROW(m.validate(), InvalidInput);
  m.alpha = 2;
  EXPECT_NO_THROW(m.validate());
  m = hopf_span(0);
  EXPECT_THROW(m.validate(), InvalidInput);
}

TEST(Adams, TwoClassTables) {
  const auto v = adams_check(suites::two_class_table(16, 20));
  ASSERT_EQ(v.size(), 1U);
  EXPECT_EQ(v.front().k, 4);
  EXPECT_EQ(v.front().degree, 20);
  EXPECT_EQ(v.front().witness, (std::vector<std::pair<std::string, std::uint32_t>>{{"a", 1}}));
  EXPECT_EQ(v.front().image, (std::vector<std::pair<std::string, std::uint32_t>>{{"b", 1}}));
  EXPECT_TRUE(adams_check(suites::two_class_table(8, 20)).empty());
  EXPECT_TRUE(adams_check(FiniteModuleTable{}).empty());
}

TEST(Adams, ImageFromBelowSatisfiesTheTest) {
  // Sq^16 a = c, but c = Sq^8 b also: no violation
  auto t = suites::two_class_table(16, 20);
  t.labels.push_back("b8");
  t.degrees.push_back(28);
  t.ops[{OpKey::Kind::Sq, 8}][2] = {{1, 1}};
  EXPECT_TRUE(adams_check(t).empty());
}

TEST(Adams, InstabilityAndDegreesValidated) {
  EXPECT_THROW(adams_check(suites::two_class_table(16, 5)), InvalidInput);
  auto t = suites::two_class_table(16, 20);
  t.degrees[1] = 37;
  EXPECT_THROW(adams_check(t), InvalidInput);
}

TEST(Adams, ProjectiveWindowsHaveNoViolations) {
  for (auto [lo, hi] : {std::pair{1L, 80L}, {16L, 90L}, {5L, 70L}, {32L, 100L}})
    EXPECT_TRUE(adams_check(projective_window(lo, hi)).empty()) << lo << ".." << hi;
}

TEST(Adams, HopfSpanWindowViolates) {
  // the span of u is exactly the module the obstruction rules out
  FiniteModuleTable t;
  for (long k = 0; k <= 6; ++k) {
    t.labels.push_back("u" + std::to_string(1L << k));
    t.degrees.push_back(1L << k);
  }
  for (std::size_t k = 0; k + 1 < t.labels.size(); ++k) t.ops[{OpKey::Kind::Sq, std::uint64_t{1} << k}][k] = {{k + 1, 1}};
  const auto v = adams_check(t);
  ASSERT_EQ(v.size(), 2U);
  EXPECT_EQ(v[0].degree, 16);
  EXPECT_EQ(v[1].degree, 32);
}

TEST(Adams, OddPrime) {
  FiniteModuleTable t;
  t.prime = 3;
  t.labels = {"a", "b"};
  t.degrees = {6, 18};
  t.ops[{OpKey::Kind::P, 3}][0] = {{1, 2}};
  const auto v = adams_check_odd(t);
  ASSERT_EQ(v.size(), 1U);
  EXPECT_EQ(v.front().k, 1);
  EXPECT_EQ(v.front().image, (std::vector<std::pair<std::string, std::uint32_t>>{{"b", 2}}));
  t.ops[{OpKey::Kind::P, 3}].clear();
  t.degrees = {6, 10};
  t.ops[{OpKey::Kind::P, 1}][0] = {{1, 1}};
  EXPECT_TRUE(adams_check_odd(t).empty());
  EXPECT_THROW(adams_check(t), PreconditionError);
}

TEST(OddVerdict, HopfSpanAtThree) {
  ModuleDescription<odd::OddElement> m;
  m.prime = 3;
  m.degree_bound = 600;
  m.layers = {{0, {odd::OddElement(3, Monomial{1, {2}})}}};
  const auto v = verdict_odd(m);
  ASSERT_EQ(v.outcome, Outcome::NotRealizable) << v.reason;
  EXPECT_EQ(v.certificate->threshold, 108);
  EXPECT_EQ(v.certificate->j_max, 3);
  EXPECT_EQ(v.certificate->gap, (Gap{162, 323}));
  EXPECT_EQ(revalidate(*v.certificate), std::nullopt);

  m.kind = ModuleKind::Filtration;
  m.layers.push_back({4, {odd::OddElement(3, Monomial{1, {2}})}});
  const auto cond = verdict_odd(m);
  EXPECT_EQ(cond.outcome, Outcome::Inconclusive);
  EXPECT_EQ(cond.reason, "Condition 2 violated: difference 4");
}
