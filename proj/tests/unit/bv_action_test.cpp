#include <gtest/gtest.h>

#include "oracles.hpp"
#include "steenrod/bv_action.hpp"
#include "steenrod/suites.hpp"

using namespace steenrod;

namespace {

PolyElement from_oracle(const oracle::Poly& p) {
  std::vector<Monomial> terms;
  for (const auto& [e, c] : p) terms.push_back(Monomial{1, e});
  return PolyElement::from_terms(std::move(terms));
}

PolyElement sum(std::initializer_list<std::vector<std::uint32_t>> exps) {
  std::vector<Monomial> terms;
  for (const auto& e : exps) terms.push_back(Monomial{1, e});
  return PolyElement::from_terms(std::move(terms));
}

}  // namespace

TEST(ApplySq, SmallCases) {
  EXPECT_EQ(apply_sq(1, monomial({1})), monomial({2}));
  EXPECT_EQ(apply_sq(2, monomial({1, 1})), monomial({2, 2}));
  EXPECT_TRUE(apply_sq(3, monomial({2})).is_zero());
  EXPECT_EQ(apply_sq(0, monomial({3, 1})), monomial({3, 1}));
}

TEST(ApplySq, TotalSquareValues) {
  EXPECT_EQ(apply_sq(4, monomial({1, 2, 3})), sum({{1, 4, 5}, {2, 2, 6}, {2, 4, 4}}));
  EXPECT_EQ(apply_sq(6, monomial({3, 5})), sum({{4, 10}, {5, 9}}));
}

TEST(ApplySq, AgreesWithTotalSquare) {
  for (std::size_t d = 1; d <= 3; ++d)
    for (long deg = 1; deg <= 12; ++deg)
      for (const auto& m : suites::monomials_of_degree(d, deg, 12))
        for (std::uint32_t k = 0; k <= static_cast<std::uint32_t>(deg) + 1; ++k)
          ASSERT_EQ(apply_sq(k, PolyElement(m)), from_oracle(oracle::total_square(m.exps, k))) << to_string(m) << " k=" << k;
}

TEST(ApplySq, CartanFormula) {
  const PolyElement x = monomial({3}), y = monomial({5});
  for (std::uint32_t k = 0; k <= 8; ++k) {
    PolyElement expected;
    for (std::uint32_t i = 0; i <= k; ++i) expected += tensor(apply_sq(i, x), apply_sq(k - i, y));
    EXPECT_EQ(apply_sq(k, tensor(x, y)), expected) << k;
  }
}

TEST(ApplySq, TopSquareIsSquaring) {
  for (std::size_t d = 1; d <= 3; ++d)
    for (long deg = 1; deg <= 9; ++deg)
      for (const auto& m : suites::monomials_of_degree(d, deg, 9))
        ASSERT_EQ(apply_sq(static_cast<std::uint32_t>(deg), PolyElement(m)), sq0_power(PolyElement(m), 1));
}

TEST(Sq0, PowerLevelRoot) {
  EXPECT_EQ(sq0_power(monomial({1, 2}), 1), monomial({2, 4}));
  EXPECT_EQ(sq0_power(monomial({1, 2}), 0), monomial({1, 2}));
  EXPECT_EQ(sq0_power(sum({{1, 1}, {2, 0}}), 2), sum({{4, 4}, {8, 0}}));
  EXPECT_EQ(sq0_level(sum({{4, 6}, {2, 8}})), 1);
  EXPECT_EQ(sq0_level(monomial({1, 0})), 0);
  EXPECT_EQ(sq0_level(sum({{8, 0}, {0, 8}})), 3);
  EXPECT_EQ(sq0_level(PolyElement{}), kInfiniteLevel);
  EXPECT_EQ(sq0_root(monomial({8, 4}), 2), monomial({2, 1}));
  EXPECT_THROW(sq0_root(monomial({8, 4}), 3), PreconditionError);
}

TEST(Qts, ClosedFormsOnOneVariable) {
  EXPECT_EQ(qts_apply(1, 1, monomial({2})), monomial({8}));
  EXPECT_TRUE(qts_apply(1, 0, monomial({2})).is_zero());
  EXPECT_EQ(qts_apply(0, 0, monomial({3})), monomial({4}));
  // Q_t^s Sq_0^s u^{2l+1} = Sq_0^s u^{2l + 2^{t+1}}
  for (int s = 0; s <= 3; ++s)
    for (int t = 0; t <= 3; ++t)
      for (std::uint32_t l = 0; l <= 8; ++l) {
        const auto x = sq0_power(monomial({2 * l + 1}), s);
        ASSERT_EQ(qts_apply(t, s, x), sq0_power(monomial({2 * l + (2U << t)}), s));
        ASSERT_TRUE(qts_apply(t, s, sq0_power(monomial({2 * l}), s)).is_zero());
      }
}

TEST(Qts, DerivationOnTensors) {
  const PolyElement x = monomial({3, 1}), y = monomial({5});
  for (int t = 0; t <= 3; ++t)
    EXPECT_EQ(qts_apply(t, 0, tensor(x, y)), tensor(qts_apply(t, 0, x), y) + tensor(x, qts_apply(t, 0, y)));
}

TEST(Qts, Errors) {
  EXPECT_THROW(qts_apply(-1, 0, monomial({1})), PreconditionError);
  EXPECT_THROW(qts_apply(20, 20, monomial({1})), ResourceError);
}
