#include <gtest/gtest.h>

#include "steenrod/exchange.hpp"
#include "steenrod/suites.hpp"

using namespace steenrod;

namespace {

Monomial mono(std::vector<std::uint32_t> e) { return Monomial{1, std::move(e)}; }

PolyElement sum(std::initializer_list<std::vector<std::uint32_t>> exps) {
  std::vector<Monomial> terms;
  for (const auto& e : exps) terms.push_back(mono(e));
  return PolyElement::from_terms(std::move(terms));
}

}  // namespace

TEST(Exchange, Witnesses) {
  auto w = is_g_exchange(mono({1, 4}), mono({2, 3}), 0);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->i, 1U);
  EXPECT_EQ(w->j, 2U);
  w = is_g_exchange(mono({1, 4}), mono({4, 1}), 1);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->i, 1U);
  EXPECT_EQ(w->j, 2U);
  for (int g = 0; g <= 3; ++g) {
    EXPECT_FALSE(is_g_exchange(mono({2, 4}), mono({4, 2}), g));
    EXPECT_FALSE(is_g_exchange(mono({2, 4}), mono({3, 3}), g));
  }
  EXPECT_THROW(is_g_exchange(mono({1, 2}), mono({1, 1}), 0), PreconditionError);
}

TEST(Exchange, SymmetricInTheTwoMonomials) {
  const auto all = suites::monomials_of_degree(3, 9, 9);
  for (const auto& a : all)
    for (const auto& b : all)
      for (int g = 0; g <= 2; ++g) {
        const auto ab = is_g_exchange(a, b, g);
        const auto ba = is_g_exchange(b, a, g);
        ASSERT_EQ(ab.has_value(), ba.has_value());
        if (ab) {
          EXPECT_EQ(ab->i, ba->j);
          EXPECT_EQ(ab->j, ba->i);
        }
      }
}

TEST(Exchange, OddPrimeStep) {
  // step 2p^g: at p = 3, g = 1 the even exponent is 2u + 6
  EXPECT_TRUE(is_g_exchange(mono({1, 6}), mono({6, 1}), 1, 3));
  EXPECT_FALSE(is_g_exchange(mono({1, 4}), mono({4, 1}), 1, 3));
}

TEST(Chains, Components) {
  EXPECT_EQ(chain_components({mono({1, 2}), mono({2, 1})}, 0, 0).size(), 1U);
  for (int s = 0; s <= 3; ++s) EXPECT_EQ(chain_components({mono({1, 2}), mono({4, 4})}, 0, s).size(), 2U);
  EXPECT_EQ(chain_components({mono({3, 3})}, 0, 2).size(), 1U);
  EXPECT_THROW(chain_components({}, 2, 1), PreconditionError);
}

TEST(Support, CommonEvenPositions) {
  auto s = compute_support({mono({1, 4, 6}), mono({2, 3, 6})});
  EXPECT_EQ(s.positions, std::vector<std::size_t>{3});
  EXPECT_EQ(s.values, std::vector<std::uint32_t>{6});
  s = compute_support({mono({1, 2})});
  EXPECT_EQ(s.positions, std::vector<std::size_t>{2});
  EXPECT_TRUE(compute_support({mono({1, 1})}).positions.empty());
  EXPECT_THROW(compute_support({}), PreconditionError);
}

TEST(LSClasses, Found) {
  auto classes = find_ls_classes(sum({{1, 2}, {2, 1}}), 0, 0);
  ASSERT_EQ(classes.size(), 1U);
  EXPECT_EQ(classes[0].members.size(), 2U);
  EXPECT_EQ(classes[0].tau(), 0U);
  EXPECT_TRUE(is_ls_class(classes[0]));

  EXPECT_TRUE(find_ls_classes(monomial({4, 4}), 0, 3).empty());

  // Q_0 (1,1,3) plus an all-even monomial of the same degree
  classes = find_ls_classes(sum({{2, 1, 3}, {1, 2, 3}, {1, 1, 4}, {2, 2, 2}}), 0, 0);
  ASSERT_EQ(classes.size(), 1U);
  EXPECT_EQ(classes[0].members, (std::vector<Monomial>{mono({1, 1, 4}), mono({1, 2, 3}), mono({2, 1, 3})}));
  EXPECT_TRUE(is_ls_class(classes[0]));
}

TEST(LSClasses, AnnihilationHypothesisChecked) {
  try {
    find_ls_classes(monomial({1}), 0, 0);
    FAIL() << "expected a precondition error";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("Q_0"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("(2)"), std::string::npos);
  }
  EXPECT_THROW(find_ls_classes(monomial({1, 2}), 1, 0), PreconditionError);
}

TEST(ClassBound, Arithmetic) {
  LSClass c{0, 0, {mono({1, 2}), mono({2, 1})}, {}};
  auto r = pr2_check(c, 2);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, 0);
  EXPECT_EQ(r.rhs, 0);
  c.s = 1;
  EXPECT_FALSE(pr2_check(c, 2).holds);
  LSClass t1{0, 0, {mono({1, 2, 4})}, {{3}, {4}}};
  EXPECT_TRUE(pr2_check(t1, 3).holds);
  EXPECT_EQ(pr2_check(t1, 3).lhs, 1);
}

TEST(VanishingRun, Examples) {
  auto run = vanishing_run(sum({{1, 2}, {2, 1}}), 5);
  ASSERT_TRUE(run.first);
  EXPECT_EQ(*run.first, 0);
  EXPECT_EQ(run.length(), 1);
  EXPECT_FALSE(run.parity_degenerate);

  EXPECT_EQ(vanishing_run(monomial({1}), 5).length(), 0);

  // (2,4) = Sq_0 (1,2); Q_t^1 (2,4) = Sq_0 Q_t (1,2) is nonzero, so no run
  run = vanishing_run(monomial({2, 4}), 5);
  EXPECT_EQ(run.s, 1);
  EXPECT_EQ(run.length(), 0);
  EXPECT_FALSE(run.parity_degenerate);

  // at p = 2 the Sq_0 root always keeps an odd exponent
  run = vanishing_run(monomial({4, 4}), 3);
  EXPECT_EQ(run.s, 2);
  EXPECT_FALSE(run.parity_degenerate);
  EXPECT_EQ(run.length(), 0);
  EXPECT_FALSE(vanishing_run(sum({{1, 2}, {2, 1}}), 5).reaches_cap);
  EXPECT_THROW(vanishing_run(monomial({0, 0}), 3), PreconditionError);
}

TEST(GapDivisibility, Examples) {
  auto r = co2_check(monomial({4}), 64);
  EXPECT_TRUE(r.gap_found);
  EXPECT_EQ(r.gap_length, 3);
  ASSERT_TRUE(r.k);
  EXPECT_EQ(*r.k, 1);
  EXPECT_EQ(r.required_level, 2);
  EXPECT_EQ(r.level, 2);
  EXPECT_EQ(r.verdict, DivisibilityVerdict::Pass);

  EXPECT_EQ(co2_check(monomial({1}), 64).verdict, DivisibilityVerdict::Vacuous);
  EXPECT_EQ(co2_check(monomial({3}), 64).verdict, DivisibilityVerdict::Vacuous);
  EXPECT_EQ(co2_check(monomial({32}), 40).verdict, DivisibilityVerdict::Inconclusive);
}
