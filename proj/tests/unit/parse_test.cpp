#include <gtest/gtest.h>

#include <random>

#include "steenrod/parse.hpp"

using namespace steenrod;

namespace {

const ElementContext two{2, 2, 1};
const ElementContext three{3, 2, 1};

std::size_t error_position(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "expected a parse error";
  return 0;
}

std::string data(const std::string& name) { return read_file(std::string(STEENROD_TEST_DATA) + "/" + name); }

}  // namespace

TEST(ParseElement, Grammar) {
  const auto x = parse_element("(1,2)+(2,1)", two);
  EXPECT_EQ(x.terms().size(), 2U);
  EXPECT_EQ(parse_element("x1^3 x2", two), monomial({3, 1}));
  EXPECT_EQ(parse_element("x1 x1", two), monomial({2, 0}));
  EXPECT_EQ(parse_element("(1,2) + (1,2)", two), PolyElement{});
  EXPECT_EQ(parse_element("0", two), PolyElement{});
  EXPECT_EQ(parse_element("(1,1)@2", {2, 2, 2}), monomial({1, 1}, 2));
  const auto y = parse_odd_element("2*(1,0)", three);
  ASSERT_EQ(y.terms().size(), 1U);
  EXPECT_EQ(y.terms()[0].second, 2U);
  EXPECT_EQ(parse_odd_element("(1,2) - (2,1)", three), parse_odd_element("(1,2) + 2*(2,1)", three));
  EXPECT_EQ(parse_odd_element("-(1,2)", three).terms()[0].second, 2U);
}

TEST(ParseElement, ErrorsCarryOffsets) {
  EXPECT_EQ(error_position([] { parse_element("(1,", two); }), 3U);
  EXPECT_EQ(error_position([] { parse_element("(1,2,3)", two); }), 5U);
  EXPECT_EQ(error_position([] { parse_element("(1,2) - (2,1)", two); }), 6U);
  EXPECT_EQ(error_position([] { parse_element("x3", two); }), 2U);
  EXPECT_EQ(error_position([] { parse_element("(1,1)@2", two); }), 7U);
  EXPECT_EQ(error_position([] { parse_element("(1,1) junk", two); }), 6U);
  EXPECT_EQ(error_position([] { parse_element("", two); }), 0U);
  EXPECT_THROW(parse_element("(1,2)+(1,1)", two), InvalidInput);
}

TEST(ParseElement, RoundTrip) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    std::vector<Monomial> terms;
    const std::uint32_t a = static_cast<std::uint32_t>(rng() % 9);
    for (int k = 0; k < 4; ++k) {
      const std::uint32_t b = static_cast<std::uint32_t>(rng() % 9);
      terms.push_back(Monomial{1, {b, a + 8 - b, 3}});
    }
    const auto x = PolyElement::from_terms(terms);
    ASSERT_EQ(parse_element(to_string(x), {2, 3, 1}), x) << to_string(x);
    std::vector<odd::Term> odd_terms;
    for (auto& m : terms) odd_terms.emplace_back(m, static_cast<std::uint32_t>(1 + rng() % 4));
    const auto y = odd::OddElement::from_terms(5, odd_terms);
    ASSERT_EQ(parse_odd_element(odd::to_string(y), {5, 3, 1}), y) << odd::to_string(y);
  }
}

TEST(ParseMilnor, Sums) {
  EXPECT_EQ(to_string(parse_milnor("Sq(0,4) + Sq(3,3)")), "Sq(0,4) + Sq(3,3)");
  EXPECT_EQ(parse_milnor("1"), OperationSum(MilnorElement{}));
  EXPECT_TRUE(parse_milnor("0").is_zero());
  EXPECT_TRUE(parse_milnor("Sq(1) + Sq(1)").is_zero());
  EXPECT_THROW(parse_milnor("Sq(1) + Sq(2)"), InvalidInput);
  EXPECT_THROW(parse_milnor("Sq(1"), ParseError);
}

TEST(ParseOperation, StructureAndPrecedence) {
  const auto e = parse_operation("Sq^2 Sq^1 + Q[1;2]");
  ASSERT_EQ(e.kind, OperationExpr::Kind::Sum);
  ASSERT_EQ(e.children.size(), 2U);
  EXPECT_EQ(e.children[0].kind, OperationExpr::Kind::Compose);
  EXPECT_EQ(e.children[1].atom, (OpAtom{OpAtom::Kind::Q, 1, 2}));
  EXPECT_EQ(to_string(parse_operation("Sq^1 (Sq^2 + Sq0^1)")), "Sq^1 (Sq^2 + Sq0^1)");
  EXPECT_EQ(to_string(parse_operation("(Sq^1 Sq^2) Sq^4")), "Sq^1 Sq^2 Sq^4");
  EXPECT_EQ(to_string(parse_operation("P^1 beta P0^2 + Q[2]", 3)), "P^1 beta P0^2 + Q[2]");
}

TEST(ParseOperation, RoundTrip) {
  for (const char* text : {"Sq^4", "Q[1]", "Q[1;2]", "Sq^2 Sq^1", "Sq^3 + Sq^2 Sq^1", "Sq0^2 Q[0;1] (Sq^1 + Sq^2)"}) {
    const auto e = parse_operation(text);
    EXPECT_EQ(parse_operation(to_string(e)), e) << text;
  }
  for (const char* text : {"beta", "P^3 beta", "P0^1 + Q[1;1]", "(beta + P^1) P^2"}) {
    const auto e = parse_operation(text, 5);
    EXPECT_EQ(parse_operation(to_string(e), 5), e) << text;
  }
}

TEST(ParseOperation, PrimeCompatibility) {
  EXPECT_THROW(parse_operation("P^1", 2), ParseError);
  EXPECT_THROW(parse_operation("beta", 2), ParseError);
  EXPECT_THROW(parse_operation("Sq^1", 3), ParseError);
  EXPECT_THROW(parse_operation("Sq0^1", 3), ParseError);
  EXPECT_EQ(error_position([] { parse_operation("Sq^1 +", 2); }), 6U);
}

TEST(Evaluate, RightToLeft) {
  EXPECT_EQ(to_string(evaluate(parse_operation("Sq^2 Sq^1"), parse_element("x1 x2", two))), "(1,4) + (4,1)");
  EXPECT_EQ(evaluate(parse_operation("Sq^1 Sq^2"), monomial({1, 1})), monomial({2, 2}) + monomial({2, 2}));
  EXPECT_EQ(evaluate(parse_operation("Q[1;1]"), monomial({2})), monomial({8}));
  EXPECT_EQ(evaluate(parse_operation("Sq0^2"), monomial({1, 3})), monomial({4, 12}));
  EXPECT_EQ(odd::to_string(evaluate(parse_operation("P^1", 3), parse_odd_element("(2)", {3, 1, 1}))), "(6)");
  EXPECT_EQ(odd::to_string(evaluate(parse_operation("P0^1", 3), parse_odd_element("(1)", {3, 1, 1}))), "(2)");
  EXPECT_EQ(odd::to_string(evaluate(parse_operation("P0^1", 3), parse_odd_element("(1,1)", {3, 2, 1}))), "0");
  const auto tu = parse_odd_element("(3)", {3, 1, 1});
  EXPECT_EQ(odd::to_string(evaluate(parse_operation("beta P^1", 3), tu)), "(8)");
  EXPECT_EQ(odd::to_string(evaluate(parse_operation("P^1 beta", 3), tu)), "2*(8)");
  EXPECT_EQ(odd::to_string(evaluate(parse_operation("beta P^1 + P^1 beta", 3), tu)), "0");
  EXPECT_THROW(evaluate(parse_operation("beta + P^1", 3), tu), PreconditionError);
}

TEST(ModuleFiles, SampleModules) {
  const auto hopf = std::get<ModuleDescription<PolyElement>>(parse_module(data("hopf_span.mod")));
  EXPECT_EQ(hopf.kind, ModuleKind::Span);
  EXPECT_EQ(hopf.degree_bound, 300);
  EXPECT_EQ(hopf.layers.at(0).generators.at(0), monomial({1}));
  const auto two_layers = std::get<ModuleDescription<PolyElement>>(parse_module(data("two_layers.mod")));
  EXPECT_EQ(two_layers.kind, ModuleKind::Filtration);
  ASSERT_EQ(two_layers.layers.size(), 2U);
  EXPECT_EQ(two_layers.layers[1].m, 3);
  const auto odd = std::get<ModuleDescription<odd::OddElement>>(parse_module(data("hopf_span_p3.mod")));
  EXPECT_EQ(odd.prime, 3U);
  EXPECT_EQ(odd.degree_bound, 600);
}

TEST(ModuleFiles, ErrorsNameTheLine) {
  try {
    parse_module(data("bad_syntax.mod"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5U);
    EXPECT_NE(std::string(e.what()).find("line 5"), std::string::npos);
  }
  EXPECT_THROW(parse_module("kind: span\ndegree_bound: 10\ngenerators: (1)\n"), ParseError);
  EXPECT_THROW(parse_module("format: steenrod-module/1\nkind: span\ngenerators: (1)\n"), ParseError);
  EXPECT_THROW(parse_module("format: steenrod-module/1\nkind: span\ndegree_bound: 10\ncolour: red\n"), ParseError);
  EXPECT_THROW(parse_module("format: steenrod-module/1\nkind: span\ndegree_bound: 10\ngenerators: (20)\n"),
               InvalidInput);
  EXPECT_THROW(parse_module("format: steenrod-module/1\nkind: span\nprime: 4\ndegree_bound: 10\ngenerators: (1)\n"),
               InvalidInput);
}

TEST(TableFiles, SampleTables) {
  const auto t = parse_table(data("sq16.tab"));
  EXPECT_EQ(t.labels, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(t.degrees, (std::vector<long>{20, 36}));
  EXPECT_EQ(t.ops.at({OpKey::Kind::Sq, 16}).at(0), (FiniteModuleTable::Image{{1, 1}}));
  const auto odd = parse_table(
      "format: steenrod-table/1\nprime: 3\nbasis: a 6\nbasis: b 18\nbasis: c 18\nop: P^3 a -> 2*b + c\nop: beta a -> 0\n");
  EXPECT_EQ(odd.ops.at({OpKey::Kind::P, 3}).at(0), (FiniteModuleTable::Image{{1, 2}, {2, 1}}));
  EXPECT_THROW(parse_table("format: steenrod-table/1\nbasis: a 2\nop: P^1 a -> 0\n"), ParseError);
  EXPECT_THROW(parse_table("format: steenrod-table/1\nbasis: a 2\nop: Sq^1 a -> z\n"), InvalidInput);
  EXPECT_THROW(parse_table("format: steenrod-table/1\nbasis: a 2\nbasis: b 4\nop: Sq^1 a -> b\n"), InvalidInput);
}
