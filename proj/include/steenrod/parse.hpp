#pragma once

// Text formats: elements, Milnor sums, operation expressions, module and table files.
//
// Elements      (1,2) + (2,1)      x1^3 x2      (0,4)@2      2*(1,0) - (0,1)      0
// Milnor sums   Sq(0,4) + Sq(3,3)  Sq()  1
// Operations    Sq^n  Q[t]  Q[t;s]  Sq0^s  P^n  beta  P0^s, composed by juxtaposition
//               (rightmost acts first), summed with +, grouped with parentheses.

#include <cctype>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "steenrod/bv_action.hpp"
#include "steenrod/error.hpp"
#include "steenrod/milnor.hpp"
#include "steenrod/obstruct.hpp"
#include "steenrod/odd_p.hpp"
#include "steenrod/poly.hpp"

namespace steenrod {

struct ElementContext {
  std::uint32_t prime = 2;
  std::size_t d = 1;
  std::uint32_t alpha = 1;
};

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  std::uint64_t number() {
    if (!at_digit()) fail("expected a number");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (std::numeric_limits<std::uint32_t>::max() - 9) / 10) fail("number too large");
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
    }
    return v;
  }
  std::size_t position() const noexcept { return pos_; }
  void rewind(std::size_t pos) noexcept { pos_ = pos; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_), pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// One signed term: coefficient and monomial.
inline std::pair<std::uint64_t, Monomial> parse_term(Cursor& c, const ElementContext& ctx) {
  std::uint64_t coeff = 1;
  const std::size_t start = c.position();
  if (c.at_digit()) {
    coeff = c.number();
    if (!c.accept('*')) {
      if (coeff == 0) return {0, {}};
      c.rewind(start);
      c.fail("expected '*' after coefficient");
    }
  }
  Monomial m;
  m.exps.assign(ctx.d, 0);
  if (c.accept('(')) {
    std::size_t i = 0;
    if (c.peek() != ')') {
      do {
        if (i >= ctx.d) c.fail("too many exponents for d=" + std::to_string(ctx.d));
        m.exps[i++] = static_cast<std::uint32_t>(c.number());
      } while (c.accept(','));
    }
    if (i != ctx.d) c.fail("expected " + std::to_string(ctx.d) + " exponents, got " + std::to_string(i));
    c.expect(')');
  } else if (c.peek() == 'x') {
    while (c.peek() == 'x') {
      c.accept('x');
      const std::uint64_t var = c.number();
      if (var < 1 || var > ctx.d) c.fail("variable index out of range 1.." + std::to_string(ctx.d));
      std::uint64_t e = 1;
      if (c.accept('^')) e = c.number();
      m.exps[var - 1] += static_cast<std::uint32_t>(e);
    }
  } else {
    c.fail("expected a monomial");
  }
  if (c.accept('@')) {
    const std::uint64_t k = c.number();
    if (k < 1 || k > ctx.alpha) c.fail("summand index out of range 1.." + std::to_string(ctx.alpha));
    m.summand = static_cast<std::uint32_t>(k);
  }
  return {coeff, std::move(m)};
}

// Signed terms with coefficients reduced mod p.
inline std::vector<std::pair<std::uint32_t, Monomial>> parse_terms(std::string_view text, const ElementContext& ctx) {
  Cursor c(text);
  std::vector<std::pair<std::uint32_t, Monomial>> out;
  if (c.at_end()) c.fail("empty element");
  bool negative = c.accept('-');
  if (negative && ctx.prime == 2) c.fail("'-' is not used at p=2");
  for (;;) {
    auto [coeff, m] = parse_term(c, ctx);
    std::uint32_t r = static_cast<std::uint32_t>(coeff % ctx.prime);
    if (negative && r != 0) r = ctx.prime - r;
    if (r != 0) out.emplace_back(r, std::move(m));
    if (c.accept('+')) {
      negative = false;
    } else if (c.peek() == '-') {
      if (ctx.prime == 2) c.fail("'-' is not used at p=2");
      c.accept('-');
      negative = true;
    } else {
      break;
    }
  }
  if (!c.at_end()) c.fail("unexpected trailing input");
  return out;
}

}  // namespace detail

inline PolyElement parse_element(std::string_view text, const ElementContext& ctx) {
  if (ctx.prime != 2) throw PreconditionError("parse_element: prime 2 expected");
  std::vector<Monomial> monos;
  for (auto& [c, m] : detail::parse_terms(text, ctx)) monos.push_back(std::move(m));
  try {
    return PolyElement::from_terms(std::move(monos));
  } catch (const PreconditionError& e) {
    throw InvalidInput(e.what());
  }
}

inline odd::OddElement parse_odd_element(std::string_view text, const ElementContext& ctx) {
  if (ctx.prime == 2 || !is_prime(ctx.prime)) throw PreconditionError("parse_odd_element: odd prime expected");
  std::vector<odd::Term> terms;
  for (auto& [c, m] : detail::parse_terms(text, ctx)) terms.emplace_back(std::move(m), c);
  try {
    return odd::OddElement::from_terms(ctx.prime, std::move(terms));
  } catch (const PreconditionError& e) {
    throw InvalidInput(e.what());
  }
}

/// Sum of Milnor basis elements: "Sq(0,4) + Sq(3,3)"; "1" and "Sq()" are the unit, "0" is zero.
inline OperationSum parse_milnor(std::string_view text) {
  detail::Cursor c(text);
  std::vector<MilnorElement> terms;
  if (c.at_end()) c.fail("empty operation");
  if (c.accept('0') && c.at_end()) return {};
  c.rewind(0);
  do {
    if (c.accept("Sq(")) {
      std::vector<std::uint32_t> r;
      if (c.peek() != ')') {
        do r.push_back(static_cast<std::uint32_t>(c.number()));
        while (c.accept(','));
      }
      c.expect(')');
      terms.emplace_back(std::move(r));
    } else if (c.accept('1')) {
      terms.emplace_back();
    } else {
      c.fail("expected Sq(r1,...,rk)");
    }
  } while (c.accept('+'));
  if (!c.at_end()) c.fail("unexpected trailing input");
  try {
    return OperationSum::from_terms(std::move(terms));
  } catch (const PreconditionError& e) {
    throw InvalidInput(e.what());
  }
}

// ---------------------------------------------------------------------------
// Operation expressions

struct OpAtom {
  enum class Kind { Sq, Q, Sq0, P, Beta, P0 } kind = Kind::Sq;
  long a = 0;  ///< n, t, or s
  long b = 0;  ///< s for Q[t;s]
  friend bool operator==(const OpAtom&, const OpAtom&) = default;
};

struct OperationExpr {
  enum class Kind { Atom, Compose, Sum } kind = Kind::Atom;
  OpAtom atom;
  std::vector<OperationExpr> children;  ///< Compose: leftmost first (acts last)
  friend bool operator==(const OperationExpr&, const OperationExpr&) = default;
};

namespace detail {

inline OperationExpr parse_op_sum(Cursor& c, std::uint32_t prime);

inline OperationExpr parse_op_factor(Cursor& c, std::uint32_t prime) {
  if (c.accept('(')) {
    OperationExpr inner = parse_op_sum(c, prime);
    c.expect(')');
    return inner;
  }
  OperationExpr e;
  auto& a = e.atom;
  const bool odd = prime != 2;
  auto require = [&](bool ok, const char* name) {
    if (!ok) c.fail(std::string(name) + " does not act at p=" + std::to_string(prime));
  };
  if (c.accept("Sq0^")) {
    require(!odd, "Sq0");
    a.kind = OpAtom::Kind::Sq0;
    a.a = static_cast<long>(c.number());
  } else if (c.accept("Sq^")) {
    require(!odd, "Sq");
    a.kind = OpAtom::Kind::Sq;
    a.a = static_cast<long>(c.number());
  } else if (c.accept("P0^")) {
    require(odd, "P0");
    a.kind = OpAtom::Kind::P0;
    a.a = static_cast<long>(c.number());
  } else if (c.accept("P^")) {
    require(odd, "P");
    a.kind = OpAtom::Kind::P;
    a.a = static_cast<long>(c.number());
  } else if (c.accept("beta")) {
    require(odd, "beta");
    a.kind = OpAtom::Kind::Beta;
  } else if (c.accept("Q[")) {
    a.kind = OpAtom::Kind::Q;
    a.a = static_cast<long>(c.number());
    if (c.accept(';')) a.b = static_cast<long>(c.number());
    c.expect(']');
  } else {
    c.fail("expected an operation");
  }
  return e;
}

inline bool starts_factor(Cursor& c) {
  const char ch = c.peek();
  return ch == '(' || ch == 'S' || ch == 'P' || ch == 'b' || ch == 'Q';
}

inline OperationExpr parse_op_product(Cursor& c, std::uint32_t prime) {
  OperationExpr first = parse_op_factor(c, prime);
  if (!starts_factor(c)) return first;
  OperationExpr e;
  e.kind = OperationExpr::Kind::Compose;
  e.children.push_back(std::move(first));
  while (starts_factor(c)) {
    OperationExpr next = parse_op_factor(c, prime);
    if (next.kind == OperationExpr::Kind::Compose)
      for (auto& ch : next.children) e.children.push_back(std::move(ch));
    else
      e.children.push_back(std::move(next));
  }
  return e;
}

inline OperationExpr parse_op_sum(Cursor& c, std::uint32_t prime) {
  OperationExpr first = parse_op_product(c, prime);
  if (c.peek() != '+') return first;
  OperationExpr e;
  e.kind = OperationExpr::Kind::Sum;
  e.children.push_back(std::move(first));
  while (c.accept('+')) {
    OperationExpr next = parse_op_product(c, prime);
    if (next.kind == OperationExpr::Kind::Sum)
      for (auto& ch : next.children) e.children.push_back(std::move(ch));
    else
      e.children.push_back(std::move(next));
  }
  return e;
}

}  // namespace detail

inline OperationExpr parse_operation(std::string_view text, std::uint32_t prime = 2) {
  detail::Cursor c(text);
  if (c.at_end()) c.fail("empty operation");
  OperationExpr e = detail::parse_op_sum(c, prime);
  if (!c.at_end()) c.fail("unexpected trailing input");
  return e;
}

inline std::string to_string(const OpAtom& a) {
  switch (a.kind) {
    case OpAtom::Kind::Sq: return "Sq^" + std::to_string(a.a);
    case OpAtom::Kind::Sq0: return "Sq0^" + std::to_string(a.a);
    case OpAtom::Kind::P: return "P^" + std::to_string(a.a);
    case OpAtom::Kind::P0: return "P0^" + std::to_string(a.a);
    case OpAtom::Kind::Beta: return "beta";
    case OpAtom::Kind::Q:
      return "Q[" + std::to_string(a.a) + (a.b != 0 ? ";" + std::to_string(a.b) : "") + "]";
  }
  return "?";
}

inline std::string to_string(const OperationExpr& e) {
  switch (e.kind) {
    case OperationExpr::Kind::Atom: return to_string(e.atom);
    case OperationExpr::Kind::Compose: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += " ";
        const bool wrap = e.children[i].kind == OperationExpr::Kind::Sum;
        out += wrap ? "(" + to_string(e.children[i]) + ")" : to_string(e.children[i]);
      }
      return out;
    }
    case OperationExpr::Kind::Sum: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += " + ";
        out += to_string(e.children[i]);
      }
      return out;
    }
  }
  return "?";
}

/// Evaluates an expression on an element of F_2[x_1..x_d]^{alpha}.
inline PolyElement evaluate(const OperationExpr& e, const PolyElement& x) {
  switch (e.kind) {
    case OperationExpr::Kind::Atom:
      switch (e.atom.kind) {
        case OpAtom::Kind::Sq: return apply_sq(static_cast<std::uint32_t>(e.atom.a), x);
        case OpAtom::Kind::Q: return qts_apply(static_cast<int>(e.atom.a), static_cast<int>(e.atom.b), x);
        case OpAtom::Kind::Sq0: return sq0_power(x, static_cast<int>(e.atom.a));
        default: throw PreconditionError("evaluate: " + to_string(e.atom) + " does not act at p=2");
      }
    case OperationExpr::Kind::Compose: {
      PolyElement y = x;
      for (auto it = e.children.rbegin(); it != e.children.rend(); ++it) y = evaluate(*it, y);
      return y;
    }
    case OperationExpr::Kind::Sum: {
      PolyElement out;
      for (const auto& ch : e.children) out += evaluate(ch, x);
      return out;
    }
  }
  return {};
}

/// Evaluates an expression on an element of H*(B(Z/p)^d; F_p); P0^s is the operation P_0 iterated.
inline odd::OddElement evaluate(const OperationExpr& e, const odd::OddElement& x) {
  switch (e.kind) {
    case OperationExpr::Kind::Atom:
      switch (e.atom.kind) {
        case OpAtom::Kind::P: return odd::apply_p(static_cast<std::uint64_t>(e.atom.a), x);
        case OpAtom::Kind::Beta: return odd::apply_beta(x);
        case OpAtom::Kind::Q: return odd::qts_apply_odd(static_cast<int>(e.atom.a), static_cast<int>(e.atom.b), x);
        case OpAtom::Kind::P0: {
          odd::OddElement y = x;
          for (long i = 0; i < e.atom.a; ++i) y = odd::p0_apply(y);
          return y;
        }
        default: throw PreconditionError("evaluate: " + to_string(e.atom) + " does not act at odd p");
      }
    case OperationExpr::Kind::Compose: {
      odd::OddElement y = x;
      for (auto it = e.children.rbegin(); it != e.children.rend(); ++it) y = evaluate(*it, y);
      return y;
    }
    case OperationExpr::Kind::Sum: {
      odd::OddElement out(x.prime());
      for (const auto& ch : e.children) out += evaluate(ch, x);
      return out;
    }
  }
  return odd::OddElement(x.prime());
}

// ---------------------------------------------------------------------------
// Module and table files: "key: value" lines, '#' comments.

using AnyModule = std::variant<ModuleDescription<PolyElement>, ModuleDescription<odd::OddElement>>;

inline constexpr std::string_view kModuleFormat = "steenrod-module/1";
inline constexpr std::string_view kTableFormat = "steenrod-table/1";

namespace detail {

struct KeyLine {
  std::size_t line = 0;
  std::string key;
  std::string value;
};

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

inline std::vector<KeyLine> key_lines(std::string_view text) {
  std::vector<KeyLine> out;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("line " + std::to_string(line_no) + ": expected 'key: value'", line_no);
    out.push_back({line_no, trim(std::string_view(line).substr(0, colon)), trim(std::string_view(line).substr(colon + 1))});
  }
  return out;
}

inline long to_long(const KeyLine& kl) {
  try {
    std::size_t used = 0;
    const long v = std::stol(kl.value, &used);
    if (used != kl.value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(kl.line) + ": '" + kl.key + "' expects an integer", kl.line);
  }
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

template <class Element, class Parse>
ModuleDescription<Element> build_module(const std::vector<KeyLine>& lines, const ElementContext& ctx, Parse&& parse) {
  ModuleDescription<Element> m;
  m.prime = ctx.prime;
  m.d = static_cast<long>(ctx.d);
  m.alpha = ctx.alpha;
  bool have_kind = false, have_bound = false;
  std::vector<Element> span_gens;
  auto parse_list = [&](const KeyLine& kl, std::string_view list) {
    std::vector<Element> gens;
    for (const auto& g : split(list, ';')) {
      if (g.empty()) throw ParseError("line " + std::to_string(kl.line) + ": empty generator", kl.line);
      try {
        gens.push_back(parse(g, ctx));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(kl.line) + ": " + e.what(), kl.line);
      }
    }
    return gens;
  };
  for (const auto& kl : lines) {
    if (kl.key == "kind") {
      if (kl.value == "span") m.kind = ModuleKind::Span;
      else if (kl.value == "filtration") m.kind = ModuleKind::Filtration;
      else throw ParseError("line " + std::to_string(kl.line) + ": kind must be span or filtration", kl.line);
      have_kind = true;
    } else if (kl.key == "suspension") {
      m.suspension = to_long(kl);
    } else if (kl.key == "degree_bound") {
      m.degree_bound = to_long(kl);
      have_bound = true;
    } else if (kl.key == "generators") {
      for (auto& g : parse_list(kl, kl.value)) span_gens.push_back(std::move(g));
    } else if (kl.key == "layer") {
      const auto semi = kl.value.find(';');
      KeyLine head{kl.line, "layer", trim(std::string_view(kl.value).substr(0, semi))};
      if (semi == std::string::npos) throw ParseError("line " + std::to_string(kl.line) + ": layer needs 'm ; generators'", kl.line);
      m.layers.push_back({to_long(head), parse_list(kl, std::string_view(kl.value).substr(semi + 1))});
    } else if (kl.key != "format" && kl.key != "prime" && kl.key != "d" && kl.key != "alpha") {
      throw ParseError("line " + std::to_string(kl.line) + ": unknown key '" + kl.key + "'", kl.line);
    }
  }
  if (!have_kind) throw ParseError("module file: missing 'kind'", 0);
  if (!have_bound) throw ParseError("module file: missing 'degree_bound'", 0);
  if (m.kind == ModuleKind::Span) {
    if (!m.layers.empty()) throw ParseError("module file: 'layer' lines need kind filtration", 0);
    m.layers.push_back({0, std::move(span_gens)});
  } else if (!span_gens.empty()) {
    throw ParseError("module file: 'generators' lines need kind span", 0);
  }
  m.validate();
  return m;
}

}  // namespace detail

/// Parses a module file; flags not present in the file are taken from `defaults`.
inline AnyModule parse_module(std::string_view text, ElementContext defaults = {}) {
  const auto lines = detail::key_lines(text);
  ElementContext ctx = defaults;
  bool have_format = false;
  for (const auto& kl : lines) {
    if (kl.key == "format") {
      if (kl.value != kModuleFormat)
        throw ParseError("line " + std::to_string(kl.line) + ": unsupported format '" + kl.value + "'", kl.line);
      have_format = true;
    } else if (kl.key == "prime") {
      ctx.prime = static_cast<std::uint32_t>(detail::to_long(kl));
    } else if (kl.key == "d") {
      ctx.d = static_cast<std::size_t>(detail::to_long(kl));
    } else if (kl.key == "alpha") {
      ctx.alpha = static_cast<std::uint32_t>(detail::to_long(kl));
    }
  }
  if (!have_format) throw ParseError("module file: missing 'format: " + std::string(kModuleFormat) + "'", 0);
  if (!is_prime(ctx.prime)) throw InvalidInput("module file: prime must be prime");
  if (ctx.d < 1) throw InvalidInput("module file: d must be positive");
  if (ctx.alpha < 1) throw InvalidInput("module file: alpha must be positive");
  if (ctx.prime == 2)
    return detail::build_module<PolyElement>(lines, ctx, [](std::string_view s, const ElementContext& c) {
      return parse_element(s, c);
    });
  return detail::build_module<odd::OddElement>(lines, ctx, [](std::string_view s, const ElementContext& c) {
    return parse_odd_element(s, c);
  });
}

namespace detail {

inline OpKey parse_op_key(std::string_view s, std::uint32_t prime, std::size_t line) {
  Cursor c(s);
  OpKey key;
  if (c.accept("Sq^")) key = {OpKey::Kind::Sq, c.number()};
  else if (c.accept("P^")) key = {OpKey::Kind::P, c.number()};
  else if (c.accept("beta")) key = {OpKey::Kind::Beta, 0};
  else throw ParseError("line " + std::to_string(line) + ": expected Sq^n, P^n or beta", line);
  if (!c.at_end()) throw ParseError("line " + std::to_string(line) + ": malformed operation", line);
  if ((key.kind == OpKey::Kind::Sq) != (prime == 2))
    throw ParseError("line " + std::to_string(line) + ": " + to_string(key) + " does not act at p=" +
                         std::to_string(prime), line);
  return key;
}

}  // namespace detail

/// Table file:
///   format: steenrod-table/1
///   prime: 2
///   basis: a 20
///   op: Sq^16 a -> b + c          (odd p: 2*b + c; "0" for a zero image)
inline FiniteModuleTable parse_table(std::string_view text, std::uint32_t default_prime = 2) {
  const auto lines = detail::key_lines(text);
  FiniteModuleTable t;
  t.prime = default_prime;
  bool have_format = false;
  for (const auto& kl : lines) {
    if (kl.key == "format") {
      if (kl.value != kTableFormat)
        throw ParseError("line " + std::to_string(kl.line) + ": unsupported format '" + kl.value + "'", kl.line);
      have_format = true;
    } else if (kl.key == "prime") {
      t.prime = static_cast<std::uint32_t>(detail::to_long(kl));
    } else if (kl.key == "basis") {
      std::istringstream in(kl.value);
      std::string label, extra;
      long degree = 0;
      if (!(in >> label >> degree) || (in >> extra))
        throw ParseError("line " + std::to_string(kl.line) + ": expected 'basis: label degree'", kl.line);
      t.labels.push_back(label);
      t.degrees.push_back(degree);
    } else if (kl.key != "op") {
      throw ParseError("line " + std::to_string(kl.line) + ": unknown key '" + kl.key + "'", kl.line);
    }
  }
  if (!have_format) throw ParseError("table file: missing 'format: " + std::string(kTableFormat) + "'", 0);
  if (!is_prime(t.prime)) throw InvalidInput("table file: prime must be prime");
  for (const auto& kl : lines) {
    if (kl.key != "op") continue;
    const auto arrow = kl.value.find("->");
    if (arrow == std::string::npos)
      throw ParseError("line " + std::to_string(kl.line) + ": expected 'op: OP source -> image'", kl.line);
    const std::string lhs = detail::trim(std::string_view(kl.value).substr(0, arrow));
    const std::string rhs = detail::trim(std::string_view(kl.value).substr(arrow + 2));
    const auto space = lhs.find_last_of(" \t");
    if (space == std::string::npos)
      throw ParseError("line " + std::to_string(kl.line) + ": expected an operation and a source label", kl.line);
    const OpKey key = detail::parse_op_key(detail::trim(std::string_view(lhs).substr(0, space)), t.prime, kl.line);
    const std::size_t src = t.index_of(detail::trim(std::string_view(lhs).substr(space + 1)));
    auto& image = t.ops[key][src];
    if (!image.empty()) throw ParseError("line " + std::to_string(kl.line) + ": image given twice", kl.line);
    if (rhs == "0") continue;
    for (const auto& part : detail::split(rhs, '+')) {
      std::uint32_t coeff = 1;
      std::string label = part;
      if (const auto star = part.find('*'); star != std::string::npos) {
        detail::KeyLine c{kl.line, "coefficient", detail::trim(std::string_view(part).substr(0, star))};
        coeff = static_cast<std::uint32_t>(detail::to_long(c) % static_cast<long>(t.prime));
        label = detail::trim(std::string_view(part).substr(star + 1));
      }
      image.emplace_back(t.index_of(label), coeff);
    }
  }
  t.validate();
  return t;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace steenrod
