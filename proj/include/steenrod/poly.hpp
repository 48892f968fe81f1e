#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "steenrod/error.hpp"

namespace steenrod {

/// x_1^{n_1} ... x_d^{n_d} in summand `summand` (1-based) of H*(BV_d)^{alpha}.
///
/// At odd primes the same type stores encoded exponents n_i = 2 m_i + e_i
/// standing for t_i^{e_i} u_i^{m_i}.
struct Monomial {
  std::uint32_t summand = 1;
  std::vector<std::uint32_t> exps;

  long degree() const noexcept {
    long sum = 0;
    for (auto e : exps) sum += e;
    return sum;
  }
  std::size_t rank() const noexcept { return exps.size(); }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

namespace detail {

/// Sorts and keeps each monomial with odd multiplicity.
inline std::vector<Monomial> cancel_pairs(std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end());
  std::vector<Monomial> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(std::move(terms[i]));
    i = j;
  }
  return out;
}

}  // namespace detail

/// Homogeneous F_2 sum of distinct monomials of a common rank.
class PolyElement {
 public:
  PolyElement() = default;
  explicit PolyElement(Monomial m) { terms_.push_back(std::move(m)); }

  static PolyElement from_terms(std::vector<Monomial> terms) {
    PolyElement out;
    out.terms_ = detail::cancel_pairs(std::move(terms));
    out.validate();
    return out;
  }

  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Degree of the terms; -1 for zero.
  long degree() const noexcept { return terms_.empty() ? -1 : terms_.front().degree(); }
  /// Number of variables d; 0 for zero.
  std::size_t rank() const noexcept { return terms_.empty() ? 0 : terms_.front().rank(); }
  /// Largest monomial in lexicographic order.
  const Monomial& leading() const { return terms_.back(); }

  PolyElement& operator+=(const PolyElement& other) {
    if (other.is_zero()) return *this;
    if (!is_zero() && (degree() != other.degree() || rank() != other.rank()))
      throw PreconditionError("PolyElement: adding elements of different degree or rank");
    std::vector<Monomial> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                  std::back_inserter(merged));
    terms_ = std::move(merged);
    return *this;
  }

  friend PolyElement operator+(PolyElement a, const PolyElement& b) { return a += b; }
  friend bool operator==(const PolyElement&, const PolyElement&) = default;

 private:
  void validate() const {
    for (const auto& m : terms_) {
      if (m.degree() != terms_.front().degree())
        throw PreconditionError("PolyElement: inhomogeneous element");
      if (m.rank() != terms_.front().rank()) throw PreconditionError("PolyElement: monomials of different rank");
      if (m.summand == 0) throw PreconditionError("PolyElement: summand index is 1-based");
    }
  }

  std::vector<Monomial> terms_;
};

/// Product in the polynomial algebra (exponent addition); both operands must
/// live in the same summand.
inline PolyElement product(const PolyElement& x, const PolyElement& y) {
  std::vector<Monomial> out;
  for (const auto& a : x.terms())
    for (const auto& b : y.terms()) {
      if (a.summand != b.summand || a.rank() != b.rank())
        throw PreconditionError("product: operands in different summands or ranks");
      Monomial m = a;
      for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] += b.exps[i];
      out.push_back(std::move(m));
    }
  return PolyElement::from_terms(std::move(out));
}

/// External product H*(BV_a) (x) H*(BV_b) -> H*(BV_{a+b}).
inline PolyElement tensor(const PolyElement& x, const PolyElement& y) {
  std::vector<Monomial> out;
  for (const auto& a : x.terms())
    for (const auto& b : y.terms()) {
      Monomial m = a;
      m.exps.insert(m.exps.end(), b.exps.begin(), b.exps.end());
      out.push_back(std::move(m));
    }
  return PolyElement::from_terms(std::move(out));
}

inline PolyElement monomial(std::vector<std::uint32_t> exps, std::uint32_t summand = 1) {
  return PolyElement(Monomial{summand, std::move(exps)});
}

inline std::string to_string(const Monomial& m) {
  std::string out = "(";
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(m.exps[i]);
  }
  out += ")";
  if (m.summand != 1) out += "@" + std::to_string(m.summand);
  return out;
}

inline std::string to_string(const PolyElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < x.terms().size(); ++i) {
    if (i) out += " + ";
    out += to_string(x.terms()[i]);
  }
  return out;
}

}  // namespace steenrod
