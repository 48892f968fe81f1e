#pragma once

// The mod 2 Steenrod algebra in the Milnor basis.
//
// Products follow Milnor's matrix formula: for Sq(r) * Sq(s) one sums over
// matrices X = (x_ij), i, j >= 0, x_00 ignored, with
//   sum_j 2^j x_ij = r_i  (i >= 1)   and   sum_i x_ij = s_j  (j >= 1);
// the term is Sq(t) with t_n = sum_{i+j=n} x_ij, and its coefficient is the
// product over n of the multinomials (x_n0, x_{n-1,1}, ..., x_0n), which is
// odd iff the binary digits of the entries on each diagonal are disjoint.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "steenrod/error.hpp"
#include "steenrod/linalg.hpp"

namespace steenrod {

/// Sq(r_1, ..., r_k) with trailing zeros trimmed; the empty sequence is the unit.
class MilnorElement {
 public:
  MilnorElement() = default;
  explicit MilnorElement(std::vector<std::uint32_t> exponents) : r_(std::move(exponents)) {
    while (!r_.empty() && r_.back() == 0) r_.pop_back();
  }

  /// The element with `value` in position `index` (1-based) and zeros elsewhere.
  static MilnorElement single(std::size_t index, std::uint32_t value) {
    std::vector<std::uint32_t> r(index, 0);
    r[index - 1] = value;
    return MilnorElement(std::move(r));
  }

  const std::vector<std::uint32_t>& exponents() const noexcept { return r_; }
  bool is_unit() const noexcept { return r_.empty(); }

  friend auto operator<=>(const MilnorElement&, const MilnorElement&) = default;

 private:
  std::vector<std::uint32_t> r_;
};

/// sum_i r_i (2^i - 1).
inline long milnor_degree(const MilnorElement& e) {
  long degree = 0;
  const auto& r = e.exponents();
  for (std::size_t i = 0; i < r.size(); ++i) degree += static_cast<long>(r[i]) * ((1L << (i + 1)) - 1);
  return degree;
}

/// F_2 sum of Milnor basis elements of one common degree.
class OperationSum {
 public:
  OperationSum() = default;
  explicit OperationSum(MilnorElement e) : degree_(milnor_degree(e)) { terms_.push_back(std::move(e)); }

  /// Builds a sum, cancelling repeated terms in pairs. Throws on mixed degrees.
  static OperationSum from_terms(std::vector<MilnorElement> terms) {
    std::sort(terms.begin(), terms.end());
    OperationSum out;
    for (std::size_t i = 0; i < terms.size();) {
      std::size_t j = i;
      while (j < terms.size() && terms[j] == terms[i]) ++j;
      if ((j - i) % 2 == 1) out.terms_.push_back(terms[i]);
      i = j;
    }
    for (const auto& t : out.terms_) {
      const long d = milnor_degree(t);
      if (out.degree_ >= 0 && d != out.degree_)
        throw PreconditionError("OperationSum: terms of mixed degree");
      out.degree_ = d;
    }
    return out;
  }

  const std::vector<MilnorElement>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Common degree of the terms; -1 for the zero sum.
  long degree() const noexcept { return degree_; }

  OperationSum& operator+=(const OperationSum& other) {
    if (other.is_zero()) return *this;
    if (!is_zero() && degree_ != other.degree_)
      throw PreconditionError("OperationSum: adding operations of different degree");
    std::vector<MilnorElement> merged;
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                  std::back_inserter(merged));
    terms_ = std::move(merged);
    degree_ = terms_.empty() ? -1 : other.degree_;
    return *this;
  }

  friend OperationSum operator+(OperationSum a, const OperationSum& b) { return a += b; }
  friend bool operator==(const OperationSum& a, const OperationSum& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<MilnorElement> terms_;
  long degree_ = -1;
};

namespace detail {

struct MilnorProductState {
  const std::vector<std::uint32_t>& r;
  const std::vector<std::uint32_t>& s;
  std::vector<std::vector<std::uint32_t>> x;  // (rows+1) x (cols+1)
  std::vector<std::uint32_t> row_left;
  std::vector<std::uint32_t> col_left;
  std::vector<MilnorElement>& out;
};

inline void emit_milnor_term(MilnorProductState& st) {
  const std::size_t rows = st.r.size();
  const std::size_t cols = st.s.size();
  for (std::size_t i = 1; i <= rows; ++i) st.x[i][0] = st.row_left[i];
  for (std::size_t j = 1; j <= cols; ++j) st.x[0][j] = st.col_left[j];
  std::vector<std::uint32_t> t(rows + cols, 0);
  for (std::size_t n = 1; n <= rows + cols; ++n) {
    std::uint32_t seen = 0;
    std::uint32_t sum = 0;
    for (std::size_t i = 0; i <= std::min(n, rows); ++i) {
      const std::size_t j = n - i;
      if (j > cols) continue;
      const std::uint32_t v = st.x[i][j];
      if (seen & v) return;  // even multinomial
      seen |= v;
      sum += v;
    }
    t[n - 1] = sum;
  }
  st.out.emplace_back(std::move(t));
}

inline void fill_milnor_cells(MilnorProductState& st, std::size_t i, std::size_t j) {
  const std::size_t rows = st.r.size();
  const std::size_t cols = st.s.size();
  if (i > rows) {
    emit_milnor_term(st);
    return;
  }
  if (j > cols) {
    fill_milnor_cells(st, i + 1, 1);
    return;
  }
  const std::uint32_t weight = 1U << j;
  const std::uint32_t cap = std::min(st.row_left[i] / weight, st.col_left[j]);
  for (std::uint32_t v = 0; v <= cap; ++v) {
    st.x[i][j] = v;
    st.row_left[i] -= v * weight;
    st.col_left[j] -= v;
    fill_milnor_cells(st, i, j + 1);
    st.row_left[i] += v * weight;
    st.col_left[j] += v;
  }
  st.x[i][j] = 0;
}

}  // namespace detail

/// Milnor product a * b over F_2.
inline OperationSum milnor_multiply(const MilnorElement& a, const MilnorElement& b) {
  const auto& r = a.exponents();
  const auto& s = b.exponents();
  std::vector<MilnorElement> terms;
  detail::MilnorProductState st{r, s,
                                std::vector<std::vector<std::uint32_t>>(r.size() + 1,
                                                                        std::vector<std::uint32_t>(s.size() + 1, 0)),
                                {}, {}, terms};
  st.row_left.assign(r.size() + 1, 0);
  st.col_left.assign(s.size() + 1, 0);
  for (std::size_t i = 0; i < r.size(); ++i) st.row_left[i + 1] = r[i];
  for (std::size_t j = 0; j < s.size(); ++j) st.col_left[j + 1] = s[j];
  detail::fill_milnor_cells(st, 1, 1);
  return OperationSum::from_terms(std::move(terms));
}

inline OperationSum multiply(const OperationSum& a, const OperationSum& b) {
  std::vector<MilnorElement> all;
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) {
      const auto prod = milnor_multiply(x, y);
      all.insert(all.end(), prod.terms().begin(), prod.terms().end());
    }
  return OperationSum::from_terms(std::move(all));
}

/// [a, b] = ab + ba (no signs in characteristic 2).
inline OperationSum commutator(const OperationSum& a, const OperationSum& b) {
  return multiply(a, b) + multiply(b, a);
}

/// Configurable bounds for the Q_t^s tower and basis changes.
struct MilnorLimits {
  int max_t = 6;
  int max_s = 6;
  long max_degree = 256;
};

/// Sq^{2^s} as a Milnor element.
inline OperationSum sq_power_of_two(int s) { return OperationSum(MilnorElement::single(1, 1U << s)); }

/// Q_t^s expanded in the Milnor basis: Q_0^s = Sq^{2^s}, Q_{t+1}^s = [Sq^{2^{s+t+1}}, Q_t^s].
inline OperationSum qts_milnor(int t, int s, const MilnorLimits& limits = {}) {
  if (t < 0 || s < 0) throw PreconditionError("qts_milnor: negative index");
  if (t > limits.max_t || s > limits.max_s)
    throw ResourceError("qts_milnor: (t, s) = (" + std::to_string(t) + ", " + std::to_string(s) +
                        ") exceeds configured bound");
  const long degree = (1L << s) * ((1L << (t + 1)) - 1);
  if (degree > limits.max_degree)
    throw ResourceError("qts_milnor: degree " + std::to_string(degree) + " exceeds configured bound " +
                        std::to_string(limits.max_degree));
  OperationSum q = sq_power_of_two(s);
  for (int k = 0; k < t; ++k) q = commutator(sq_power_of_two(s + k + 1), q);
  return q;
}

/// All Milnor basis elements of the given degree, in lexicographic order.
inline std::vector<MilnorElement> milnor_basis(long degree) {
  std::vector<MilnorElement> out;
  if (degree < 0) return out;
  int top = 1;
  while ((1L << (top + 1)) - 1 <= degree) ++top;
  std::vector<std::uint32_t> r(static_cast<std::size_t>(top), 0);
  // fill from the highest weight down so every exponent is determined exactly
  auto rec = [&](auto&& self, int index, long left) -> void {
    if (index == 0) {
      if (left == 0) out.emplace_back(r);
      return;
    }
    const long weight = (1L << index) - 1;
    for (long v = left / weight; v >= 0; --v) {
      if (index == 1 && v != left) continue;
      r[static_cast<std::size_t>(index - 1)] = static_cast<std::uint32_t>(v);
      self(self, index - 1, left - v * weight);
    }
    r[static_cast<std::size_t>(index - 1)] = 0;
  };
  rec(rec, top, degree);
  std::sort(out.begin(), out.end());
  return out;
}

/// A composition Sq^{i_1} Sq^{i_2} ... Sq^{i_k}; Sq^{i_k} acts first. Empty = identity.
using AdmissibleWord = std::vector<std::uint32_t>;

/// F_2 sum of admissible words (sorted, duplicate free).
struct AdmissibleSum {
  std::vector<AdmissibleWord> words;
  friend bool operator==(const AdmissibleSum&, const AdmissibleSum&) = default;
};

/// Admissible words (i_j >= 2 i_{j+1}, all i_j >= 1) of the given total degree.
inline std::vector<AdmissibleWord> admissible_words(long degree) {
  std::vector<AdmissibleWord> out;
  if (degree == 0) {
    out.emplace_back();
    return out;
  }
  // Build from the last (innermost) entry outward: each new outer entry must be
  // at least twice the previous one.
  AdmissibleWord rev;
  auto rec = [&](auto&& self, long left, long min_next) -> void {
    if (left == 0) {
      out.emplace_back(rev.rbegin(), rev.rend());
      return;
    }
    for (long v = std::max(min_next, 1L); v <= left; ++v) {
      rev.push_back(static_cast<std::uint32_t>(v));
      self(self, left - v, 2 * v);
      rev.pop_back();
    }
  };
  rec(rec, degree, 1);
  std::sort(out.begin(), out.end());
  return out;
}

/// Milnor expansion of a composition of Sq^n's.
inline OperationSum word_to_milnor(const AdmissibleWord& word) {
  OperationSum acc(MilnorElement{});
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    acc = multiply(OperationSum(MilnorElement::single(1, *it)), acc);
  return acc;
}

/// Rewrites a Milnor basis element as a sum of admissible compositions.
inline AdmissibleSum milnor_to_admissible(const MilnorElement& e, const MilnorLimits& limits = {}) {
  const long degree = milnor_degree(e);
  if (degree > limits.max_degree)
    throw ResourceError("milnor_to_admissible: degree " + std::to_string(degree) + " exceeds configured bound");
  const auto basis = milnor_basis(degree);
  const auto words = admissible_words(degree);
  if (basis.size() != words.size())
    throw InternalError("milnor_to_admissible: basis sizes differ in degree " + std::to_string(degree));
  const std::size_t n = basis.size();
  auto index_of = [&](const MilnorElement& m) {
    return static_cast<std::size_t>(std::lower_bound(basis.begin(), basis.end(), m) - basis.begin());
  };
  std::vector<BitRow> rows(n, BitRow(n));
  for (std::size_t w = 0; w < n; ++w) {
    const OperationSum expansion = word_to_milnor(words[w]);
    for (const auto& term : expansion.terms()) rows[w].flip(index_of(term));
  }
  const auto inverse = f2_inverse(std::move(rows));
  if (!inverse) throw InternalError("milnor_to_admissible: singular change of basis");
  // coefficients c with c * A = e_target are the target row of A^{-1}
  const BitRow& coeffs = (*inverse)[index_of(e)];
  AdmissibleSum out;
  for (std::size_t w = 0; w < n; ++w)
    if (coeffs.test(w)) out.words.push_back(words[w]);
  return out;
}

inline std::string to_string(const MilnorElement& e) {
  std::ostringstream os;
  os << "Sq(";
  for (std::size_t i = 0; i < e.exponents().size(); ++i) os << (i ? "," : "") << e.exponents()[i];
  os << ")";
  return os.str();
}

inline std::string to_string(const OperationSum& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < s.terms().size(); ++i) {
    if (i) out += " + ";
    out += to_string(s.terms()[i]);
  }
  return out;
}

inline std::string to_string(const AdmissibleWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += "Sq^" + std::to_string(w[i]);
  }
  return out;
}

inline std::string to_string(const AdmissibleSum& s) {
  if (s.words.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < s.words.size(); ++i) {
    if (i) out += " + ";
    out += to_string(s.words[i]);
  }
  return out;
}

}  // namespace steenrod
