#pragma once

// H*(B(Z/p)^d; F_p) for odd p with the action of beta and the reduced powers.
//
// A basic monomial stores encoded exponents n_i = 2 m_i + e_i meaning
// t_1^{e_1} u_1^{m_1} (x) ... (x) t_d^{e_d} u_d^{m_d}, |t| = 1, |u| = 2.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "steenrod/arith.hpp"
#include "steenrod/error.hpp"
#include "steenrod/exchange.hpp"
#include "steenrod/poly.hpp"
#include "steenrod/span.hpp"

namespace steenrod::odd {

using Term = std::pair<Monomial, std::uint32_t>;

/// Homogeneous F_p-linear combination of basic monomials.
class OddElement {
 public:
  explicit OddElement(std::uint32_t prime = 3) : p_(prime) {
    if (prime < 3 || !is_prime(prime)) throw PreconditionError("OddElement: prime must be odd");
  }
  OddElement(std::uint32_t prime, Monomial m, std::uint32_t coeff = 1) : OddElement(prime) {
    if (coeff % p_ != 0) terms_.emplace_back(std::move(m), coeff % p_);
  }

  /// Collects like terms mod p; throws on inhomogeneous input.
  static OddElement from_terms(std::uint32_t prime, std::vector<Term> terms) {
    OddElement out(prime);
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < terms.size();) {
      std::uint64_t c = 0;
      std::size_t j = i;
      for (; j < terms.size() && terms[j].first == terms[i].first; ++j) c += terms[j].second;
      if (c % prime != 0) out.terms_.emplace_back(std::move(terms[i].first), static_cast<std::uint32_t>(c % prime));
      i = j;
    }
    for (const auto& [m, c] : out.terms_) {
      if (m.degree() != out.terms_.front().first.degree())
        throw PreconditionError("OddElement: inhomogeneous element");
      if (m.rank() != out.terms_.front().first.rank())
        throw PreconditionError("OddElement: monomials of different rank");
    }
    return out;
  }

  std::uint32_t prime() const noexcept { return p_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  long degree() const noexcept { return terms_.empty() ? -1 : terms_.front().first.degree(); }
  std::size_t rank() const noexcept { return terms_.empty() ? 0 : terms_.front().first.rank(); }
  const Monomial& leading() const { return terms_.back().first; }
  std::uint32_t leading_coeff() const { return terms_.back().second; }

  OddElement scaled(std::uint32_t c) const {
    OddElement out(p_);
    c %= p_;
    if (c == 0) return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.second = static_cast<std::uint32_t>(std::uint64_t{t.second} * c % p_);
    return out;
  }

  OddElement& operator+=(const OddElement& other) {
    if (other.p_ != p_) throw PreconditionError("OddElement: mixed primes");
    if (other.is_zero()) return *this;
    if (!is_zero() && (degree() != other.degree() || rank() != other.rank()))
      throw PreconditionError("OddElement: adding elements of different degree or rank");
    std::vector<Term> all = terms_;
    all.insert(all.end(), other.terms_.begin(), other.terms_.end());
    *this = from_terms(p_, std::move(all));
    return *this;
  }
  OddElement& operator-=(const OddElement& other) { return *this += other.scaled(p_ - 1); }

  friend OddElement operator+(OddElement a, const OddElement& b) { return a += b; }
  friend OddElement operator-(OddElement a, const OddElement& b) { return a -= b; }
  friend bool operator==(const OddElement& a, const OddElement& b) { return a.p_ == b.p_ && a.terms_ == b.terms_; }

 private:
  std::uint32_t p_;
  std::vector<Term> terms_;
};

inline const Monomial& leading(const OddElement& x) { return x.leading(); }
inline OddElement normalized(OddElement x) { return x.scaled(inverse_mod(x.leading_coeff(), x.prime())); }
inline void eliminate(OddElement& x, const OddElement& pivot) { x -= pivot.scaled(x.leading_coeff()); }

inline bool has_exterior(const Monomial& m) {
  return std::any_of(m.exps.begin(), m.exps.end(), [](std::uint32_t n) { return n % 2 == 1; });
}

inline std::size_t exterior_count(const Monomial& m) {
  return static_cast<std::size_t>(std::count_if(m.exps.begin(), m.exps.end(), [](std::uint32_t n) { return n % 2 == 1; }));
}

namespace detail {

inline void expand_power(const Monomial& source, std::size_t i, std::uint64_t left, std::uint64_t coeff,
                         std::uint32_t p, const std::vector<std::uint64_t>& suffix, Monomial& current,
                         std::vector<Term>& out) {
  const std::size_t d = source.exps.size();
  if (i == d) {
    if (left == 0) out.emplace_back(current, static_cast<std::uint32_t>(coeff));
    return;
  }
  if (left > suffix[i]) return;
  const std::uint32_t n = source.exps[i];
  const std::uint64_t m = n / 2;
  for (std::uint64_t a = 0; a <= std::min<std::uint64_t>(m, left); ++a) {
    if (left - a > suffix[i + 1]) continue;
    const std::uint32_t c = binomial_mod(m, a, p);
    if (c == 0) continue;
    current.exps[i] = static_cast<std::uint32_t>(n + 2 * (p - 1) * a);
    expand_power(source, i + 1, left - a, coeff * c % p, p, suffix, current, out);
  }
  current.exps[i] = n;
}

}  // namespace detail

/// P^k x; zero when 2k > |x|.
inline OddElement apply_p(std::uint64_t k, const OddElement& x) {
  const std::uint32_t p = x.prime();
  if (k == 0 || x.is_zero()) return x;
  if (2 * static_cast<long>(k) > x.degree()) return OddElement(p);
  std::vector<Term> out;
  std::vector<std::uint64_t> suffix;
  for (const auto& [m, c] : x.terms()) {
    suffix.assign(m.rank() + 1, 0);
    for (std::size_t i = m.rank(); i-- > 0;) suffix[i] = suffix[i + 1] + m.exps[i] / 2;
    Monomial current = m;
    detail::expand_power(m, 0, k, c, p, suffix, current, out);
  }
  return OddElement::from_terms(p, std::move(out));
}

/// Bockstein: t -> u, u -> 0, a derivation with sign (-1)^{|a|} across a (x) b.
inline OddElement apply_beta(const OddElement& x) {
  const std::uint32_t p = x.prime();
  std::vector<Term> out;
  for (const auto& [m, c] : x.terms()) {
    std::uint64_t prefix = 0;
    for (std::size_t i = 0; i < m.rank(); ++i) {
      if (m.exps[i] % 2 == 1) {
        Monomial n = m;
        n.exps[i] += 1;
        const std::uint32_t coeff = prefix % 2 == 0 ? c : p - c;
        out.emplace_back(std::move(n), coeff);
      }
      prefix += m.exps[i];
    }
  }
  return OddElement::from_terms(p, std::move(out));
}

/// The exponent map 2m + e -> 2pm + 2e applied s times; coefficients unchanged.
inline OddElement p0_power(const OddElement& x, int s) {
  if (s < 0) throw PreconditionError("p0_power: negative power");
  const std::uint32_t p = x.prime();
  std::vector<Term> out = x.terms();
  for (auto& [m, c] : out)
    for (auto& n : m.exps)
      for (int k = 0; k < s; ++k) n = p * (n - n % 2) + 2 * (n % 2);
  return OddElement::from_terms(p, std::move(out));
}

/// The operation P_0: P^{|x|/2} for even |x|, beta P^{(|x|-1)/2} for odd |x|.
inline OddElement p0_apply(const OddElement& x) {
  if (x.is_zero()) return x;
  const long n = x.degree();
  if (n % 2 == 0) return apply_p(static_cast<std::uint64_t>(n / 2), x);
  return apply_beta(apply_p(static_cast<std::uint64_t>((n - 1) / 2), x));
}

namespace detail {

// Whether an encoded exponent vector is the image of a basic monomial under
// P_0^s: every exponent is 2 p^{s-1} l with l = 0 or 1 mod p, and at most one
// position has l = 1 mod p (P_0 kills monomials with two exterior factors).
inline bool monomial_in_p0_image(const Monomial& m, int s, std::uint32_t p) {
  if (s == 0) return true;
  const std::uint64_t unit = 2 * static_cast<std::uint64_t>(ipow(p, s - 1));
  std::size_t exterior = 0;
  for (auto n : m.exps) {
    if (n % unit != 0) return false;
    const std::uint64_t l = n / unit;
    if (l % p == 1) ++exterior;
    else if (l % p != 0) return false;
  }
  return exterior <= 1;
}

}  // namespace detail

/// Largest s with x in Im(P_0^s); kInfiniteLevel for zero or constant elements.
inline int p0_level(const OddElement& x) {
  if (x.is_zero()) return kInfiniteLevel;
  std::uint64_t largest = 0;
  for (const auto& [m, c] : x.terms())
    for (auto n : m.exps) largest = std::max<std::uint64_t>(largest, n);
  if (largest == 0) return kInfiniteLevel;
  int s = 0;
  while (2 * static_cast<std::uint64_t>(ipow(x.prime(), s)) <= largest &&
         std::all_of(x.terms().begin(), x.terms().end(),
                     [&](const Term& t) { return detail::monomial_in_p0_image(t.first, s + 1, x.prime()); }))
    ++s;
  return s;
}

/// Inverse of p0_power on Im(P_0^s).
inline OddElement p0_root(const OddElement& x, int s) {
  if (s < 0 || s > p0_level(x))
    throw PreconditionError("p0_root: element is not in the image of P_0^" + std::to_string(s));
  const std::uint32_t p = x.prime();
  std::vector<Term> out = x.terms();
  for (auto& [m, c] : out)
    for (auto& n : m.exps)
      for (int k = 0; k < s; ++k) {
        const std::uint32_t l = n / 2;  // n = 2 l, l = p m + e
        n = 2 * (l / p) + l % p;
      }
  return OddElement::from_terms(p, std::move(out));
}

/// Q_t^s x by the commutator recursion:
///   s = 0:  Q_0 = beta,            Q_{t+1} = [P^{p^t}, Q_t];
///   s >= 1: Q_0^s = P^{p^{s-1}},   Q_{t+1}^s = [P^{p^{s+t}}, Q_t^s].
inline OddElement qts_apply_odd(int t, int s, const OddElement& x) {
  if (t < 0 || s < 0) throw PreconditionError("qts_apply_odd: negative index");
  if (x.is_zero()) return x;
  const std::uint32_t p = x.prime();
  if (t == 0) return s == 0 ? apply_beta(x) : apply_p(static_cast<std::uint64_t>(ipow(p, s - 1)), x);
  const auto k = static_cast<std::uint64_t>(ipow(p, s == 0 ? t - 1 : s + t - 1));
  return apply_p(k, qts_apply_odd(t - 1, s, x)) - qts_apply_odd(t - 1, s, apply_p(k, x));
}

/// Degree of Q_t^s: 2(p^{t+s} - p^{s-1}) for s >= 1, 2p^t - 1 for s = 0.
inline long qts_odd_degree(int t, int s, std::uint32_t p) {
  if (s == 0) return 2 * ipow(p, t) - 1;
  return 2 * (ipow(p, t + s) - ipow(p, s - 1));
}

/// Longest run of t <= t_max with Q_t^s x = 0, s = p0_level(x), and whether the
/// bound r - q <= d - 2 holds for it.
struct RunBoundReport {
  VanishingRun run;
  long d = 0;
  bool bound_holds = true;
};

inline RunBoundReport le5_run_check(const OddElement& x, int t_max) {
  if (x.is_zero()) throw PreconditionError("le5_run_check: zero element");
  const int level = p0_level(x);
  if (level == kInfiniteLevel) throw PreconditionError("le5_run_check: constant element");
  RunBoundReport report;
  report.d = static_cast<long>(x.rank());
  report.run.s = level;
  report.run.t_max = t_max;
  const OddElement root = p0_root(x, level);
  report.run.parity_degenerate =
      std::none_of(root.terms().begin(), root.terms().end(), [](const Term& t) { return has_exterior(t.first); });
  std::vector<bool> vanishes;
  for (int t = 0; t <= t_max; ++t) vanishes.push_back(qts_apply_odd(t, level, x).is_zero());
  steenrod::detail::fill_run(report.run, vanishes);
  report.bound_holds = report.run.parity_degenerate || report.run.length() == 0 ||
                       static_cast<long>(report.run.length()) - 1 <= report.d - 2;
  return report;
}

/// Images under beta and P^{p^j} (2 p^j <= |v|); these generate A_p.
inline std::vector<OddElement> odd_generator_images(const OddElement& v, long max_degree) {
  std::vector<OddElement> out;
  const std::uint32_t p = v.prime();
  if (v.degree() + 1 <= max_degree) out.push_back(apply_beta(v));
  for (std::uint64_t k = 1; 2 * static_cast<long>(k) <= v.degree(); k *= p) {
    if (v.degree() + 2 * static_cast<long>(k) * (p - 1) > max_degree) break;
    out.push_back(apply_p(k, v));
  }
  return out;
}

/// The A_p-span of the generators in degrees <= bound.
inline GradedSpan<OddElement> span_degrees_odd(const std::vector<OddElement>& generators, long bound) {
  return close_span(generators, bound, odd_generator_images);
}

inline std::optional<long> first_occupied_above_odd(const OddElement& x, long bound) {
  const auto span = close_span(std::vector<OddElement>{x}, bound, odd_generator_images, x.degree());
  for (const auto& [deg, space] : span.pieces)
    if (deg > x.degree() && space.dimension() > 0) return deg;
  return std::nullopt;
}

/// A gap (|x|, |x|+l] in A_p x with l >= 2(p-1)p^k, k >= d-3, forces x into Im(P_0^{k-d+3}).
inline DivisibilityResult le6_check(const OddElement& x, long span_bound) {
  if (x.is_zero()) throw PreconditionError("le6_check: zero element");
  const std::uint32_t p = x.prime();
  DivisibilityResult r;
  r.level = p0_level(x);
  const long d = static_cast<long>(x.rank());
  const auto first = first_occupied_above_odd(x, span_bound);
  if (!first) {
    r.verdict = DivisibilityVerdict::Inconclusive;
    return r;
  }
  r.gap_length = *first - x.degree() - 1;
  r.gap_found = r.gap_length >= 1;
  const long unit = 2 * (static_cast<long>(p) - 1);
  if (r.gap_length < unit) return r;
  int k = 0;
  while (unit * ipow(p, k + 1) <= r.gap_length) ++k;
  if (k < d - 3) return r;
  r.k = k;
  r.required_level = static_cast<int>(k - d + 3);
  r.verdict = r.level >= r.required_level ? DivisibilityVerdict::Pass : DivisibilityVerdict::Fail;
  return r;
}

/// External product; coefficients multiply, exponent vectors concatenate.
inline OddElement tensor(const OddElement& x, const OddElement& y) {
  if (x.prime() != y.prime()) throw PreconditionError("tensor: mixed primes");
  std::vector<Term> out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      Monomial m = a;
      m.exps.insert(m.exps.end(), b.exps.begin(), b.exps.end());
      out.emplace_back(std::move(m), static_cast<std::uint32_t>(std::uint64_t{ca} * cb % x.prime()));
    }
  return OddElement::from_terms(x.prime(), std::move(out));
}

inline std::string to_string(const OddElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < x.terms().size(); ++i) {
    const auto& [m, c] = x.terms()[i];
    if (i) out += " + ";
    if (c != 1) out += std::to_string(c) + "*";
    out += steenrod::to_string(m);
  }
  return out;
}

}  // namespace steenrod::odd
