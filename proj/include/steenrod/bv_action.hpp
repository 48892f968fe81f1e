#pragma once

// Action of the mod 2 Steenrod algebra on H*(BV_d)^{alpha} = F_2[x_1..x_d]^{alpha}.

#include <bit>
#include <cstdint>
#include <vector>

#include "steenrod/arith.hpp"
#include "steenrod/milnor.hpp"
#include "steenrod/poly.hpp"

namespace steenrod {

namespace detail {

// Distributes the remaining budget over positions >= i; Sq^k x^n = C(n,k) x^{n+k}
// and C(n,k) is odd iff k is a binary submask of n.
inline void cartan_expand(const Monomial& source, std::size_t i, std::uint32_t left,
                          const std::vector<std::uint32_t>& suffix, Monomial& current, std::vector<Monomial>& out) {
  const std::size_t d = source.exps.size();
  if (i == d) {
    if (left == 0) out.push_back(current);
    return;
  }
  if (left > suffix[i]) return;
  const std::uint32_t n = source.exps[i];
  const std::uint32_t rest = suffix[i] - n;
  // iterate submasks of n from the largest down, including 0
  for (std::uint32_t k = n;; k = (k - 1) & n) {
    if (k <= left && left - k <= rest) {
      current.exps[i] = n + k;
      cartan_expand(source, i + 1, left - k, suffix, current, out);
    }
    if (k == 0) break;
  }
  current.exps[i] = n;
}

}  // namespace detail

/// Sq^k x. Sq^0 is the identity and Sq^k vanishes above the degree (instability).
inline PolyElement apply_sq(std::uint32_t k, const PolyElement& x) {
  if (k == 0 || x.is_zero()) return x;
  if (static_cast<long>(k) > x.degree()) return {};
  std::vector<Monomial> out;
  std::vector<std::uint32_t> suffix;
  for (const auto& m : x.terms()) {
    const std::size_t d = m.exps.size();
    suffix.assign(d + 1, 0);
    for (std::size_t i = d; i-- > 0;) suffix[i] = suffix[i + 1] + m.exps[i];
    Monomial current = m;
    detail::cartan_expand(m, 0, k, suffix, current, out);
  }
  return PolyElement::from_terms(std::move(out));
}

/// Sq_0^s: every exponent multiplied by 2^s.
inline PolyElement sq0_power(const PolyElement& x, int s) {
  if (s < 0) throw PreconditionError("sq0_power: negative power");
  std::vector<Monomial> out = x.terms();
  for (auto& m : out)
    for (auto& e : m.exps) e <<= s;
  return PolyElement::from_terms(std::move(out));
}

/// Largest s with x in Im(Sq_0^s); kInfiniteLevel when every exponent is zero.
inline int sq0_level(const PolyElement& x) {
  int level = kInfiniteLevel;
  for (const auto& m : x.terms())
    for (auto e : m.exps)
      if (e != 0) level = std::min(level, std::countr_zero(e));
  return level;
}

/// The Sq_0^s preimage: every exponent divided by 2^s. Requires s <= sq0_level(x).
inline PolyElement sq0_root(const PolyElement& x, int s) {
  if (s < 0 || s > sq0_level(x))
    throw PreconditionError("sq0_root: element is not in the image of Sq_0^" + std::to_string(s));
  std::vector<Monomial> out = x.terms();
  for (auto& m : out)
    for (auto& e : m.exps) e >>= s;
  return PolyElement::from_terms(std::move(out));
}

/// Q_t^s x evaluated through the commutator recursion
/// Q_0^s = Sq^{2^s}, Q_{t+1}^s = Sq^{2^{s+t+1}} Q_t^s + Q_t^s Sq^{2^{s+t+1}}.
inline PolyElement qts_apply(int t, int s, const PolyElement& x) {
  if (t < 0 || s < 0) throw PreconditionError("qts_apply: negative index");
  if (s + t >= 31) throw ResourceError("qts_apply: 2^(s+t) overflows");
  if (x.is_zero()) return x;
  if (t == 0) return apply_sq(1U << s, x);
  const std::uint32_t k = 1U << (s + t);
  const PolyElement inner = qts_apply(t - 1, s, x);
  return apply_sq(k, inner) + qts_apply(t - 1, s, apply_sq(k, x));
}

/// Applies Sq^{i_1} ... Sq^{i_k} (rightmost first).
inline PolyElement apply_word(const AdmissibleWord& word, const PolyElement& x) {
  PolyElement y = x;
  for (auto it = word.rbegin(); it != word.rend() && !y.is_zero(); ++it) y = apply_sq(*it, y);
  return y;
}

inline PolyElement apply_admissible(const AdmissibleSum& sum, const PolyElement& x) {
  PolyElement out;
  for (const auto& w : sum.words) out += apply_word(w, x);
  return out;
}

/// Action of a Milnor-basis operation via its admissible expansion.
inline PolyElement apply_operation(const OperationSum& op, const PolyElement& x,
                                   const MilnorLimits& limits = {}) {
  PolyElement out;
  for (const auto& term : op.terms()) out += apply_admissible(milnor_to_admissible(term, limits), x);
  return out;
}

}  // namespace steenrod
