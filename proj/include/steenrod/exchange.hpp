#pragma once

// Exchange combinatorics on basic monomials: g-exchanges, (l,s)-chains,
// (l,s)-classes with their supports, and the bounds they satisfy.
//
// A g-exchange between alpha and beta at positions (i, j) means
//   alpha_i = 2u_i + 1,       alpha_j = 2u_j + step(g),
//   beta_i  = 2u_i + step(g), beta_j  = 2u_j + 1,
// with every other exponent equal, where step(g) = 2 p^g (= 2^{g+1} at p = 2;
// at odd primes the exponents are the encoded ones, 2m + e).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "steenrod/arith.hpp"
#include "steenrod/bv_action.hpp"
#include "steenrod/error.hpp"
#include "steenrod/poly.hpp"
#include "steenrod/span.hpp"

namespace steenrod {

struct ExchangeWitness {
  int g = 0;
  std::size_t i = 0;  ///< 1-based position where alpha has the odd exponent
  std::size_t j = 0;  ///< 1-based position where beta has the odd exponent
  Monomial alpha;
  Monomial beta;
};

inline std::uint64_t exchange_step(int g, std::uint32_t prime) {
  return 2U * static_cast<std::uint64_t>(ipow(prime, g));
}

/// The first (i, j) in lexicographic order giving a g-exchange for alpha with beta.
inline std::optional<ExchangeWitness> is_g_exchange(const Monomial& alpha, const Monomial& beta, int g,
                                                    std::uint32_t prime = 2) {
  if (alpha.rank() != beta.rank()) throw PreconditionError("is_g_exchange: monomials of different rank");
  if (alpha.degree() != beta.degree()) throw PreconditionError("is_g_exchange: monomials of different degree");
  if (g < 0) throw PreconditionError("is_g_exchange: negative g");
  if (alpha.summand != beta.summand) return std::nullopt;
  std::vector<std::size_t> differ;
  for (std::size_t k = 0; k < alpha.rank(); ++k)
    if (alpha.exps[k] != beta.exps[k]) differ.push_back(k);
  if (differ.size() != 2) return std::nullopt;
  const std::uint64_t step = exchange_step(g, prime);
  auto matches = [&](std::size_t i, std::size_t j) {
    const std::uint64_t ai = alpha.exps[i], aj = alpha.exps[j], bi = beta.exps[i], bj = beta.exps[j];
    return ai % 2 == 1 && bj % 2 == 1 && bi == ai - 1 + step && aj == bj - 1 + step;
  };
  for (auto [i, j] : {std::pair{differ[0], differ[1]}, std::pair{differ[1], differ[0]}})
    if (matches(i, j)) return ExchangeWitness{g, i + 1, j + 1, alpha, beta};
  return std::nullopt;
}

/// Connected components of the graph whose edges are m-exchanges, l <= m <= s.
/// Components are sorted internally and ordered by their smallest member.
inline std::vector<std::vector<Monomial>> chain_components(std::vector<Monomial> monomials, int l, int s,
                                                           std::uint32_t prime = 2) {
  if (l > s) throw PreconditionError("chain_components: l > s");
  std::sort(monomials.begin(), monomials.end());
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  const std::size_t n = monomials.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (int m = l; m <= s && monomials[a].degree() == monomials[b].degree(); ++m)
        if (is_g_exchange(monomials[a], monomials[b], m, prime)) {
          parent[find(a)] = find(b);
          break;
        }
  std::vector<std::vector<Monomial>> groups(n);
  for (std::size_t a = 0; a < n; ++a) groups[find(a)].push_back(monomials[a]);
  std::vector<std::vector<Monomial>> out;
  for (auto& g : groups)
    if (!g.empty()) out.push_back(std::move(g));
  std::sort(out.begin(), out.end());
  return out;
}

struct Support {
  std::vector<std::size_t> positions;  ///< 1-based, increasing
  std::vector<std::uint32_t> values;   ///< the common even exponent at each position
};

/// Maximal set of positions on which every member has one common even exponent.
inline Support compute_support(const std::vector<Monomial>& members) {
  if (members.empty()) throw PreconditionError("compute_support: empty set");
  Support out;
  for (std::size_t k = 0; k < members.front().rank(); ++k) {
    const std::uint32_t v = members.front().exps[k];
    if (v % 2 != 0) continue;
    if (std::all_of(members.begin(), members.end(), [&](const Monomial& m) { return m.exps.at(k) == v; })) {
      out.positions.push_back(k + 1);
      out.values.push_back(v);
    }
  }
  return out;
}

struct LSClass {
  int l = 0;
  int s = 0;
  std::vector<Monomial> members;
  Support support;

  std::size_t tau() const noexcept { return support.positions.size(); }
};

inline bool has_odd_exponent(const Monomial& m) {
  return std::any_of(m.exps.begin(), m.exps.end(), [](std::uint32_t e) { return e % 2 == 1; });
}

/// Checks the defining closure property of an (l,s)-class: every odd position
/// of every member has an m-exchange partner inside the class for each m in [l, s].
inline bool is_ls_class(const LSClass& c, std::uint32_t prime = 2) {
  for (const auto& a : c.members) {
    if (!has_odd_exponent(a)) return false;
    for (std::size_t i = 0; i < a.rank(); ++i) {
      if (a.exps[i] % 2 == 0) continue;
      for (int m = c.l; m <= c.s; ++m) {
        const bool found = std::any_of(c.members.begin(), c.members.end(), [&](const Monomial& b) {
          auto w = is_g_exchange(a, b, m, prime);
          return w && w->i == i + 1;
        });
        if (!found) return false;
      }
    }
  }
  return true;
}

/// (p,q)-classes of x read off from the annihilation Q_t x = 0, p <= t <= q.
inline std::vector<LSClass> find_ls_classes(const PolyElement& x, int p, int q) {
  if (p > q) throw PreconditionError("find_ls_classes: p > q");
  if (x.is_zero()) throw PreconditionError("find_ls_classes: zero element");
  for (int t = p; t <= q; ++t) {
    const PolyElement image = qts_apply(t, 0, x);
    if (!image.is_zero())
      throw PreconditionError("find_ls_classes: Q_" + std::to_string(t) + " x != 0 (surviving monomial " +
                              to_string(image.terms().front()) + ")");
  }
  std::vector<LSClass> out;
  for (auto& component : chain_components(x.terms(), p, q)) {
    if (std::none_of(component.begin(), component.end(), has_odd_exponent)) continue;
    LSClass c{p, q, std::move(component), {}};
    c.support = compute_support(c.members);
    out.push_back(std::move(c));
  }
  return out;
}

struct ClassBoundResult {
  bool holds = false;
  long lhs = 0;  ///< s - l + #T
  long rhs = 0;  ///< d - 2
  std::string diagnostic;
};

/// s - l + #T <= d - 2.
inline ClassBoundResult pr2_check(const LSClass& c, long d) {
  ClassBoundResult r;
  r.lhs = static_cast<long>(c.s) - c.l + static_cast<long>(c.tau());
  r.rhs = d - 2;
  r.holds = r.lhs <= r.rhs;
  r.diagnostic = "(l,s)=(" + std::to_string(c.l) + "," + std::to_string(c.s) + "), #T=" + std::to_string(c.tau()) +
                 ", d=" + std::to_string(d) + ": " + std::to_string(r.lhs) + (r.holds ? " <= " : " > ") +
                 std::to_string(r.rhs);
  return r;
}

struct VanishingRun {
  int s = 0;                   ///< Sq_0 level used for Q_t^s
  int t_max = 0;
  std::optional<int> first;    ///< p, if a nonempty run exists
  std::optional<int> last;     ///< q
  bool reaches_cap = false;    ///< the run ends at t_max, so it may continue beyond
  bool parity_degenerate = false;  ///< the Sq_0 root has no odd exponent

  int length() const noexcept { return first ? *last - *first + 1 : 0; }
};

namespace detail {

inline void fill_run(VanishingRun& run, const std::vector<bool>& vanishes) {
  int best_len = 0;
  for (int t = 0; t < static_cast<int>(vanishes.size());) {
    if (!vanishes[static_cast<std::size_t>(t)]) {
      ++t;
      continue;
    }
    int u = t;
    while (u + 1 < static_cast<int>(vanishes.size()) && vanishes[static_cast<std::size_t>(u + 1)]) ++u;
    if (u - t + 1 > best_len) {
      best_len = u - t + 1;
      run.first = t;
      run.last = u;
    }
    t = u + 1;
  }
  run.reaches_cap = run.last && *run.last == run.t_max;
}

}  // namespace detail

/// Longest run of consecutive t <= t_max with Q_t^s x = 0, s = sq0_level(x).
inline VanishingRun vanishing_run(const PolyElement& x, int t_max) {
  if (x.is_zero()) throw PreconditionError("vanishing_run: zero element");
  const int level = sq0_level(x);
  if (level == kInfiniteLevel) throw PreconditionError("vanishing_run: constant element");
  VanishingRun run;
  run.s = level;
  run.t_max = t_max;
  const PolyElement root = sq0_root(x, level);
  run.parity_degenerate = std::none_of(root.terms().begin(), root.terms().end(), has_odd_exponent);
  std::vector<bool> vanishes;
  for (int t = 0; t <= t_max; ++t) vanishes.push_back(qts_apply(t, level, x).is_zero());
  detail::fill_run(run, vanishes);
  return run;
}

enum class DivisibilityVerdict { Vacuous, Pass, Fail, Inconclusive };

inline const char* to_string(DivisibilityVerdict v) {
  switch (v) {
    case DivisibilityVerdict::Vacuous: return "vacuous";
    case DivisibilityVerdict::Pass: return "pass";
    case DivisibilityVerdict::Fail: return "fail";
    case DivisibilityVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct DivisibilityResult {
  bool gap_found = false;
  long gap_length = 0;     ///< l for the gap (|x|, |x|+l]
  std::optional<int> k;    ///< largest k >= d-2 with 2^k <= l
  int required_level = 0;  ///< k - d + 2
  int level = 0;           ///< sq0_level(x)
  DivisibilityVerdict verdict = DivisibilityVerdict::Vacuous;
};

/// A gap (|x|, |x|+l] in A_2 x with l >= 2^k, k >= d-2, forces x into Im(Sq_0^{k-d+2}).
inline DivisibilityResult co2_check(const PolyElement& x, long span_bound) {
  if (x.is_zero()) throw PreconditionError("co2_check: zero element");
  DivisibilityResult r;
  r.level = sq0_level(x);
  const long d = static_cast<long>(x.rank());
  const auto first = first_occupied_above(x, span_bound);
  if (!first) {
    r.verdict = DivisibilityVerdict::Inconclusive;
    return r;
  }
  r.gap_length = *first - x.degree() - 1;
  r.gap_found = r.gap_length >= 1;
  if (!r.gap_found) return r;
  const int k = std::bit_width(static_cast<std::uint64_t>(r.gap_length)) - 1;
  if (k < d - 2) return r;
  r.k = k;
  r.required_level = static_cast<int>(k - d + 2);
  r.verdict = r.level >= r.required_level ? DivisibilityVerdict::Pass : DivisibilityVerdict::Fail;
  return r;
}

}  // namespace steenrod
