#pragma once

// Self-contained verification suites. Each returns counts and the first few
// failure descriptions; the acceptance runner and `verify-suite` share them.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "steenrod/bv_action.hpp"
#include "steenrod/exchange.hpp"
#include "steenrod/milnor.hpp"
#include "steenrod/obstruct.hpp"
#include "steenrod/odd_p.hpp"
#include "steenrod/poly.hpp"
#include "steenrod/span.hpp"

namespace steenrod::suites {

struct SuiteOptions {
  std::uint64_t seed = 20240601;
  long class_bound_instances = 10000;
  long divisibility_instances = 200;
};

struct SuiteResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    ++failures;
    if (notes.size() < 5) notes.push_back(what);
  }
  bool passed() const noexcept { return failures == 0 && cases > 0; }
};

/// All exponent vectors of length d, entries <= max_exp, summing to degree.
inline std::vector<Monomial> monomials_of_degree(std::size_t d, long degree, std::uint32_t max_exp) {
  std::vector<Monomial> out;
  Monomial m;
  m.exps.assign(d, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i + 1 == d) {
      if (left <= static_cast<long>(max_exp)) {
        m.exps[i] = static_cast<std::uint32_t>(left);
        out.push_back(m);
      }
      return;
    }
    for (long e = 0; e <= std::min<long>(left, max_exp); ++e) {
      m.exps[i] = static_cast<std::uint32_t>(e);
      rec(i + 1, left - e);
    }
  };
  if (d > 0) rec(0, degree);
  return out;
}

namespace detail {

inline std::string str(const PolyElement& x) { return steenrod::to_string(x); }

// A uniformly random composition of `degree` into d parts.
inline Monomial random_monomial(std::size_t d, long degree, std::mt19937_64& rng) {
  Monomial m;
  m.exps.assign(d, 0);
  std::uniform_int_distribution<std::size_t> pos(0, d - 1);
  for (long i = 0; i < degree; ++i) ++m.exps[pos(rng)];
  return m;
}

inline PolyElement random_element(std::size_t d, long degree, int max_terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, max_terms);
  std::vector<Monomial> terms;
  for (int i = count(rng); i > 0; --i) terms.push_back(random_monomial(d, degree, rng));
  return PolyElement::from_terms(std::move(terms));
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline SuiteResult fixtures_suite(const SuiteOptions& = {}) {
  SuiteResult r{"milnor-fixtures", 0, 0, {}};
  const std::vector<std::tuple<int, int, std::string>> expected = {
      {1, 1, "Sq(0,2)"},
      {1, 2, "Sq(0,4) + Sq(3,3)"},
      {1, 3, "Sq(0,8) + Sq(3,7) + Sq(6,6)"},
      {2, 1, "Sq(0,0,2) + Sq(4,1,1) + Sq(7,0,1)"},
  };
  for (const auto& [t, s, want] : expected) {
    const std::string got = to_string(qts_milnor(t, s));
    r.check(got == want, "Q_" + std::to_string(t) + "^" + std::to_string(s) + " = " + got + ", expected " + want);
  }
  return r;
}

inline SuiteResult primitives_suite(const SuiteOptions& = {}) {
  SuiteResult r{"milnor-primitives", 0, 0, {}};
  for (int t = 0; t <= 4; ++t) {
    const OperationSum got = qts_milnor(t, 0);
    const OperationSum want(MilnorElement::single(static_cast<std::size_t>(t) + 1, 1));
    r.check(got == want, "Q_" + std::to_string(t) + " = " + to_string(got));
  }
  return r;
}

/// Commutation with Sq_0^s, squares, pairwise commutation, the derivation law,
/// and the closed form on F_2[u].
inline SuiteResult qts_identities_suite(const SuiteOptions& = {}) {
  SuiteResult r{"qts-identities", 0, 0, {}};
  for (std::size_t d = 1; d <= 2; ++d)
    for (long n = 1; n <= 16; ++n)
      for (const auto& mono : monomials_of_degree(d, n, 16)) {
        const PolyElement x(mono);
        for (int s = 0; s <= 2; ++s) {
          const PolyElement xs = sq0_power(x, s);
          for (int t = 0; t <= 3; ++t) {
            for (int rr = 0; rr <= 2; ++rr)
              r.check(qts_apply(t, s + rr, xs) == sq0_power(qts_apply(t, rr, x), s),
                      "Q_t^{s+r} Sq_0^s != Sq_0^s Q_t^r on " + detail::str(x));
            const PolyElement qt = qts_apply(t, s, xs);
            r.check(qts_apply(t, s, qt).is_zero(), "(Q_t^s)^2 != 0 on " + detail::str(xs));
            for (int u = t + 1; u <= 3; ++u)
              r.check(qts_apply(u, s, qt) == qts_apply(t, s, qts_apply(u, s, xs)),
                      "Q_t^s and Q_u^s do not commute on " + detail::str(xs));
          }
        }
      }
  // derivation law on products of Sq_0^s images
  for (long a = 1; a <= 8; ++a)
    for (long b = 1; b <= 8; ++b)
      for (int s = 0; s <= 2; ++s) {
        const PolyElement x = sq0_power(monomial({static_cast<std::uint32_t>(a)}), s);
        const PolyElement y = sq0_power(monomial({static_cast<std::uint32_t>(b)}), s);
        for (int t = 0; t <= 3; ++t)
          r.check(qts_apply(t, s, tensor(x, y)) == tensor(qts_apply(t, s, x), y) + tensor(x, qts_apply(t, s, y)),
                  "derivation law fails on " + detail::str(x) + " (x) " + detail::str(y));
      }
  // closed form: Q_t^s Sq_0^s u^{2l+1} = Sq_0^s u^{2l+2^{t+1}}, Q_t^s Sq_0^s u^{2l} = 0
  for (int s = 0; s <= 3; ++s)
    for (int t = 0; t <= 3; ++t)
      for (std::uint32_t l = 0; l <= 8; ++l) {
        const PolyElement odd_in = sq0_power(monomial({2 * l + 1}), s);
        const PolyElement odd_out = sq0_power(monomial({2 * l + (2U << t)}), s);
        r.check(qts_apply(t, s, odd_in) == odd_out, "closed form fails on Sq_0^s u^(2l+1), l=" + std::to_string(l));
        r.check(qts_apply(t, s, sq0_power(monomial({2 * l}), s)).is_zero(),
                "Q_t^s Sq_0^s u^(2l) != 0, l=" + std::to_string(l));
      }
  return r;
}

/// Random elements killed by Q_p..Q_q: every class read off satisfies s - l + #T <= d - 2.
inline SuiteResult class_bound_suite(const SuiteOptions& opts = {}) {
  SuiteResult r{"class-bound", 0, 0, {}};
  std::mt19937_64 rng(opts.seed);
  long instances = 0;
  while (instances < opts.class_bound_instances) {
    const std::size_t d = 1 + rng() % 4;
    const int p = static_cast<int>(rng() % 4);
    const int q = p + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(4 - p, static_cast<int>(d))));
    const long ydeg = 1 + static_cast<long>(rng() % 10);
    PolyElement x = detail::random_element(d, ydeg, 3, rng);
    for (int t = p; t <= q && !x.is_zero(); ++t) x = qts_apply(t, 0, x);
    if (x.is_zero()) continue;
    if (rng() % 2 == 0 && x.degree() % 2 == 0)
      x += sq0_power(detail::random_element(d, x.degree() / 2, 3, rng), 1);
    if (x.is_zero()) continue;
    ++instances;
    std::vector<bool> vanish;
    for (int t = 0; t <= 3; ++t) vanish.push_back(qts_apply(t, 0, x).is_zero());
    for (int l = 0; l <= 3; ++l)
      for (int s = l; s <= 3 && vanish[static_cast<std::size_t>(s)]; ++s) {
        if (!vanish[static_cast<std::size_t>(l)]) break;
        for (const auto& c : find_ls_classes(x, l, s)) {
          const auto res = pr2_check(c, static_cast<long>(d));
          r.check(res.holds, "x=" + detail::str(x) + ": " + res.diagnostic);
          r.check(is_ls_class(c), "x=" + detail::str(x) + ": component is not closed under exchanges");
        }
      }
  }
  r.notes.insert(r.notes.begin(), std::to_string(instances) + " instances");
  return r;
}

/// Exhaustive vanishing-run bound q - p <= d - 2 at Sq_0 level 0.
inline SuiteResult vanishing_run_suite(const SuiteOptions& = {}) {
  SuiteResult r{"vanishing-run", 0, 0, {}};
  constexpr int kTMax = 5;
  long elements = 0;
  for (std::size_t d = 1; d <= 3; ++d) {
    for (long n = 1; n <= static_cast<long>(9 * d); ++n) {
      const auto monos = monomials_of_degree(d, n, 9);
      std::vector<std::vector<PolyElement>> images(monos.size());
      for (std::size_t i = 0; i < monos.size(); ++i)
        for (int t = 0; t <= kTMax; ++t) images[i].push_back(qts_apply(t, 0, PolyElement(monos[i])));
      const auto has_odd = [&](std::size_t i) { return has_odd_exponent(monos[i]); };
      const std::size_t m = monos.size();
      auto examine = [&](const std::vector<std::size_t>& idx) {
        if (std::none_of(idx.begin(), idx.end(), has_odd)) return;  // level >= 1
        ++elements;
        std::vector<bool> vanish;
        for (int t = 0; t <= kTMax; ++t) {
          PolyElement sum;
          for (auto i : idx) sum += images[i][static_cast<std::size_t>(t)];
          vanish.push_back(sum.is_zero());
        }
        VanishingRun run;
        run.t_max = kTMax;
        steenrod::detail::fill_run(run, vanish);
        const bool ok = run.length() == 0 || run.length() - 1 <= static_cast<long>(d) - 2;
        if (!ok || elements % 997 == 0) {
          std::vector<Monomial> terms;
          for (auto i : idx) terms.push_back(monos[i]);
          const PolyElement x = PolyElement::from_terms(terms);
          r.check(ok, "run [" + std::to_string(*run.first) + "," + std::to_string(*run.last) + "] on " + detail::str(x));
          const VanishingRun api = vanishing_run(x, kTMax);
          r.check(api.first == run.first && api.last == run.last, "vanishing_run disagrees on " + detail::str(x));
        } else {
          ++r.cases;
        }
      };
      for (std::size_t a = 0; a < m; ++a) {
        examine({a});
        for (std::size_t b = a + 1; b < m; ++b) {
          examine({a, b});
          for (std::size_t c = b + 1; c < m; ++c) examine({a, b, c});
        }
      }
    }
  }
  r.notes.insert(r.notes.begin(), std::to_string(elements) + " elements");
  return r;
}

/// Gaps above |x| in A x force Sq_0-divisibility.
inline SuiteResult divisibility_suite(const SuiteOptions& opts = {}) {
  SuiteResult r{"divisibility", 0, 0, {}};
  std::mt19937_64 rng(opts.seed ^ 0xC02ULL);
  long triggered = 0;
  for (long i = 0; i < opts.divisibility_instances; ++i) {
    const std::size_t d = 1 + rng() % 3;
    const long deg = 1 + static_cast<long>(rng() % 8);
    const int s = static_cast<int>(rng() % 5);
    const PolyElement x = sq0_power(detail::random_element(d, deg, 3, rng), s);
    if (x.is_zero()) {
      --i;
      continue;
    }
    const auto res = co2_check(x, 512);
    if (res.verdict == DivisibilityVerdict::Pass || res.verdict == DivisibilityVerdict::Fail) ++triggered;
    r.check(res.verdict != DivisibilityVerdict::Fail,
            "x=" + detail::str(x) + ": gap " + std::to_string(res.gap_length) + " needs level " +
                std::to_string(res.required_level) + ", has " + std::to_string(res.level));
  }
  r.notes.insert(r.notes.begin(), std::to_string(triggered) + " triggered verdicts");
  return r;
}

inline ModuleDescription<PolyElement> hopf_span(long bound) {
  ModuleDescription<PolyElement> m;
  m.degree_bound = bound;
  m.layers = {{0, {monomial({1})}}};
  return m;
}

/// Generators u^{2^k - 1}: the span is all of F_2[u] in positive degrees.
inline ModuleDescription<PolyElement> full_polynomial(long bound) {
  ModuleDescription<PolyElement> m;
  m.degree_bound = bound;
  std::vector<PolyElement> gens;
  for (std::uint32_t k = 1; k <= bound; k = 2 * k + 1) gens.push_back(monomial({k}));
  m.layers = {{0, gens}};
  return m;
}

inline ModuleDescription<PolyElement> two_layers(long m2, long bound) {
  ModuleDescription<PolyElement> m;
  m.kind = ModuleKind::Filtration;
  m.degree_bound = bound;
  m.layers = {{0, {monomial({1})}}, {m2, {monomial({1})}}};
  return m;
}

inline SuiteResult hopf_suite(const SuiteOptions& = {}) {
  SuiteResult r{"hopf", 0, 0, {}};
  const auto mod = hopf_span(300);
  const auto gaps = gap_scan(mod);
  r.check(gaps.occupied == std::vector<long>{1, 2, 4, 8, 16, 32, 64, 128, 256}, "occupied set is not {2^k : k <= 8}");
  const auto v = verdict(mod);
  r.check(v.outcome == Outcome::NotRealizable, "verdict is not NotRealizable: " + v.reason);
  if (v.certificate) {
    r.check(v.certificate->threshold == 32, "threshold " + std::to_string(v.certificate->threshold));
    r.check(v.certificate->gap == Gap{64, 63}, "gap (" + std::to_string(v.certificate->gap.start) + ",...]");
    r.check(!revalidate(*v.certificate), "certificate does not revalidate");
  }
  return r;
}

inline SuiteResult negative_control_suite(const SuiteOptions& = {}) {
  SuiteResult r{"negative-control", 0, 0, {}};
  const auto mod = full_polynomial(50);
  const auto gaps = gap_scan(mod);
  r.check(gaps.occupied.size() == 50 && gaps.gaps.empty(), "span of F_2[u] is not dense in degrees 1..50");
  const auto v = verdict(mod);
  r.check(v.outcome == Outcome::Inconclusive, "verdict is not Inconclusive");
  r.check(v.reason == "no qualifying gap", "reason: " + v.reason);
  return r;
}

inline SuiteResult filtration_suite(const SuiteOptions& = {}) {
  SuiteResult r{"filtration", 0, 0, {}};
  const auto mod = two_layers(3, 600);
  r.check(condition1_check({0, 3}).holds(), "Condition 1 fails on [0,3]");
  const auto v = verdict(mod);
  r.check(v.outcome == Outcome::NotRealizable, "verdict is not NotRealizable: " + v.reason);
  if (v.certificate) {
    r.check(v.certificate->threshold == 128, "threshold " + std::to_string(v.certificate->threshold));
    r.check(v.certificate->gap == Gap{259, 252}, "gap start " + std::to_string(v.certificate->gap.start));
    r.check(!revalidate(*v.certificate), "certificate does not revalidate");
  }
  const auto flipped = verdict(two_layers(1, 600));
  r.check(flipped.outcome == Outcome::Inconclusive, "layers (0,1) not Inconclusive");
  r.check(flipped.reason == "Condition 1 violated: difference 1", "reason: " + flipped.reason);
  return r;
}

inline FiniteModuleTable two_class_table(std::uint64_t op, long low_degree) {
  FiniteModuleTable t;
  t.labels = {"a", "b"};
  t.degrees = {low_degree, low_degree + static_cast<long>(op)};
  t.ops[{OpKey::Kind::Sq, op}][0] = {{1, 1}};
  return t;
}

inline SuiteResult adams_suite(const SuiteOptions& = {}) {
  SuiteResult r{"adams", 0, 0, {}};
  const auto v16 = adams_check(two_class_table(16, 20));
  r.check(v16.size() == 1 && v16.front().k == 4, "Sq^16 table: expected exactly one violation at k=4");
  r.check(adams_check(two_class_table(8, 20)).empty(), "Sq^8 table: unexpected violation");
  r.check(adams_check(FiniteModuleTable{}).empty(), "empty table: unexpected violation");
  return r;
}

/// Commutation identities, the derivation law, Q-squares and commutation,
/// vanishing runs and Condition 2 at odd primes.
inline SuiteResult odd_suite(const SuiteOptions& = {}) {
  using odd::OddElement;
  SuiteResult r{"odd-prime", 0, 0, {}};
  auto str = [](const OddElement& x) { return odd::to_string(x); };
  for (std::uint32_t p : {3U, 5U})
    for (std::size_t d = 1; d <= 2; ++d)
      for (long n = 1; n <= 60; ++n)
        for (const auto& mono : monomials_of_degree(d, n, 60)) {
          const OddElement x(p, mono);
          const OddElement px = odd::p0_apply(x);
          for (std::uint64_t k = 1; 2 * static_cast<long>(k) <= n; ++k)
            r.check(odd::apply_p(p * k, px) == odd::p0_apply(odd::apply_p(k, x)), "P^{pn} P_0 != P_0 P^n on " + str(x));
          if (odd::exterior_count(mono) <= 1)
            r.check(odd::apply_p(1, px) == odd::p0_apply(odd::apply_beta(x)), "P^1 P_0 != P_0 beta on " + str(x));
        }
  const std::uint32_t p = 3;
  // P^{p^s} is a derivation on Im(P_0^{s+1})
  for (int s = 0; s <= 1; ++s)
    for (std::uint32_t a = 1; a <= 20; ++a)
      for (std::uint32_t b = 1; b <= 20; ++b) {
        const OddElement x = odd::p0_power(OddElement(p, Monomial{1, {a}}), s + 1);
        const OddElement y = odd::p0_power(OddElement(p, Monomial{1, {b}}), s + 1);
        if (x.degree() + y.degree() > 60) continue;
        const auto k = static_cast<std::uint64_t>(ipow(p, s));
        r.check(odd::apply_p(k, odd::tensor(x, y)) ==
                    odd::tensor(odd::apply_p(k, x), y) + odd::tensor(x, odd::apply_p(k, y)),
                "P^{p^s} is not a derivation on " + str(x) + " (x) " + str(y));
      }
  // (Q_t^s)^2 = 0 and (graded) commutation on Im(P_0^s)
  for (int s = 0; s <= 1; ++s)
    for (std::size_t d = 1; d <= 2; ++d)
      for (long n = 1; n <= 60; ++n)
        for (const auto& mono : monomials_of_degree(d, n, 60)) {
          if (s > 0 && odd::exterior_count(mono) > 1) continue;  // P_0 kills these
          const OddElement x = odd::p0_power(OddElement(p, mono), s);
          if (x.degree() > 60) continue;
          for (int t = 0; t <= 2; ++t) {
            const OddElement qt = odd::qts_apply_odd(t, s, x);
            r.check(odd::qts_apply_odd(t, s, qt).is_zero(), "(Q_t^s)^2 != 0 on " + str(x));
            for (int u = t + 1; u <= 2; ++u) {
              const OddElement lhs = odd::qts_apply_odd(u, s, qt);
              OddElement rhs = odd::qts_apply_odd(t, s, odd::qts_apply_odd(u, s, x));
              if (s == 0) rhs = rhs.scaled(p - 1);  // odd-degree operations anticommute
              r.check(lhs == rhs, "Q_t^s and Q_u^s do not commute on " + str(x));
            }
          }
        }
  // run bound, exhaustive at d = 2, encoded exponents <= 13, up to 3 monomials
  for (long n = 1; n <= 26; ++n) {
    const auto monos = monomials_of_degree(2, n, 13);
    const std::size_t m = monos.size();
    auto examine = [&](std::vector<odd::Term> terms) {
      const OddElement x = OddElement::from_terms(p, std::move(terms));
      if (x.is_zero()) return;
      const auto rep = odd::le5_run_check(x, 3);
      r.check(rep.bound_holds, "run of length " + std::to_string(rep.run.length()) + " on " + str(x));
    };
    for (std::size_t a = 0; a < m; ++a) {
      examine({{monos[a], 1}});
      for (std::size_t b = a + 1; b < m; ++b)
        for (std::uint32_t cb = 1; cb < p; ++cb) {
          examine({{monos[a], 1}, {monos[b], cb}});
          for (std::size_t c = b + 1; c < m; ++c)
            for (std::uint32_t cc = 1; cc < p; ++cc) examine({{monos[a], 1}, {monos[b], cb}, {monos[c], cc}});
        }
    }
  }
  r.check(!cond2_check({0, 4}, 3).holds(), "Condition 2 holds on [0,4]");
  r.check(cond2_check({0, 5}, 3).holds(), "Condition 2 fails on [0,5]");
  return r;
}

/// The action of a Milnor product agrees with the composed action, via the admissible basis.
inline SuiteResult milnor_action_suite(const SuiteOptions& = {}) {
  SuiteResult r{"milnor-action", 0, 0, {}};
  constexpr long kMaxDegree = 16;
  const std::vector<PolyElement> samples = {
      monomial({1, 1, 1, 1, 1, 1}), monomial({1, 2, 0, 3, 1, 0}), monomial({3, 0, 1, 0, 2, 1}),
      monomial({0, 0, 0, 0, 0, 5}), monomial({3, 3, 3, 3, 3, 1}), monomial({7, 5, 3, 1, 1, 1}),
      monomial({1, 3, 5, 7, 2, 1}), monomial({15, 1, 1, 1, 1, 1})};
  std::map<MilnorElement, AdmissibleSum> expansion;
  std::vector<std::vector<MilnorElement>> basis(kMaxDegree + 1);
  for (long n = 1; n <= kMaxDegree; ++n) {
    basis[static_cast<std::size_t>(n)] = milnor_basis(n);
    for (const auto& e : basis[static_cast<std::size_t>(n)]) expansion.emplace(e, milnor_to_admissible(e));
  }
  auto act = [&](const OperationSum& op, const PolyElement& x) {
    PolyElement out;
    for (const auto& term : op.terms()) out += apply_admissible(expansion.at(term), x);
    return out;
  };
  // every basis element must act nontrivially on some sample, or a wrong product could go unseen
  for (long n = 1; n <= kMaxDegree; ++n)
    for (const auto& e : basis[static_cast<std::size_t>(n)])
      r.check(std::any_of(samples.begin(), samples.end(),
                          [&](const PolyElement& x) { return !apply_admissible(expansion.at(e), x).is_zero(); }),
              to_string(e) + " acts as zero on every sample");
  for (const auto& x : samples) {
    std::map<MilnorElement, PolyElement> first;
    for (long nb = 1; nb < kMaxDegree; ++nb)
      for (const auto& b : basis[static_cast<std::size_t>(nb)])
        first.emplace(b, apply_admissible(expansion.at(b), x));
    for (long na = 1; na < kMaxDegree; ++na)
      for (long nb = 1; na + nb <= kMaxDegree; ++nb)
        for (const auto& a : basis[static_cast<std::size_t>(na)])
          for (const auto& b : basis[static_cast<std::size_t>(nb)]) {
            const OperationSum ab = milnor_multiply(a, b);
            r.check(ab.is_zero() || ab.degree() == na + nb, "degree of " + to_string(a) + to_string(b));
            r.check(act(ab, x) == apply_admissible(expansion.at(a), first.at(b)),
                    to_string(a) + " * " + to_string(b) + " acts wrongly on " + detail::str(x));
          }
  }
  return r;
}

using SuiteFn = SuiteResult (*)(const SuiteOptions&);

inline const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> all = {
      {"milnor-fixtures", fixtures_suite},
      {"milnor-primitives", primitives_suite},
      {"qts-identities", qts_identities_suite},
      {"class-bound", class_bound_suite},
      {"vanishing-run", vanishing_run_suite},
      {"divisibility", divisibility_suite},
      {"hopf", hopf_suite},
      {"negative-control", negative_control_suite},
      {"filtration", filtration_suite},
      {"adams", adams_suite},
      {"odd-prime", odd_suite},
      {"milnor-action", milnor_action_suite},
  };
  return all;
}

}  // namespace steenrod::suites
