#pragma once

// Gap scanning, type-T certificates, Conditions 1 and 2, the Hopf-invariant-one
// test on finite tables, and the resulting non-realizability verdicts.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "steenrod/arith.hpp"
#include "steenrod/error.hpp"
#include "steenrod/linalg.hpp"
#include "steenrod/odd_p.hpp"
#include "steenrod/poly.hpp"
#include "steenrod/span.hpp"

namespace steenrod {

enum class ModuleKind { Span, Filtration };

template <class Element>
struct Layer {
  long m = 0;
  std::vector<Element> generators;
};

/// A submodule of H*(BV_d)^{alpha}, or a filtered module whose layers are
/// suspensions Sigma^{m_i} R_{m_i} of such submodules. Degrees are unsuspended.
template <class Element>
struct ModuleDescription {
  std::uint32_t prime = 2;
  long d = 1;
  std::uint32_t alpha = 1;
  long suspension = 0;
  ModuleKind kind = ModuleKind::Span;
  std::vector<Layer<Element>> layers;  ///< Span kind: exactly one layer with m = 0
  long degree_bound = 0;

  void validate() const {
    if (!is_prime(prime)) throw InvalidInput("module: prime must be prime");
    if (d < 1) throw InvalidInput("module: d must be positive");
    if (alpha < 1) throw InvalidInput("module: alpha must be positive");
    if (degree_bound < 1) throw InvalidInput("module: degree_bound must be positive");
    if (layers.empty()) throw InvalidInput("module: no generators");
    if (kind == ModuleKind::Span && (layers.size() != 1 || layers.front().m != 0))
      throw InvalidInput("module: span kind takes a single generator list");
    for (std::size_t i = 0; i < layers.size(); ++i) {
      if (layers[i].m < 0) throw InvalidInput("module: layer index m must be non-negative");
      if (i > 0 && layers[i].m <= layers[i - 1].m) throw InvalidInput("module: layers must be strictly increasing in m");
      if (layers[i].generators.empty()) throw InvalidInput("module: empty layer");
      for (const auto& g : layers[i].generators) {
        if (g.is_zero()) throw InvalidInput("module: zero generator");
        if (static_cast<long>(g.rank()) != d) throw InvalidInput("module: generator rank differs from d");
        if (g.degree() < 1) throw InvalidInput("module: generator in degree 0, module not connected");
        if (g.degree() + layers[i].m > degree_bound)
          throw InvalidInput("module: generator lies above degree_bound");
        for (const auto& t : g.terms()) {
          const Monomial& mono = [&]() -> const Monomial& {
            if constexpr (std::is_same_v<Element, PolyElement>) return t;
            else return t.first;
          }();
          if (mono.summand > alpha) throw InvalidInput("module: summand index exceeds alpha");
        }
      }
    }
  }
};

inline std::vector<long> occupied_degrees(const std::vector<PolyElement>& gens, long bound) {
  return span_degrees(gens, bound).occupied();
}

inline std::vector<long> occupied_degrees(const std::vector<odd::OddElement>& gens, long bound) {
  return odd::span_degrees_odd(gens, bound).occupied();
}

struct Gap {
  long start = 0;   ///< s: occupied
  long length = 0;  ///< l: s+1 .. s+l empty, s+l+1 occupied
  friend bool operator==(const Gap&, const Gap&) = default;
};

struct GapReport {
  std::vector<long> occupied;  ///< suspended degrees
  std::vector<Gap> gaps;       ///< suspended starts
  bool bound_truncated = false;  ///< degrees after the last occupied one, up to the bound, are empty
};

namespace detail {

inline std::vector<Gap> gaps_of(const std::vector<long>& occupied) {
  std::vector<Gap> out;
  for (std::size_t i = 0; i + 1 < occupied.size(); ++i)
    if (occupied[i + 1] - occupied[i] >= 2) out.push_back({occupied[i], occupied[i + 1] - occupied[i] - 1});
  return out;
}

struct LayerScan {
  long m = 0;
  std::vector<long> own;  ///< occupied degrees of R_m (unshifted)
  bool infinite = false;
};

template <class Element>
std::vector<LayerScan> scan_layers(const ModuleDescription<Element>& mod) {
  std::vector<LayerScan> out;
  for (const auto& layer : mod.layers) {
    LayerScan s;
    s.m = layer.m;
    const long own_bound = mod.degree_bound - layer.m;
    s.own = occupied_degrees(layer.generators, own_bound);
    // Sq_0 (resp. P_0) multiplies degrees by p, so an infinite module has an
    // occupied degree in every window (B/p, B].
    s.infinite = std::any_of(s.own.begin(), s.own.end(),
                             [&](long n) { return n * static_cast<long>(mod.prime) > own_bound; });
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<long> union_occupied(const std::vector<LayerScan>& layers) {
  std::set<long> all;
  for (const auto& l : layers)
    for (long n : l.own) all.insert(n + l.m);
  return {all.begin(), all.end()};
}

}  // namespace detail

template <class Element>
GapReport gap_scan(const ModuleDescription<Element>& mod) {
  mod.validate();
  const auto occupied = detail::union_occupied(detail::scan_layers(mod));
  GapReport r;
  for (long n : occupied) r.occupied.push_back(n + mod.suspension);
  for (auto g : detail::gaps_of(occupied)) r.gaps.push_back({g.start + mod.suspension, g.length});
  r.bound_truncated = occupied.empty() || occupied.back() < mod.degree_bound;
  return r;
}

struct LayerRecord {
  long m = 0;
  bool infinite = false;
  std::vector<long> n;  ///< first J+1 occupied degrees of R_m (infinite layers only)
  friend bool operator==(const LayerRecord&, const LayerRecord&) = default;
};

struct ConditionTable {
  std::vector<long> forbidden;  ///< differences that may not occur
  std::vector<std::pair<long, long>> violations;  ///< (m_i, m_j), i < j, with m_j - m_i forbidden
  bool holds() const noexcept { return violations.empty(); }
};

/// Everything needed to recheck a type-T claim without recomputing the module.
struct Certificate {
  std::uint32_t prime = 2;
  long d = 1;
  long suspension = 0;
  long degree_bound = 0;
  long layer_count = 1;  ///< t
  int delta = 0;
  long j_max = 1;        ///< J: differences n_{j+1} - n_j for j = 1..J enter the threshold
  long base_threshold = 0;  ///< (m_t+1) 2^{d+4}, or 2(m_t+1)(p-1)p^{d+2} at odd p
  long threshold = 0;       ///< l*
  long start_floor = 0;     ///< min over infinite layers of m_i + n_{1,i}
  Gap gap;                  ///< unsuspended
  std::vector<LayerRecord> layers;
  std::vector<long> occupied;  ///< unsuspended, up to degree_bound
  std::optional<ConditionTable> condition;
};

struct TypeTResult {
  std::optional<Certificate> certificate;
  std::string reason;  ///< set when no certificate
};

/// Smallest delta with prime^delta >= t.
inline int delta_for(long t, std::uint32_t prime) {
  int delta = 0;
  while (ipow(prime, delta) < t) ++delta;
  return delta;
}

/// J = 1 + (d+delta-1) 2^{d-2} at p = 2, 1 + (d+delta)(p-1)^2 p^{d-2} at odd p, rounded up.
inline long j_max_for(long d, int delta, std::uint32_t prime) {
  if (prime == 2) return 1 + ceil_div((d + delta - 1) * ipow(2, static_cast<int>(d)), 4);
  const long p = prime;
  return 1 + ceil_div((d + delta) * (p - 1) * (p - 1) * ipow(p, static_cast<int>(d)), p * p);
}

inline long base_threshold_for(long d, long m_top, std::uint32_t prime) {
  if (prime == 2) return (m_top + 1) * ipow(2, static_cast<int>(d + 4));
  const long p = prime;
  return 2 * (m_top + 1) * (p - 1) * ipow(p, static_cast<int>(d + 2));
}

inline ConditionTable condition_table(const std::vector<long>& ms, std::vector<long> forbidden) {
  for (std::size_t i = 1; i < ms.size(); ++i)
    if (ms[i] <= ms[i - 1]) throw PreconditionError("condition check: layers must be strictly increasing");
  ConditionTable t;
  t.forbidden = std::move(forbidden);
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (std::find(t.forbidden.begin(), t.forbidden.end(), ms[j] - ms[i]) != t.forbidden.end())
        t.violations.emplace_back(ms[i], ms[j]);
  return t;
}

/// No difference m_j - m_i in {1, 2, 4, 8}.
inline ConditionTable condition1_check(const std::vector<long>& ms) { return condition_table(ms, {1, 2, 4, 8}); }

/// No difference m_j - m_i in {1, 2(p-1)}.
inline ConditionTable cond2_check(const std::vector<long>& ms, std::uint32_t prime) {
  if (prime == 2 || !is_prime(prime)) throw PreconditionError("cond2_check: prime must be odd");
  return condition_table(ms, {1, 2 * (static_cast<long>(prime) - 1)});
}

namespace detail {

template <class Element>
TypeTResult type_t_core(const ModuleDescription<Element>& mod) {
  mod.validate();
  const auto layers = scan_layers(mod);
  const auto occupied = union_occupied(layers);
  TypeTResult out;

  Certificate c;
  c.prime = mod.prime;
  c.d = mod.d;
  c.suspension = mod.suspension;
  c.degree_bound = mod.degree_bound;
  c.layer_count = static_cast<long>(layers.size());
  c.delta = delta_for(c.layer_count, mod.prime);
  c.j_max = j_max_for(mod.d, c.delta, mod.prime);
  c.base_threshold = base_threshold_for(mod.d, layers.back().m, mod.prime);
  c.threshold = c.base_threshold;
  c.occupied = occupied;

  bool any_infinite = false;
  bool short_sequence = false;
  std::optional<long> floor;
  for (const auto& l : layers) {
    LayerRecord rec{l.m, l.infinite, {}};
    if (l.infinite) {
      any_infinite = true;
      const auto need = static_cast<std::size_t>(c.j_max + 1);
      if (l.own.size() < need) short_sequence = true;
      rec.n.assign(l.own.begin(), l.own.begin() + static_cast<long>(std::min(need, l.own.size())));
      for (std::size_t j = 0; j + 1 < rec.n.size(); ++j) c.threshold = std::max(c.threshold, rec.n[j + 1] - rec.n[j]);
      const long f = l.m + rec.n.front();
      floor = floor ? std::min(*floor, f) : f;
    }
    c.layers.push_back(std::move(rec));
  }
  if (!any_infinite) {
    out.reason = "no infinite layer within bound";
    return out;
  }
  if (short_sequence) {
    out.reason = "bound truncation before qualifying gap";
    return out;
  }
  c.start_floor = *floor;
  for (const auto& g : gaps_of(occupied)) {
    if (g.start >= c.start_floor && g.length >= c.threshold) {
      c.gap = g;
      out.certificate = std::move(c);
      return out;
    }
  }
  const bool open_tail = occupied.back() < mod.degree_bound;
  out.reason = open_tail ? "bound truncation before qualifying gap" : "no qualifying gap";
  return out;
}

}  // namespace detail

/// Type-T certificate for a Span description at p = 2.
template <class Element>
TypeTResult type_t_check(const ModuleDescription<Element>& mod) {
  if (mod.kind != ModuleKind::Span) throw PreconditionError("type_t_check: span description expected");
  if (mod.prime != 2) throw PreconditionError("type_t_check: prime 2 expected");
  return detail::type_t_core(mod);
}

/// Type-T certificate for a filtered description at p = 2.
template <class Element>
TypeTResult type_t_filtration_check(const ModuleDescription<Element>& mod) {
  if (mod.kind != ModuleKind::Filtration) throw PreconditionError("type_t_filtration_check: filtration expected");
  if (mod.prime != 2) throw PreconditionError("type_t_filtration_check: prime 2 expected");
  return detail::type_t_core(mod);
}

/// Type-T certificate with the odd-prime thresholds, either kind.
template <class Element>
TypeTResult type_t_check_odd(const ModuleDescription<Element>& mod) {
  if (mod.prime == 2) throw PreconditionError("type_t_check_odd: odd prime expected");
  return detail::type_t_core(mod);
}

/// Rechecks every stored inequality of a certificate; returns the first failure, if any.
inline std::optional<std::string> revalidate(const Certificate& c) {
  if (c.layers.empty() || static_cast<long>(c.layers.size()) != c.layer_count) return "layer count mismatch";
  if (c.delta != delta_for(c.layer_count, c.prime)) return "delta is not minimal with p^delta >= t";
  if (c.j_max != j_max_for(c.d, c.delta, c.prime)) return "index range J does not match d and delta";
  if (c.base_threshold != base_threshold_for(c.d, c.layers.back().m, c.prime)) return "base threshold mismatch";
  long threshold = c.base_threshold;
  std::optional<long> floor;
  for (std::size_t i = 0; i < c.layers.size(); ++i) {
    const auto& l = c.layers[i];
    if (i > 0 && l.m <= c.layers[i - 1].m) return "layers not increasing";
    if (!l.infinite) continue;
    if (static_cast<long>(l.n.size()) != c.j_max + 1) return "degree sequence of wrong length";
    for (std::size_t j = 0; j + 1 < l.n.size(); ++j) {
      if (l.n[j + 1] <= l.n[j]) return "degree sequence not increasing";
      threshold = std::max(threshold, l.n[j + 1] - l.n[j]);
    }
    for (long n : l.n)
      if (!std::binary_search(c.occupied.begin(), c.occupied.end(), n + l.m)) return "sequence degree not occupied";
    floor = floor ? std::min(*floor, l.m + l.n.front()) : l.m + l.n.front();
  }
  if (!floor) return "no infinite layer";
  if (threshold != c.threshold) return "threshold mismatch";
  if (*floor != c.start_floor) return "gap floor mismatch";
  if (c.gap.start < c.start_floor) return "gap starts below the floor";
  if (c.gap.length < c.threshold) return "gap shorter than threshold";
  if (c.gap.start + c.gap.length + 1 > c.degree_bound) return "gap not closed within bound";
  if (!std::binary_search(c.occupied.begin(), c.occupied.end(), c.gap.start)) return "gap start not occupied";
  if (!std::binary_search(c.occupied.begin(), c.occupied.end(), c.gap.start + c.gap.length + 1))
    return "gap end not occupied";
  auto lo = std::upper_bound(c.occupied.begin(), c.occupied.end(), c.gap.start);
  if (*lo != c.gap.start + c.gap.length + 1) return "occupied degree inside gap";
  if (c.condition) {
    std::vector<long> ms;
    for (const auto& l : c.layers) ms.push_back(l.m);
    const auto redo = condition_table(ms, c.condition->forbidden);
    if (redo.violations != c.condition->violations || !redo.holds()) return "condition table mismatch";
  }
  return std::nullopt;
}

enum class Outcome { NotRealizable, Inconclusive };

struct Verdict {
  Outcome outcome = Outcome::Inconclusive;
  std::optional<Certificate> certificate;
  std::string reason;
};

namespace detail {

inline std::string condition_failure(const char* name, const ConditionTable& t) {
  const auto& [a, b] = t.violations.front();
  return std::string(name) + " violated: difference " + std::to_string(b - a);
}

}  // namespace detail

/// Non-realizability at p = 2. Inconclusive never means realizable.
template <class Element>
Verdict verdict(const ModuleDescription<Element>& mod) {
  if (mod.prime != 2) throw PreconditionError("verdict: prime 2 expected");
  Verdict v;
  std::optional<ConditionTable> cond;
  if (mod.kind == ModuleKind::Filtration) {
    std::vector<long> ms;
    for (const auto& l : mod.layers) ms.push_back(l.m);
    cond = condition1_check(ms);
    if (!cond->holds()) {
      v.reason = detail::condition_failure("Condition 1", *cond);
      return v;
    }
  }
  auto t = detail::type_t_core(mod);
  if (!t.certificate) {
    v.reason = t.reason;
    return v;
  }
  t.certificate->condition = cond;
  v.outcome = Outcome::NotRealizable;
  v.certificate = std::move(t.certificate);
  return v;
}

/// Non-realizability at an odd prime, with Condition 2 for filtered modules.
template <class Element>
Verdict verdict_odd(const ModuleDescription<Element>& mod) {
  if (mod.prime == 2) throw PreconditionError("verdict_odd: odd prime expected");
  Verdict v;
  std::optional<ConditionTable> cond;
  if (mod.kind == ModuleKind::Filtration) {
    std::vector<long> ms;
    for (const auto& l : mod.layers) ms.push_back(l.m);
    cond = cond2_check(ms, mod.prime);
    if (!cond->holds()) {
      v.reason = detail::condition_failure("Condition 2", *cond);
      return v;
    }
  }
  auto t = detail::type_t_core(mod);
  if (!t.certificate) {
    v.reason = t.reason;
    return v;
  }
  t.certificate->condition = cond;
  v.outcome = Outcome::NotRealizable;
  v.certificate = std::move(t.certificate);
  return v;
}

// ---------------------------------------------------------------------------
// Finite module tables

/// Sq^n (p = 2), P^n (odd p), or the Bockstein.
struct OpKey {
  enum class Kind { Sq, P, Beta } kind = Kind::Sq;
  std::uint64_t n = 0;
  friend auto operator<=>(const OpKey&, const OpKey&) = default;
};

inline long op_degree(const OpKey& op, std::uint32_t prime) {
  switch (op.kind) {
    case OpKey::Kind::Sq: return static_cast<long>(op.n);
    case OpKey::Kind::P: return 2 * static_cast<long>(op.n) * (static_cast<long>(prime) - 1);
    case OpKey::Kind::Beta: return 1;
  }
  return 0;
}

inline std::string to_string(const OpKey& op) {
  switch (op.kind) {
    case OpKey::Kind::Sq: return "Sq^" + std::to_string(op.n);
    case OpKey::Kind::P: return "P^" + std::to_string(op.n);
    case OpKey::Kind::Beta: return "beta";
  }
  return "?";
}

/// A finite graded F_p-module given by a labelled basis and sparse operation
/// matrices. Operations absent from the table act as zero.
struct FiniteModuleTable {
  using Image = std::vector<std::pair<std::size_t, std::uint32_t>>;  ///< (basis index, coefficient)

  std::uint32_t prime = 2;
  std::vector<std::string> labels;
  std::vector<long> degrees;
  std::map<OpKey, std::map<std::size_t, Image>> ops;

  std::size_t index_of(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw InvalidInput("table: unknown basis label '" + label + "'");
    return static_cast<std::size_t>(it - labels.begin());
  }

  void validate() const {
    if (!is_prime(prime)) throw InvalidInput("table: prime must be prime");
    if (labels.size() != degrees.size()) throw InvalidInput("table: label and degree lists differ in length");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw InvalidInput("table: duplicate basis label");
    for (const auto& [op, rows] : ops) {
      if ((op.kind == OpKey::Kind::Sq) != (prime == 2))
        throw InvalidInput("table: " + to_string(op) + " does not act at prime " + std::to_string(prime));
      const long shift = op_degree(op, prime);
      for (const auto& [src, image] : rows) {
        if (src >= labels.size()) throw InvalidInput("table: source index out of range");
        const long unstable_limit = op.kind == OpKey::Kind::P ? 2 * static_cast<long>(op.n) : shift;
        bool nonzero = false;
        for (const auto& [dst, c] : image) {
          if (dst >= labels.size()) throw InvalidInput("table: target index out of range");
          if (c % prime == 0) continue;
          nonzero = true;
          if (degrees[dst] != degrees[src] + shift)
            throw InvalidInput("table: " + to_string(op) + " " + labels[src] + " -> " + labels[dst] +
                               " has the wrong degree");
        }
        if (nonzero && op.kind != OpKey::Kind::Beta && degrees[src] < unstable_limit)
          throw InvalidInput("table: " + to_string(op) + " on " + labels[src] + " violates instability");
      }
    }
  }

  std::vector<std::size_t> basis_in(long degree) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < degrees.size(); ++i)
      if (degrees[i] == degree) out.push_back(i);
    return out;
  }

  /// Matrix of op from degree `from` (columns) to degree from + |op| (rows).
  FpMatrix matrix(const OpKey& op, long from) const {
    const auto src = basis_in(from);
    const auto dst = basis_in(from + op_degree(op, prime));
    FpMatrix m(dst.size(), src.size(), prime);
    auto it = ops.find(op);
    if (it == ops.end()) return m;
    for (std::size_t c = 0; c < src.size(); ++c) {
      auto row = it->second.find(src[c]);
      if (row == it->second.end()) continue;
      for (const auto& [target, coeff] : row->second) {
        const auto r = static_cast<std::size_t>(std::find(dst.begin(), dst.end(), target) - dst.begin());
        if (r < dst.size()) m.set(r, c, m(r, c) + coeff);
      }
    }
    return m;
  }
};

struct AdamsViolation {
  int k = 0;
  long degree = 0;  ///< degree of the witness x
  std::vector<std::pair<std::string, std::uint32_t>> witness;  ///< x as a combination of basis labels
  std::vector<std::pair<std::string, std::uint32_t>> image;    ///< the offending Sq^{2^k} x / P^{p^k} x
};

namespace detail {

inline std::vector<std::pair<std::string, std::uint32_t>> labelled(const FiniteModuleTable& t, long degree,
                                                                   const std::vector<std::uint32_t>& v) {
  std::vector<std::pair<std::string, std::uint32_t>> out;
  const auto basis = t.basis_in(degree);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.emplace_back(t.labels[basis[i]], v[i]);
  return out;
}

// For each degree n and each k >= k_min: x in the common kernel of `lower(k)`
// must map under `top(k)` into the sum of the images of `lower(k)`.
template <class Lower, class Top>
std::vector<AdamsViolation> adams_scan(const FiniteModuleTable& t, int k_min, Lower&& lower, Top&& top) {
  t.validate();
  std::vector<AdamsViolation> out;
  std::set<long> degrees(t.degrees.begin(), t.degrees.end());
  if (degrees.empty()) return out;
  const long span = *degrees.rbegin() - *degrees.begin();
  const std::uint32_t p = t.prime;
  for (long n : degrees) {
    const auto src = t.basis_in(n);
    for (int k = k_min;; ++k) {
      const OpKey top_op = top(k);
      const long shift = op_degree(top_op, p);
      if (shift > span) break;
      const long target_degree = n + shift;
      const auto target = t.basis_in(target_degree);
      if (target.empty()) continue;
      // common kernel of the lower operations, stacked
      std::vector<OpKey> lows = lower(k);
      std::vector<FpMatrix> blocks;
      std::size_t rows = 0;
      for (const auto& op : lows) {
        blocks.push_back(t.matrix(op, n));
        rows += blocks.back().rows();
      }
      FpMatrix stacked(rows, src.size(), p);
      std::size_t r0 = 0;
      for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
          for (std::size_t c = 0; c < b.cols(); ++c) stacked.set(r0 + r, c, b(r, c));
        r0 += b.rows();
      }
      const auto kernel = fp_kernel(stacked);
      if (kernel.empty()) continue;
      // sum of images of the lower operations landing in the target degree
      std::vector<std::vector<std::uint32_t>> images;
      for (const auto& op : lows) {
        const long from = target_degree - op_degree(op, p);
        const FpMatrix m = t.matrix(op, from);
        for (std::size_t c = 0; c < m.cols(); ++c) {
          std::vector<std::uint32_t> col(target.size());
          for (std::size_t r = 0; r < m.rows(); ++r) col[r] = m(r, c);
          images.push_back(std::move(col));
        }
      }
      const FpMatrix top_matrix = t.matrix(top_op, n);
      for (const auto& x : kernel) {
        const auto y = top_matrix.apply(x);
        if (!fp_in_span(images, y, p)) {
          out.push_back({k, n, labelled(t, n, x), labelled(t, target_degree, y)});
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace detail

/// Sq^{2^k} x in sum_{i<k} Im Sq^{2^i} whenever Sq^{2^i} x = 0 for all i < k, k >= 4.
/// Reports at most one witness per (degree, k).
inline std::vector<AdamsViolation> adams_check(const FiniteModuleTable& t) {
  if (t.prime != 2) throw PreconditionError("adams_check: prime 2 expected");
  auto lower = [](int k) {
    std::vector<OpKey> ops;
    for (int i = 0; i < k; ++i) ops.push_back({OpKey::Kind::Sq, std::uint64_t{1} << i});
    return ops;
  };
  auto top = [](int k) { return OpKey{OpKey::Kind::Sq, std::uint64_t{1} << k}; };
  return detail::adams_scan(t, 4, lower, top);
}

/// P^{p^k} x in sum_{i<k} Im P^{p^i} + Im beta whenever beta x = 0 and P^{p^i} x = 0 for i < k, k >= 1.
inline std::vector<AdamsViolation> adams_check_odd(const FiniteModuleTable& t) {
  if (t.prime == 2) throw PreconditionError("adams_check_odd: odd prime expected");
  const std::uint32_t p = t.prime;
  auto lower = [p](int k) {
    std::vector<OpKey> ops{{OpKey::Kind::Beta, 0}};
    for (int i = 0; i < k; ++i) ops.push_back({OpKey::Kind::P, static_cast<std::uint64_t>(ipow(p, i))});
    return ops;
  };
  auto top = [p](int k) { return OpKey{OpKey::Kind::P, static_cast<std::uint64_t>(ipow(p, k))}; };
  return detail::adams_scan(t, 1, lower, top);
}

}  // namespace steenrod
