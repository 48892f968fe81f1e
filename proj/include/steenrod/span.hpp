#pragma once

// Degree-wise closure of a set of homogeneous elements under a family of
// operations, with F_p elimination using monomials as coordinates.
//
// An Element type plugs in through three free functions found by ADL:
//   const Monomial& leading(const Element&)   largest monomial
//   Element normalized(Element)               scale so the leading coefficient is 1
//   void eliminate(Element& e, const Element& pivot)
//                                             cancel e's leading term against a
//                                             normalized pivot with the same leading monomial

#include <map>
#include <optional>
#include <vector>

#include "steenrod/bv_action.hpp"
#include "steenrod/error.hpp"
#include "steenrod/poly.hpp"

namespace steenrod {

inline const Monomial& leading(const PolyElement& x) { return x.leading(); }
inline PolyElement normalized(PolyElement x) { return x; }
inline void eliminate(PolyElement& x, const PolyElement& pivot) { x += pivot; }

/// Echelon basis of a subspace of one graded piece, pivots keyed by leading monomial.
template <class Element>
class EchelonSpace {
 public:
  /// Adds v if it is independent of the current basis; returns whether it was.
  bool insert(Element v) {
    while (!v.is_zero()) {
      auto it = pivots_.find(leading(v));
      if (it == pivots_.end()) {
        Element n = normalized(std::move(v));
        const Monomial key = leading(n);
        order_.push_back(key);
        pivots_.emplace(key, std::move(n));
        return true;
      }
      eliminate(v, it->second);
    }
    return false;
  }

  bool contains(Element v) const {
    while (!v.is_zero()) {
      auto it = pivots_.find(leading(v));
      if (it == pivots_.end()) return false;
      eliminate(v, it->second);
    }
    return true;
  }

  std::size_t dimension() const noexcept { return pivots_.size(); }

  /// Basis vectors in insertion order.
  std::vector<Element> basis() const {
    std::vector<Element> out;
    out.reserve(order_.size());
    for (const auto& key : order_) out.push_back(pivots_.at(key));
    return out;
  }

 private:
  std::map<Monomial, Element> pivots_;
  std::vector<Monomial> order_;
};

/// Per-degree bases of a graded subspace up to a degree bound.
template <class Element>
struct GradedSpan {
  long bound = 0;
  std::map<long, EchelonSpace<Element>> pieces;
  /// Set when the computation stopped at the first occupied degree above a threshold.
  bool stopped_early = false;

  std::size_t dimension(long degree) const {
    auto it = pieces.find(degree);
    return it == pieces.end() ? 0 : it->second.dimension();
  }

  std::vector<long> occupied() const {
    std::vector<long> out;
    for (const auto& [deg, space] : pieces)
      if (space.dimension() > 0) out.push_back(deg);
    return out;
  }
};

/// Closes `generators` under `images(v, max_degree)`, which must return the
/// images of v under the algebra generators with degree <= max_degree.
/// With `stop_above`, processing halts at the first occupied degree > stop_above.
template <class Element, class Images>
GradedSpan<Element> close_span(const std::vector<Element>& generators, long bound, Images&& images,
                               std::optional<long> stop_above = std::nullopt) {
  GradedSpan<Element> span;
  span.bound = bound;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (g.degree() > bound)
      throw PreconditionError("span: degree bound " + std::to_string(bound) + " below generator degree " +
                              std::to_string(g.degree()));
    span.pieces[g.degree()].insert(g);
  }
  // Everything landing in degree D comes from strictly lower degrees, so D is
  // complete once all lower degrees have been processed.
  for (auto it = span.pieces.begin(); it != span.pieces.end(); ++it) {
    const long degree = it->first;
    if (it->second.dimension() == 0) continue;
    if (stop_above && degree > *stop_above) {
      span.stopped_early = true;
      break;
    }
    for (const auto& v : it->second.basis())
      for (auto& w : images(v, bound))
        if (!w.is_zero()) span.pieces[w.degree()].insert(std::move(w));
  }
  if (span.stopped_early) {
    // drop partially built pieces above the first occupied degree
    const long first = [&] {
      for (const auto& [deg, space] : span.pieces)
        if (space.dimension() > 0 && deg > *stop_above) return deg;
      return bound + 1;
    }();
    for (auto it = span.pieces.upper_bound(first); it != span.pieces.end();) it = span.pieces.erase(it);
  }
  return span;
}

/// Images of v under Sq^{2^j}, 2^j <= |v|; these generate A_2 as an algebra.
inline std::vector<PolyElement> sq_generator_images(const PolyElement& v, long max_degree) {
  std::vector<PolyElement> out;
  for (long k = 1; k <= v.degree() && v.degree() + k <= max_degree; k <<= 1)
    out.push_back(apply_sq(static_cast<std::uint32_t>(k), v));
  return out;
}

/// The A_2-span of the generators in degrees <= bound.
inline GradedSpan<PolyElement> span_degrees(const std::vector<PolyElement>& generators, long bound) {
  return close_span(generators, bound, sq_generator_images);
}

/// Smallest occupied degree of A_2 x above |x| within the bound, if any.
inline std::optional<long> first_occupied_above(const PolyElement& x, long bound) {
  const auto span = close_span(std::vector<PolyElement>{x}, bound, sq_generator_images, x.degree());
  for (const auto& [deg, space] : span.pieces)
    if (deg > x.degree() && space.dimension() > 0) return deg;
  return std::nullopt;
}

}  // namespace steenrod
