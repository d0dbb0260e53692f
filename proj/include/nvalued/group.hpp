#pragma once

#include <concepts>
#include <cstddef>
#include <vector>

#include "nvalued/multiset.hpp"

namespace nvalued {

// Contract for an n-valued group: multiplication lands in n-element
// multisets over an opaque element universe. The axioms (associativity as
// n^2-multiset equality, absorbing unit, inverses hitting the unit) are
// checked by the functions below, never assumed.
template <typename G>
concept MultiValuedGroup =
    requires(const G& g, const typename G::Element& x, const typename G::Element& y) {
      typename G::Element;
      { g.n() } -> std::convertible_to<int>;
      { g.mul(x, y) } -> std::same_as<Multiset<typename G::Element>>;
      { g.unit() } -> std::same_as<typename G::Element>;
      { g.inv(x) } -> std::same_as<typename G::Element>;
    };

// The flattened n^2-multisets [x*(y*z)_i] and [(x*y)_i*z] must coincide.
template <MultiValuedGroup G>
bool check_associativity(const G& g, const typename G::Element& x,
                         const typename G::Element& y,
                         const typename G::Element& z) {
  using E = typename G::Element;
  const std::size_t nn = static_cast<std::size_t>(g.n()) * g.n();
  std::vector<E> left;
  std::vector<E> right;
  left.reserve(nn);
  right.reserve(nn);
  for (const E& w : g.mul(y, z)) {
    for (const E& v : g.mul(x, w)) left.push_back(v);
  }
  for (const E& w : g.mul(x, y)) {
    for (const E& v : g.mul(w, z)) right.push_back(v);
  }
  return Multiset<E>(std::move(left)) == Multiset<E>(std::move(right));
}

// e*x = x*e = [x, x, ..., x].
template <MultiValuedGroup G>
bool check_unit(const G& g, const typename G::Element& x) {
  const Multiset<typename G::Element> expected(
      std::vector<typename G::Element>(static_cast<std::size_t>(g.n()), x));
  return g.mul(g.unit(), x) == expected && g.mul(x, g.unit()) == expected;
}

// e occurs in inv(x)*x and in x*inv(x).
template <MultiValuedGroup G>
bool check_inverse(const G& g, const typename G::Element& x) {
  const typename G::Element e = g.unit();
  const typename G::Element xi = g.inv(x);
  return g.mul(xi, x).contains(e) && g.mul(x, xi).contains(e);
}

}  // namespace nvalued
