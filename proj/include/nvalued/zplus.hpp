#pragma once

#include <cstdint>

#include "nvalued/multiset.hpp"

namespace nvalued {

// 2-valued group on the nonnegative integers: x*y = [x+y, |x-y|],
// unit 0, inv(x) = x.
class ZPlusGroup {
public:
  using Element = std::uint64_t;

  int n() const { return 2; }
  Element unit() const { return 0; }
  Element inv(Element x) const { return x; }

  Multiset<Element> mul(Element x, Element y) const {
    return Multiset<Element>({x + y, x > y ? x - y : y - x});
  }
};

inline Multiset<std::uint64_t> zplus_mul(std::uint64_t x, std::uint64_t y) {
  return ZPlusGroup{}.mul(x, y);
}

}  // namespace nvalued
