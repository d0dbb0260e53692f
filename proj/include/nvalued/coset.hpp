#pragma once

#include <string_view>
#include <vector>

#include "nvalued/multiset.hpp"
#include "nvalued/words.hpp"

namespace nvalued {

// The s-valued coset group on orbit classes of the free product: the product
// of x and y is the multiset of classes of rep(x) * phi^j(rep(y)) over all
// powers j of the generator-cycling automorphism.
class CosetGroup {
public:
  using Element = OrbitClass;

  explicit CosetGroup(GroupSpec spec) : spec_(spec) {}

  int n() const { return spec_.factors; }
  const GroupSpec& spec() const { return spec_; }

  OrbitClass unit() const { return OrbitClass(); }

  OrbitClass inv(const OrbitClass& x) const {
    return canonical(invert(x.rep(), spec_), spec_);
  }

  Multiset<OrbitClass> mul(const OrbitClass& x, const OrbitClass& y) const {
    std::vector<OrbitClass> out;
    out.reserve(spec_.factors);
    for (int j = 0; j < spec_.factors; ++j) {
      out.push_back(
          canonical(concat(x.rep(), apply_phi(y.rep(), j, spec_), spec_), spec_));
    }
    return Multiset<OrbitClass>(std::move(out));
  }

  // Class of the first generator; the orbit is the full generator multiset.
  OrbitClass generator() const {
    return canonical(NormalWord({Syllable{0, 1}}), spec_);
  }

  OrbitClass element(std::string_view text) const {
    return canonical(parse_word(text, spec_), spec_);
  }

private:
  GroupSpec spec_;
};

// Classes of a fixed letter length (their canonical representatives are
// exactly the normal words starting with generator 0).
std::vector<OrbitClass> classes_of_length(const GroupSpec& spec, int length);
std::vector<OrbitClass> classes_up_to_length(const GroupSpec& spec,
                                             int max_length);

// Verifies that indexing classes of the two-involution coset group by letter
// length intertwines its product with x*y = [x+y, |x-y|] on the nonnegative
// integers, for all indices up to max_index.
bool zplus_isomorphism_check(int max_index);

}  // namespace nvalued
