#include "nvalued/coset.hpp"

#include <cstdlib>
#include <stdexcept>

#include "nvalued/zplus.hpp"

namespace nvalued {

std::vector<OrbitClass> classes_of_length(const GroupSpec& spec, int length) {
  std::vector<OrbitClass> out;
  for (const NormalWord& w : enumerate_normal_words(spec, length, true)) {
    out.push_back(canonical(w, spec));
  }
  return out;
}

std::vector<OrbitClass> classes_up_to_length(const GroupSpec& spec,
                                             int max_length) {
  std::vector<OrbitClass> out;
  for (int len = 0; len <= max_length; ++len) {
    for (OrbitClass& c : classes_of_length(spec, len)) {
      out.push_back(std::move(c));
    }
  }
  return out;
}

bool zplus_isomorphism_check(int max_index) {
  if (max_index < 0) {
    throw std::invalid_argument("zplus_isomorphism_check: negative bound");
  }
  const GroupSpec spec(2, 2);
  const CosetGroup group(spec);

  // The unique class of letter length k: the alternating word ababab...
  std::vector<OrbitClass> by_length;
  by_length.reserve(2 * max_index + 1);
  for (int len = 0; len <= 2 * max_index; ++len) {
    std::vector<Syllable> syllables;
    for (int i = 0; i < len; ++i) {
      syllables.push_back({static_cast<std::uint16_t>(i % 2), 1});
    }
    by_length.push_back(canonical(NormalWord(std::move(syllables)), spec));
  }

  for (int k = 0; k <= max_index; ++k) {
    for (int l = 0; l <= max_index; ++l) {
      const Multiset<OrbitClass> got = group.mul(by_length[k], by_length[l]);
      const Multiset<OrbitClass> expected(
          {by_length[k + l], by_length[std::abs(k - l)]});
      if (got != expected) return false;
    }
  }
  return true;
}

}  // namespace nvalued
