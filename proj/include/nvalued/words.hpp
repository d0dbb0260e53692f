#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nvalued {

// Free product of `factors` copies of Z/order. Generators are 0..factors-1,
// rendered as letters a, b, c, ... in text form.
struct GroupSpec {
  int factors;  // number of free factors, in [2, 26]
  int order;    // order of each cyclic factor, in [2, 255]

  GroupSpec(int factors_, int order_);

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

// Maximal block gen^exp of a reduced word; exp stays in [1, order-1].
struct Syllable {
  std::uint16_t gen;
  std::uint16_t exp;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// Reduced word: adjacent syllables use distinct generators and every
// exponent is nonzero mod the factor order. The empty word is the identity.
// Ordering is lexicographic on the expanded letter sequence (a < b < ...),
// with a proper prefix smaller than its extensions.
class NormalWord {
public:
  NormalWord() = default;
  explicit NormalWord(std::vector<Syllable> syllables)
      : syllables_(std::move(syllables)) {}

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  std::size_t syllable_count() const { return syllables_.size(); }

  std::size_t letter_length() const {
    std::size_t total = 0;
    for (const Syllable& s : syllables_) total += s.exp;
    return total;
  }

  friend bool operator==(const NormalWord&, const NormalWord&) = default;
  std::strong_ordering operator<=>(const NormalWord& other) const;

private:
  std::vector<Syllable> syllables_;
};

// Orbit of a word under the generator-cycling automorphism, held by its
// canonical representative (the unique shift starting with generator 0).
class OrbitClass {
public:
  OrbitClass() = default;  // identity class

  const NormalWord& rep() const { return rep_; }
  bool is_identity() const { return rep_.empty(); }
  std::size_t letter_length() const { return rep_.letter_length(); }

  friend bool operator==(const OrbitClass&, const OrbitClass&) = default;
  auto operator<=>(const OrbitClass&) const = default;

private:
  friend OrbitClass canonical(const NormalWord&, const GroupSpec&);
  explicit OrbitClass(NormalWord rep) : rep_(std::move(rep)) {}

  NormalWord rep_;
};

// Merge-and-cancel reduction of an arbitrary syllable sequence. Exponents
// may be any integers; zero blocks vanish and adjacent equal-generator
// blocks merge mod the factor order, cascading.
NormalWord reduce(const std::vector<std::pair<int, long long>>& raw,
                  const GroupSpec& spec);

// Product of two reduced words (cancellation can only cascade at the seam).
NormalWord concat(const NormalWord& lhs, const NormalWord& rhs,
                  const GroupSpec& spec);

// Generator-cycling automorphism: every generator index shifted by +shift
// mod the number of factors, exponents unchanged.
NormalWord apply_phi(const NormalWord& w, int shift, const GroupSpec& spec);

// Inverse word: syllables reversed, exponents negated mod the factor order.
NormalWord invert(const NormalWord& w, const GroupSpec& spec);

// The unique automorphism image whose first syllable uses generator 0.
OrbitClass canonical(const NormalWord& w, const GroupSpec& spec);

// Expanded letter form: a^2 b -> "aab"; the identity renders as "".
std::string render(const NormalWord& w);
std::string render(const OrbitClass& c);

// Parses the expanded letter form (and reduces it).
NormalWord parse_word(std::string_view text, const GroupSpec& spec);

// All normal words of the given letter length, in lexicographic order of the
// expanded letter sequences; optionally only those starting with generator 0.
std::vector<NormalWord> enumerate_normal_words(const GroupSpec& spec,
                                               int length,
                                               bool first_gen_zero);

}  // namespace nvalued

template <>
struct std::hash<nvalued::NormalWord> {
  std::size_t operator()(const nvalued::NormalWord& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (const nvalued::Syllable& s : w.syllables()) {
      h ^= (static_cast<std::size_t>(s.gen) << 16) | s.exp;
      h *= 1099511628211ull;
    }
    return h;
  }
};

template <>
struct std::hash<nvalued::OrbitClass> {
  std::size_t operator()(const nvalued::OrbitClass& c) const noexcept {
    return std::hash<nvalued::NormalWord>{}(c.rep());
  }
};
