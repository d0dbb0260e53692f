#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nvalued {

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Monoid homomorphism on words, given by the images of an ordered alphabet.
class Morphism {
public:
  Morphism(std::string alphabet, std::vector<std::string> images);

  static Morphism fibonacci();   // a -> ab, b -> a
  static Morphism thue_morse();  // a -> ab, b -> ba

  const std::string& alphabet() const { return alphabet_; }
  const std::string& image(char letter) const;

  std::string apply(std::string_view word) const;

  // Length-`length` prefix of the fixed point obtained by iterating from
  // `seed`; requires image(seed) to start with seed and have length >= 2.
  std::string fixed_point_prefix(char seed, std::size_t length) const;

private:
  std::size_t index_of(char letter) const;

  std::string alphabet_;
  std::vector<std::string> images_;
};

// No letter repeated `order` times in a row (order 3 matches the normal
// forms of two cyclic factors of order 3).
bool is_cubeless(std::string_view word, int order = 3);

// Leveled tree of the cubeless words starting with 'a': level k holds all
// such words of length k in lexicographic order, edges append one letter.
struct CubelessTree {
  int order = 3;
  std::vector<std::vector<std::string>> levels;

  int depth() const { return static_cast<int>(levels.size()) - 1; }
};

CubelessTree build_tree(int depth, int order = 3,
                        std::size_t max_words = 10'000'000);

// Children of a word under the append-one-letter rule ("" has the single
// child "a", matching the tree root).
std::vector<std::string> tree_children(std::string_view word, int order = 3);

bool check_level_sorted(const CubelessTree& tree, int level);

// Descendant counts of v at relative depths 0..depth within the full tree.
std::vector<std::uint64_t> subtree_level_counts(std::string_view v, int depth,
                                                int order = 3);

// A named infinite-word prefix to trace through the tree.
struct HighlightPath {
  std::string name;
  std::string word;
};

// Graphviz text: nodes level-major and lexicographic, root labeled with the
// empty-word symbol; highlight paths colored purple, red, then a fixed
// palette, shared edges carrying a colon-joined color list.
std::string export_dot(const CubelessTree& tree,
                       const std::vector<HighlightPath>& highlights = {});

// JSON array of {level, word, parent}; the root's parent is null.
std::string export_json(const CubelessTree& tree);

// Prefix of psi followed by the periodic tail aab aab ..., total length
// |psi| + k. psi must be cubeless, start with 'a' and not end with 'a'.
std::string theta_word(std::string_view psi, int k);
void validate_psi(std::string_view psi);

// Cubeless words of length |theta_word(psi, k)| starting with 'a' that are
// lexicographically >= that word, by exhaustive enumeration.
std::vector<std::string> q_words(std::string_view psi, int k);
std::uint64_t q_count(std::string_view psi, int k);

}  // namespace nvalued
