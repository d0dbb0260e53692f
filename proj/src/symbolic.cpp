#include "nvalued/symbolic.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace nvalued {

Morphism::Morphism(std::string alphabet, std::vector<std::string> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (alphabet_.empty() || alphabet_.size() != images_.size()) {
    throw std::invalid_argument(
        "Morphism: need one image per alphabet letter");
  }
  for (const std::string& image : images_) {
    if (image.empty()) {
      throw std::invalid_argument("Morphism: images must be nonempty");
    }
    for (const char c : image) {
      if (alphabet_.find(c) == std::string::npos) {
        throw std::invalid_argument(
            std::string("Morphism: image letter '") + c +
            "' is not in the alphabet");
      }
    }
  }
}

Morphism Morphism::fibonacci() { return Morphism("ab", {"ab", "a"}); }

Morphism Morphism::thue_morse() { return Morphism("ab", {"ab", "ba"}); }

std::size_t Morphism::index_of(char letter) const {
  const std::size_t pos = alphabet_.find(letter);
  if (pos == std::string::npos) {
    throw std::invalid_argument(std::string("Morphism: letter '") + letter +
                                "' is not in the alphabet");
  }
  return pos;
}

const std::string& Morphism::image(char letter) const {
  return images_[index_of(letter)];
}

std::string Morphism::apply(std::string_view word) const {
  std::string out;
  for (const char c : word) {
    out += image(c);
  }
  return out;
}

std::string Morphism::fixed_point_prefix(char seed,
                                         std::size_t length) const {
  const std::string& seed_image = image(seed);
  if (seed_image.size() < 2 || seed_image.front() != seed) {
    throw std::invalid_argument(
        "fixed_point_prefix: the morphism is not prolongable on the seed");
  }
  std::string word(1, seed);
  while (word.size() < length) {
    word = apply(word);
  }
  word.resize(length);
  return word;
}

bool is_cubeless(std::string_view word, int order) {
  if (order < 2) throw std::invalid_argument("is_cubeless: order must be >= 2");
  int run = 0;
  char prev = '\0';
  for (const char c : word) {
    run = (c == prev) ? run + 1 : 1;
    if (run >= order) return false;
    prev = c;
  }
  return true;
}

std::vector<std::string> tree_children(std::string_view word, int order) {
  if (word.empty()) return {"a"};
  std::vector<std::string> out;
  for (const char c : {'a', 'b'}) {
    std::string child(word);
    child.push_back(c);
    if (is_cubeless(child, order)) out.push_back(std::move(child));
  }
  return out;
}

CubelessTree build_tree(int depth, int order, std::size_t max_words) {
  if (depth < 0) throw std::invalid_argument("build_tree: negative depth");
  CubelessTree tree;
  tree.order = order;
  tree.levels.push_back({""});
  std::size_t total = 1;
  for (int level = 1; level <= depth; ++level) {
    std::vector<std::string> next;
    for (const std::string& word : tree.levels.back()) {
      for (std::string& child : tree_children(word, order)) {
        next.push_back(std::move(child));
      }
    }
    std::sort(next.begin(), next.end());
    total += next.size();
    if (total > max_words) {
      throw ResourceError("build_tree: word cap of " +
                          std::to_string(max_words) + " exceeded at level " +
                          std::to_string(level));
    }
    tree.levels.push_back(std::move(next));
  }
  return tree;
}

bool check_level_sorted(const CubelessTree& tree, int level) {
  if (level < 0 || level > tree.depth()) {
    throw std::invalid_argument("check_level_sorted: level out of range");
  }
  const std::vector<std::string>& words = tree.levels[level];
  for (std::size_t i = 1; i < words.size(); ++i) {
    if (!(words[i - 1] < words[i])) return false;
  }
  return true;
}

std::vector<std::uint64_t> subtree_level_counts(std::string_view v, int depth,
                                                int order) {
  if (depth < 0) {
    throw std::invalid_argument("subtree_level_counts: negative depth");
  }
  if (!v.empty() && (v.front() != 'a' || !is_cubeless(v, order))) {
    throw std::invalid_argument(
        "subtree_level_counts: vertex must be a cubeless word starting "
        "with 'a'");
  }
  std::vector<std::string> frontier{std::string(v)};
  std::vector<std::uint64_t> counts{1};
  for (int d = 1; d <= depth; ++d) {
    std::vector<std::string> next;
    for (const std::string& word : frontier) {
      for (std::string& child : tree_children(word, order)) {
        next.push_back(std::move(child));
      }
    }
    counts.push_back(next.size());
    frontier = std::move(next);
  }
  return counts;
}

namespace {

constexpr std::string_view kRootLabel = "\xce\x9b";  // capital lambda

constexpr std::array<std::string_view, 6> kHighlightColors = {
    "purple", "red", "blue", "green", "orange", "brown"};

std::string node_id(const std::string& word) {
  return word.empty() ? std::string(kRootLabel) : word;
}

}  // namespace

std::string export_dot(const CubelessTree& tree,
                       const std::vector<HighlightPath>& highlights) {
  // color list per highlighted edge (child word -> colors)
  std::unordered_map<std::string, std::string> edge_colors;
  for (std::size_t h = 0; h < highlights.size(); ++h) {
    const HighlightPath& path = highlights[h];
    const std::string_view color =
        kHighlightColors[std::min(h, kHighlightColors.size() - 1)];
    const std::size_t steps =
        std::min<std::size_t>(path.word.size(), tree.depth());
    for (std::size_t len = 1; len <= steps; ++len) {
      const std::string prefix(path.word.substr(0, len));
      const char last = prefix.back();
      if (prefix.front() != 'a' || (last != 'a' && last != 'b') ||
          !is_cubeless(prefix, tree.order)) {
        throw std::invalid_argument(
            "export_dot: highlight '" + path.name + "' leaves the tree at \"" +
            prefix + "\"");
      }
      std::string& colors = edge_colors[prefix];
      if (!colors.empty()) colors += ':';
      colors += color;
    }
  }

  std::ostringstream out;
  out << "digraph cubeless_tree {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=ellipse, fontname=\"Courier\"];\n";
  for (const std::vector<std::string>& level : tree.levels) {
    for (const std::string& word : level) {
      out << "  \"" << node_id(word) << "\";\n";
    }
  }
  for (int level = 1; level <= tree.depth(); ++level) {
    for (const std::string& word : tree.levels[level]) {
      const std::string parent = word.substr(0, word.size() - 1);
      out << "  \"" << node_id(parent) << "\" -> \"" << word << "\"";
      const auto colors = edge_colors.find(word);
      if (colors != edge_colors.end()) {
        out << " [color=\"" << colors->second << "\"]";
      }
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string export_json(const CubelessTree& tree) {
  nlohmann::json items = nlohmann::json::array();
  for (int level = 0; level <= tree.depth(); ++level) {
    for (const std::string& word : tree.levels[level]) {
      nlohmann::json item;
      item["level"] = level;
      item["word"] = word;
      if (level == 0) {
        item["parent"] = nullptr;
      } else {
        item["parent"] = word.substr(0, word.size() - 1);
      }
      items.push_back(std::move(item));
    }
  }
  return items.dump(2) + "\n";
}

void validate_psi(std::string_view psi) {
  if (psi.empty() || psi.front() != 'a') {
    throw std::invalid_argument("psi must be a nonempty word starting with 'a'");
  }
  for (const char c : psi) {
    if (c != 'a' && c != 'b') {
      throw std::invalid_argument("psi must be a word over {a, b}");
    }
  }
  if (!is_cubeless(psi)) {
    throw std::invalid_argument("psi must be cubeless");
  }
  if (psi.back() == 'a') {
    throw std::invalid_argument("psi must not end with 'a'");
  }
}

std::string theta_word(std::string_view psi, int k) {
  validate_psi(psi);
  if (k < 0) throw std::invalid_argument("theta_word: negative index");
  std::string out(psi);
  static constexpr std::string_view kTail = "aab";
  for (int i = 0; i < k; ++i) {
    out.push_back(kTail[i % kTail.size()]);
  }
  return out;
}

namespace {

void collect_at_least(const std::string& floor, std::string& word,
                      std::vector<std::string>& out) {
  if (word.size() == floor.size()) {
    if (word >= floor) out.push_back(word);
    return;
  }
  for (const char c : {'a', 'b'}) {
    word.push_back(c);
    if (is_cubeless(word)) collect_at_least(floor, word, out);
    word.pop_back();
  }
}

}  // namespace

std::vector<std::string> q_words(std::string_view psi, int k) {
  const std::string floor = theta_word(psi, k);
  std::vector<std::string> out;
  std::string word = "a";
  collect_at_least(floor, word, out);
  return out;
}

std::uint64_t q_count(std::string_view psi, int k) {
  return q_words(psi, k).size();
}

}  // namespace nvalued
