#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "nvalued/nbonacci.hpp"
#include "nvalued/symbolic.hpp"
#include "nvalued/words.hpp"

using nvalued::CubelessTree;
using nvalued::Morphism;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

int count_lines_with(const std::string& text, const std::string& needle) {
  int count = 0;
  for (const std::string& line : split_lines(text)) {
    if (line.find(needle) != std::string::npos) ++count;
  }
  return count;
}

int count_node_lines(const std::string& dot) {
  int count = 0;
  for (const std::string& line : split_lines(dot)) {
    if (line.find("->") == std::string::npos &&
        line.find("\";") != std::string::npos) {
      ++count;
    }
  }
  return count;
}

// Independent tail-count oracle: walk every bit pattern of the given length
// (first letter pinned to 'a') instead of the tree enumeration.
std::uint64_t brute_tail_count(const std::string& floor) {
  const std::size_t len = floor.size();
  std::uint64_t count = 0;
  for (std::uint64_t bits = 0; bits < (1ull << (len - 1)); ++bits) {
    std::string word = "a";
    for (std::size_t i = 0; i + 1 < len; ++i) {
      word.push_back((bits >> i) & 1 ? 'b' : 'a');
    }
    if (nvalued::is_cubeless(word) && word >= floor) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("morphism application") {
  const Morphism fib = Morphism::fibonacci();
  CHECK(fib.apply("ab") == "aba");
  CHECK(fib.apply("") == "");
  CHECK(Morphism::thue_morse().apply("ab") == "abba");
  CHECK_THROWS_AS(fib.apply("ax"), std::invalid_argument);
  CHECK_THROWS_AS(Morphism("ab", {"ab"}), std::invalid_argument);
  CHECK_THROWS_AS(Morphism("ab", {"ab", ""}), std::invalid_argument);
  CHECK_THROWS_AS(Morphism("ab", {"ab", "ac"}), std::invalid_argument);
}

TEST_CASE("morphisms are monoid homomorphisms") {
  std::mt19937 rng(271828);
  std::uniform_int_distribution<int> len(0, 12);
  const std::vector<Morphism> morphisms = {Morphism::fibonacci(),
                                           Morphism::thue_morse()};
  for (const Morphism& f : morphisms) {
    for (int trial = 0; trial < 100; ++trial) {
      std::string u;
      std::string v;
      for (int i = len(rng); i > 0; --i) u.push_back(rng() % 2 ? 'a' : 'b');
      for (int i = len(rng); i > 0; --i) v.push_back(rng() % 2 ? 'a' : 'b');
      CHECK(f.apply(u + v) == f.apply(u) + f.apply(v));
    }
  }
}

TEST_CASE("fixed point prefixes") {
  CHECK(Morphism::fibonacci().fixed_point_prefix('a', 12) == "abaababaabaa");
  CHECK(Morphism::thue_morse().fixed_point_prefix('a', 8) == "abbabaab");
  CHECK(Morphism::fibonacci().fixed_point_prefix('a', 1) == "a");
  CHECK(Morphism::fibonacci().fixed_point_prefix('a', 0) == "");
  // a -> ba is not prolongable on a
  CHECK_THROWS_AS(Morphism("ab", {"ba", "a"}).fixed_point_prefix('a', 5),
                  std::invalid_argument);
}

TEST_CASE("shorter fixed-point prefixes are prefixes of longer ones") {
  for (const Morphism& f :
       {Morphism::fibonacci(), Morphism::thue_morse()}) {
    const std::string longest = f.fixed_point_prefix('a', 600);
    for (const std::size_t len : {1u, 5u, 89u, 233u, 599u}) {
      CHECK(f.fixed_point_prefix('a', len) == longest.substr(0, len));
    }
  }
}

TEST_CASE("cube detection") {
  CHECK(nvalued::is_cubeless("aabab"));
  CHECK_FALSE(nvalued::is_cubeless("abbba"));
  CHECK(nvalued::is_cubeless(""));
  CHECK(nvalued::is_cubeless("aa"));
  CHECK_FALSE(nvalued::is_cubeless("aa", 2));
  CHECK(nvalued::is_cubeless("aaab", 5));
}

TEST_CASE("famous words avoid letter cubes") {
  const std::string fib = Morphism::fibonacci().fixed_point_prefix('a', 10000);
  const std::string tm = Morphism::thue_morse().fixed_point_prefix('a', 10000);
  CHECK(nvalued::is_cubeless(fib));
  CHECK(nvalued::is_cubeless(tm));
  CHECK(fib.find("bb") == std::string::npos);
  CHECK(fib.find("aaa") == std::string::npos);
  CHECK(tm.find("aaa") == std::string::npos);
  CHECK(tm.find("bbb") == std::string::npos);
}

TEST_CASE("tree levels: sizes, contents, and the child rule") {
  const CubelessTree tree = nvalued::build_tree(6);
  REQUIRE(tree.depth() == 6);
  std::vector<std::size_t> sizes;
  for (const auto& level : tree.levels) sizes.push_back(level.size());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 2, 3, 5, 8, 13});
  CHECK(tree.levels[2] == std::vector<std::string>{"aa", "ab"});
  CHECK(tree.levels[3] == std::vector<std::string>{"aab", "aba", "abb"});

  CHECK(nvalued::tree_children("aab") ==
        std::vector<std::string>{"aaba", "aabb"});
  CHECK(nvalued::tree_children("aa") == std::vector<std::string>{"aab"});
  CHECK(nvalued::tree_children("") == std::vector<std::string>{"a"});
}

TEST_CASE("tree levels match the free-product enumeration") {
  const nvalued::GroupSpec spec(2, 3);
  const CubelessTree tree = nvalued::build_tree(10);
  for (int k = 0; k <= 10; ++k) {
    std::vector<std::string> words;
    for (const nvalued::NormalWord& w :
         nvalued::enumerate_normal_words(spec, k, true)) {
      words.push_back(render(w));
    }
    CHECK(tree.levels[k] == words);
  }
}

TEST_CASE("levels are sorted and Fibonacci-sized") {
  const CubelessTree tree = nvalued::build_tree(12);
  for (int k = 0; k <= 12; ++k) {
    CHECK(nvalued::check_level_sorted(tree, k));
    CHECK(nvalued::BigInt(tree.levels[k].size()) ==
          nvalued::nbonacci_exact(2, k + 1));
  }
  CHECK_THROWS_AS(nvalued::check_level_sorted(tree, 13),
                  std::invalid_argument);
}

TEST_CASE("tree construction respects the resource cap") {
  CHECK_THROWS_AS(nvalued::build_tree(30, 3, 100), nvalued::ResourceError);
}

TEST_CASE("subtree level counts") {
  using Counts = std::vector<std::uint64_t>;
  CHECK(nvalued::subtree_level_counts("ab", 6) ==
        Counts{1, 2, 3, 5, 8, 13, 21});
  CHECK(nvalued::subtree_level_counts("aa", 6) ==
        Counts{1, 1, 2, 3, 5, 8, 13});
  CHECK(nvalued::subtree_level_counts("", 6) == Counts{1, 1, 2, 3, 5, 8, 13});
  CHECK_THROWS_AS(nvalued::subtree_level_counts("ba", 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(nvalued::subtree_level_counts("aaa", 3),
                  std::invalid_argument);

  const CubelessTree tree = nvalued::build_tree(6);
  for (int level = 0; level <= 6; ++level) {
    for (const std::string& vertex : tree.levels[level]) {
      const Counts counts = nvalued::subtree_level_counts(vertex, 8);
      for (std::size_t d = 2; d < counts.size(); ++d) {
        CHECK(counts[d] == counts[d - 1] + counts[d - 2]);
      }
    }
  }
}

TEST_CASE("dot export: node and edge counts") {
  const std::string dot = nvalued::export_dot(nvalued::build_tree(2));
  CHECK(dot.substr(0, 8) == "digraph ");
  CHECK(count_node_lines(dot) == 4);
  CHECK(count_lines_with(dot, "->") == 3);
  CHECK(count_lines_with(dot, "\xce\x9b") == 2);  // root node + its out edge

  const std::string root_only = nvalued::export_dot(nvalued::build_tree(0));
  CHECK(count_node_lines(root_only) == 1);
  CHECK(count_lines_with(root_only, "->") == 0);
}

TEST_CASE("dot export: highlighted paths share the first two edges") {
  const CubelessTree tree = nvalued::build_tree(5);
  const std::vector<nvalued::HighlightPath> highlights = {
      {"fibonacci", Morphism::fibonacci().fixed_point_prefix('a', 5)},
      {"thue-morse", Morphism::thue_morse().fixed_point_prefix('a', 5)},
  };
  const std::string dot = nvalued::export_dot(tree, highlights);
  CHECK(dot.find("\"\xce\x9b\" -> \"a\" [color=\"purple:red\"];") !=
        std::string::npos);
  CHECK(dot.find("\"a\" -> \"ab\" [color=\"purple:red\"];") !=
        std::string::npos);
  // fibonacci continues aba..., thue-morse abb...
  CHECK(dot.find("\"ab\" -> \"aba\" [color=\"purple\"];") !=
        std::string::npos);
  CHECK(dot.find("\"ab\" -> \"abb\" [color=\"red\"];") != std::string::npos);
}

TEST_CASE("dot export rejects words outside the tree") {
  const CubelessTree tree = nvalued::build_tree(4);
  CHECK_THROWS_WITH_AS(
      nvalued::export_dot(tree, {{"bad", "abbb"}}),
      doctest::Contains("abbb"), std::invalid_argument);
  CHECK_THROWS_AS(nvalued::export_dot(tree, {{"bad", "ba"}}),
                  std::invalid_argument);
}

TEST_CASE("json export carries level, word, and parent") {
  const CubelessTree tree = nvalued::build_tree(4);
  const nlohmann::json items = nlohmann::json::parse(nvalued::export_json(tree));
  REQUIRE(items.is_array());
  std::size_t expected = 0;
  for (const auto& level : tree.levels) expected += level.size();
  REQUIRE(items.size() == expected);
  CHECK(items[0]["level"] == 0);
  CHECK(items[0]["word"] == "");
  CHECK(items[0]["parent"].is_null());
  for (std::size_t i = 1; i < items.size(); ++i) {
    const std::string word = items[i]["word"];
    const std::string parent = items[i]["parent"];
    CHECK(parent == word.substr(0, word.size() - 1));
    CHECK(items[i]["level"] == static_cast<int>(word.size()));
  }
}

TEST_CASE("theta words extend psi with the periodic tail") {
  CHECK(nvalued::theta_word("ab", 0) == "ab");
  CHECK(nvalued::theta_word("ab", 1) == "aba");
  CHECK(nvalued::theta_word("ab", 2) == "abaa");
  CHECK(nvalued::theta_word("ab", 3) == "abaab");
  CHECK(nvalued::theta_word("ab", 4) == "abaaba");
  for (int k = 0; k <= 25; ++k) {
    CHECK(nvalued::is_cubeless(nvalued::theta_word("abb", k)));
  }
  CHECK_THROWS_AS(nvalued::validate_psi("aba"), std::invalid_argument);
  CHECK_THROWS_AS(nvalued::validate_psi("bab"), std::invalid_argument);
  CHECK_THROWS_AS(nvalued::validate_psi("abbb"), std::invalid_argument);
  CHECK_THROWS_AS(nvalued::validate_psi(""), std::invalid_argument);
  CHECK_THROWS_AS(nvalued::validate_psi("acb"), std::invalid_argument);
}

TEST_CASE("tail counts against the bit-pattern oracle") {
  for (const std::string psi : {"ab", "abb", "aab"}) {
    for (int k = 0; k <= 10; ++k) {
      CHECK(nvalued::q_count(psi, k) ==
            brute_tail_count(nvalued::theta_word(psi, k)));
    }
  }
  std::vector<std::uint64_t> q_ab;
  for (int k = 0; k <= 5; ++k) q_ab.push_back(nvalued::q_count("ab", k));
  CHECK(q_ab == std::vector<std::uint64_t>{1, 2, 3, 5, 8, 13});
  std::vector<std::uint64_t> q_abb;
  for (int k = 0; k <= 5; ++k) q_abb.push_back(nvalued::q_count("abb", k));
  CHECK(q_abb == std::vector<std::uint64_t>{1, 1, 2, 3, 5, 8});
  std::vector<std::uint64_t> q_aab;
  for (int k = 0; k <= 5; ++k) q_aab.push_back(nvalued::q_count("aab", k));
  CHECK(q_aab == std::vector<std::uint64_t>{3, 5, 8, 13, 21, 34});
}

TEST_CASE("tail words are cubeless, bounded below, and sorted") {
  const auto words = nvalued::q_words("ab", 4);
  const std::string floor = nvalued::theta_word("ab", 4);
  CHECK(words.size() == nvalued::q_count("ab", 4));
  CHECK(std::is_sorted(words.begin(), words.end()));
  for (const std::string& w : words) {
    CHECK(w.size() == floor.size());
    CHECK(w.front() == 'a');
    CHECK(w >= floor);
    CHECK(nvalued::is_cubeless(w));
  }
}

TEST_CASE("tail counts obey the Fibonacci recurrence") {
  for (const std::string psi : {"ab", "abb", "aab"}) {
    std::vector<std::uint64_t> q;
    for (int k = 0; k <= 16; ++k) q.push_back(nvalued::q_count(psi, k));
    for (int k = 2; k <= 16; ++k) {
      CHECK(q[k] == q[k - 1] + q[k - 2]);
    }
  }
}
