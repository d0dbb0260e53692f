#include "nvalued/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace nvalued {

GroupSpec::GroupSpec(int factors_, int order_)
    : factors(factors_), order(order_) {
  if (factors < 2 || factors > 26) {
    throw std::invalid_argument(
        "GroupSpec: number of free factors must be in [2, 26]");
  }
  if (order < 2 || order > 255) {
    throw std::invalid_argument(
        "GroupSpec: cyclic factor order must be in [2, 255]");
  }
}

std::strong_ordering NormalWord::operator<=>(const NormalWord& other) const {
  std::size_t i = 0;
  std::size_t j = 0;
  std::uint32_t left = 0;   // letters pending in the current syllable
  std::uint32_t right = 0;
  for (;;) {
    if (left == 0) {
      if (i == syllables_.size()) break;
      left = syllables_[i].exp;
      ++i;
    }
    if (right == 0) {
      if (j == other.syllables_.size()) break;
      right = other.syllables_[j].exp;
      ++j;
    }
    const std::uint16_t ga = syllables_[i - 1].gen;
    const std::uint16_t gb = other.syllables_[j - 1].gen;
    if (ga != gb) return ga <=> gb;
    const std::uint32_t step = std::min(left, right);
    left -= step;
    right -= step;
  }
  const bool more_a = left > 0 || i < syllables_.size();
  const bool more_b = right > 0 || j < other.syllables_.size();
  if (more_a == more_b) return std::strong_ordering::equal;
  return more_a ? std::strong_ordering::greater : std::strong_ordering::less;
}

namespace {

void push_reduced(std::vector<Syllable>& stack, int gen, long long exp,
                  const GroupSpec& spec) {
  long long e = exp % spec.order;
  if (e < 0) e += spec.order;
  if (e == 0) return;
  if (!stack.empty() && stack.back().gen == gen) {
    const long long merged = (stack.back().exp + e) % spec.order;
    stack.pop_back();
    if (merged != 0) {
      stack.push_back({static_cast<std::uint16_t>(gen),
                       static_cast<std::uint16_t>(merged)});
    }
  } else {
    stack.push_back(
        {static_cast<std::uint16_t>(gen), static_cast<std::uint16_t>(e)});
  }
}

}  // namespace

NormalWord reduce(const std::vector<std::pair<int, long long>>& raw,
                  const GroupSpec& spec) {
  std::vector<Syllable> stack;
  stack.reserve(raw.size());
  for (const auto& [gen, exp] : raw) {
    if (gen < 0 || gen >= spec.factors) {
      throw std::invalid_argument("reduce: generator index out of range");
    }
    push_reduced(stack, gen, exp, spec);
  }
  return NormalWord(std::move(stack));
}

NormalWord concat(const NormalWord& lhs, const NormalWord& rhs,
                  const GroupSpec& spec) {
  std::vector<Syllable> stack(lhs.syllables());
  stack.reserve(stack.size() + rhs.syllable_count());
  for (const Syllable& s : rhs.syllables()) {
    push_reduced(stack, s.gen, s.exp, spec);
  }
  return NormalWord(std::move(stack));
}

NormalWord apply_phi(const NormalWord& w, int shift, const GroupSpec& spec) {
  int j = shift % spec.factors;
  if (j < 0) j += spec.factors;
  if (j == 0) return w;
  std::vector<Syllable> out(w.syllables());
  for (Syllable& s : out) {
    s.gen = static_cast<std::uint16_t>((s.gen + j) % spec.factors);
  }
  return NormalWord(std::move(out));
}

NormalWord invert(const NormalWord& w, const GroupSpec& spec) {
  std::vector<Syllable> out(w.syllables().rbegin(), w.syllables().rend());
  for (Syllable& s : out) {
    s.exp = static_cast<std::uint16_t>(spec.order - s.exp);
  }
  return NormalWord(std::move(out));
}

OrbitClass canonical(const NormalWord& w, const GroupSpec& spec) {
  if (w.empty()) return OrbitClass(NormalWord{});
  const int shift = (spec.factors - w.syllables().front().gen) % spec.factors;
  return OrbitClass(apply_phi(w, shift, spec));
}

std::string render(const NormalWord& w) {
  std::string out;
  out.reserve(w.letter_length());
  for (const Syllable& s : w.syllables()) {
    out.append(s.exp, static_cast<char>('a' + s.gen));
  }
  return out;
}

std::string render(const OrbitClass& c) { return render(c.rep()); }

NormalWord parse_word(std::string_view text, const GroupSpec& spec) {
  std::vector<std::pair<int, long long>> raw;
  raw.reserve(text.size());
  for (const char c : text) {
    const int gen = c - 'a';
    if (gen < 0 || gen >= spec.factors) {
      throw std::invalid_argument(std::string("parse_word: letter '") + c +
                                  "' outside the generator alphabet");
    }
    raw.emplace_back(gen, 1);
  }
  return reduce(raw, spec);
}

namespace {

void enumerate_letters(const GroupSpec& spec, int remaining,
                       std::vector<Syllable>& acc,
                       std::vector<NormalWord>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int gen = 0; gen < spec.factors; ++gen) {
    if (!acc.empty() && acc.back().gen == gen) {
      if (acc.back().exp + 1 >= spec.order) continue;
      ++acc.back().exp;
      enumerate_letters(spec, remaining - 1, acc, out);
      --acc.back().exp;
    } else {
      acc.push_back({static_cast<std::uint16_t>(gen), 1});
      enumerate_letters(spec, remaining - 1, acc, out);
      acc.pop_back();
    }
  }
}

}  // namespace

std::vector<NormalWord> enumerate_normal_words(const GroupSpec& spec,
                                               int length,
                                               bool first_gen_zero) {
  if (length < 0) {
    throw std::invalid_argument("enumerate_normal_words: negative length");
  }
  std::vector<NormalWord> out;
  if (length == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<Syllable> acc;
  if (first_gen_zero) {
    acc.push_back({0, 1});
    enumerate_letters(spec, length - 1, acc, out);
  } else {
    enumerate_letters(spec, length, acc, out);
  }
  return out;
}

}  // namespace nvalued
