#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace nvalued {

// Unordered collection with multiplicities, kept in canonical sorted order:
// two multisets are equal iff their canonical sequences are equal. The size
// is fixed at construction.
template <typename T>
class Multiset {
public:
  explicit Multiset(std::vector<T> values) : elems_(std::move(values)) {
    if (elems_.empty()) {
      throw std::invalid_argument("Multiset: empty input");
    }
    std::sort(elems_.begin(), elems_.end());
  }

  const std::vector<T>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  const T& operator[](std::size_t i) const { return elems_[i]; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool contains(const T& value) const {
    return std::binary_search(elems_.begin(), elems_.end(), value);
  }

  // Distinct values, sorted.
  std::vector<T> support() const {
    std::vector<T> out(elems_);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  friend bool operator==(const Multiset&, const Multiset&) = default;

private:
  std::vector<T> elems_;
};

template <typename T>
Multiset<T> multiset_from(std::vector<T> values) {
  return Multiset<T>(std::move(values));
}

}  // namespace nvalued
