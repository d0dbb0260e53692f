#pragma once

#include <cstdint>
#include <future>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "nvalued/group.hpp"

namespace nvalued {

struct GrowthOptions {
  std::size_t max_elements = 10'000'000;  // hard cap on distinct elements
  int threads = 1;                        // frontier-expansion workers
};

// xi[k] = number of distinct points reached after k steps of the multivalued
// left-multiplication dynamics, marked point (the unit) included. When the
// element cap is hit mid-step, `truncated` is set and xi holds only the
// completed steps.
struct GrowthResult {
  std::vector<std::uint64_t> xi;
  bool truncated = false;
};

namespace detail {

template <MultiValuedGroup G>
std::vector<typename G::Element> expand_range(
    const G& g, const std::vector<typename G::Element>& frontier,
    std::size_t begin, std::size_t end, const typename G::Element& step) {
  std::vector<typename G::Element> out;
  for (std::size_t i = begin; i < end; ++i) {
    for (auto& v : g.mul(frontier[i], step).support()) {
      out.push_back(std::move(v));
    }
  }
  return out;
}

// Candidate successors of the whole frontier, in frontier order (each
// element contributes its sorted product support). With several workers the
// frontier is split into contiguous chunks and reassembled in chunk order,
// so the output is identical to the single-threaded one.
template <MultiValuedGroup G>
std::vector<std::vector<typename G::Element>> expand_frontier(
    const G& g, const std::vector<typename G::Element>& frontier,
    const typename G::Element& step, int threads) {
  using E = typename G::Element;
  if (threads <= 1 || frontier.size() < 64) {
    std::vector<std::vector<E>> out;
    out.push_back(expand_range(g, frontier, 0, frontier.size(), step));
    return out;
  }
  const std::size_t chunk = (frontier.size() + threads - 1) / threads;
  std::vector<std::future<std::vector<E>>> jobs;
  for (std::size_t begin = 0; begin < frontier.size(); begin += chunk) {
    const std::size_t end = std::min(begin + chunk, frontier.size());
    jobs.push_back(std::async(std::launch::async, [&, begin, end] {
      return expand_range(g, frontier, begin, end, step);
    }));
  }
  std::vector<std::vector<E>> out;
  out.reserve(jobs.size());
  for (auto& job : jobs) out.push_back(job.get());
  return out;
}

}  // namespace detail

// Frontier BFS over supports: xi_0 = 1 (the unit), P_1 = {base},
// P_k = union of support(mul(x, base)) over x in P_{k-1}. Deduplication is
// per step; only the step at which an element first appears matters.
template <MultiValuedGroup G>
GrowthResult growth_sequence(const G& g, const typename G::Element& base,
                             int k_max, GrowthOptions opts = {}) {
  using E = typename G::Element;
  if (k_max < 0) {
    throw std::invalid_argument("growth_sequence: negative step count");
  }

  GrowthResult res;
  std::unordered_set<E> visited;
  visited.insert(g.unit());
  res.xi.push_back(1);
  if (k_max == 0) return res;

  std::vector<E> frontier;
  if (visited.insert(base).second) frontier.push_back(base);
  res.xi.push_back(visited.size());

  for (int k = 2; k <= k_max; ++k) {
    if (frontier.empty()) {
      res.xi.push_back(visited.size());
      continue;
    }
    auto blocks = detail::expand_frontier(g, frontier, base, opts.threads);
    std::vector<E> next;
    for (auto& block : blocks) {
      for (E& cand : block) {
        if (visited.insert(cand).second) {
          if (visited.size() > opts.max_elements) {
            res.truncated = true;
            return res;
          }
          next.push_back(std::move(cand));
        }
      }
    }
    frontier = std::move(next);
    res.xi.push_back(visited.size());
  }
  return res;
}

// S_0 = 1 (the marked point), S_k = xi_k - xi_{k-1}.
inline std::vector<std::uint64_t> new_counts(
    const std::vector<std::uint64_t>& xi) {
  if (xi.empty() || xi.front() != 1) {
    throw std::invalid_argument("new_counts: xi must start at 1");
  }
  std::vector<std::uint64_t> s;
  s.reserve(xi.size());
  s.push_back(1);
  for (std::size_t k = 1; k < xi.size(); ++k) {
    if (xi[k] < xi[k - 1]) {
      throw std::invalid_argument("new_counts: xi must be non-decreasing");
    }
    s.push_back(xi[k] - xi[k - 1]);
  }
  return s;
}

}  // namespace nvalued
