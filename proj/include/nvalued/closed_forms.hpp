#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "nvalued/nbonacci.hpp"
#include "nvalued/words.hpp"

namespace nvalued {

// Growth shapes with a known formula, keyed by the group parameters.
enum class GrowthFamily {
  Linear,                 // two involutive factors: xi_k = k + 1
  Fibonacci,              // two factors of order 3: xi_k = F_{k+3} - 1
  PowerOfTwo,             // three involutive factors: xi_k = 2^k
  Geometric,              // s >= 4 involutive factors: ((s-1)^k - 1)/(s-2) + 1
  NBonacciAsymptotic,     // two factors of order m >= 4: r^{k+1}/(m r - 2(m-1))
};

std::string_view family_name(GrowthFamily family);

// The family whose formula applies to the given parameters, if any.
std::optional<GrowthFamily> family_for(const GroupSpec& spec);

BigInt xi_linear(int k);
BigInt xi_fibonacci_minus_one(int k);          // F_{k+3} - 1
BigInt xi_power_of_two(int k);
BigInt xi_geometric(int s, int k);             // s >= 3
double xi_nbonacci_asymptotic(int m, int k);   // m >= 3

// Either an exact integer or an asymptotic real estimate.
struct ClosedFormValue {
  bool exact = true;
  BigInt integer;
  double estimate = 0.0;
};

ClosedFormValue closed_form_xi(GrowthFamily family, const GroupSpec& spec,
                               int k);

// Per-step new-word counts for two cyclic factors of order m >= 3:
// S_k = F^{(m-1)}_{k+m-2}.
std::vector<BigInt> s_counts(int order, int k_max);

}  // namespace nvalued
