#include "nvalued/closed_forms.hpp"

#include <cmath>
#include <stdexcept>

namespace nvalued {

std::string_view family_name(GrowthFamily family) {
  switch (family) {
    case GrowthFamily::Linear: return "linear";
    case GrowthFamily::Fibonacci: return "fibonacci";
    case GrowthFamily::PowerOfTwo: return "power_of_two";
    case GrowthFamily::Geometric: return "geometric";
    case GrowthFamily::NBonacciAsymptotic: return "nbonacci_asymptotic";
  }
  throw std::invalid_argument("family_name: unknown family");
}

std::optional<GrowthFamily> family_for(const GroupSpec& spec) {
  if (spec.order == 2) {
    if (spec.factors == 2) return GrowthFamily::Linear;
    if (spec.factors == 3) return GrowthFamily::PowerOfTwo;
    return GrowthFamily::Geometric;
  }
  if (spec.factors == 2) {
    if (spec.order == 3) return GrowthFamily::Fibonacci;
    return GrowthFamily::NBonacciAsymptotic;
  }
  return std::nullopt;
}

namespace {

void require_nonnegative(int k) {
  if (k < 0) throw std::invalid_argument("closed form: negative index");
}

}  // namespace

BigInt xi_linear(int k) {
  require_nonnegative(k);
  return BigInt(k) + 1;
}

BigInt xi_fibonacci_minus_one(int k) {
  require_nonnegative(k);
  return nbonacci_exact(2, k + 3) - 1;
}

BigInt xi_power_of_two(int k) {
  require_nonnegative(k);
  return BigInt(1) << k;
}

BigInt xi_geometric(int s, int k) {
  require_nonnegative(k);
  if (s < 3) {
    throw std::invalid_argument("xi_geometric: needs at least 3 factors");
  }
  BigInt base = s - 1;
  BigInt numerator = 1;
  for (int i = 0; i < k; ++i) numerator *= base;
  numerator -= 1;
  return numerator / (s - 2) + 1;
}

double xi_nbonacci_asymptotic(int m, int k) {
  require_nonnegative(k);
  if (m < 3) {
    throw std::invalid_argument("xi_nbonacci_asymptotic: needs order >= 3");
  }
  const double r = dominant_root(m - 1);
  return std::pow(r, k + 1) / (m * r - 2.0 * (m - 1));
}

ClosedFormValue closed_form_xi(GrowthFamily family, const GroupSpec& spec,
                               int k) {
  ClosedFormValue out;
  switch (family) {
    case GrowthFamily::Linear:
      if (spec.factors != 2 || spec.order != 2) {
        throw std::invalid_argument("closed_form_xi: linear needs s=2, m=2");
      }
      out.integer = xi_linear(k);
      return out;
    case GrowthFamily::Fibonacci:
      if (spec.factors != 2 || spec.order != 3) {
        throw std::invalid_argument("closed_form_xi: fibonacci needs s=2, m=3");
      }
      out.integer = xi_fibonacci_minus_one(k);
      return out;
    case GrowthFamily::PowerOfTwo:
      if (spec.factors != 3 || spec.order != 2) {
        throw std::invalid_argument(
            "closed_form_xi: power_of_two needs s=3, m=2");
      }
      out.integer = xi_power_of_two(k);
      return out;
    case GrowthFamily::Geometric:
      if (spec.factors < 3 || spec.order != 2) {
        throw std::invalid_argument(
            "closed_form_xi: geometric needs s>=3, m=2");
      }
      out.integer = xi_geometric(spec.factors, k);
      return out;
    case GrowthFamily::NBonacciAsymptotic:
      if (spec.factors != 2 || spec.order < 3) {
        throw std::invalid_argument(
            "closed_form_xi: asymptotic needs s=2, m>=3");
      }
      out.exact = false;
      out.estimate = xi_nbonacci_asymptotic(spec.order, k);
      return out;
  }
  throw std::invalid_argument("closed_form_xi: unknown family");
}

std::vector<BigInt> s_counts(int order, int k_max) {
  if (order < 3) {
    throw std::invalid_argument("s_counts: needs order >= 3");
  }
  if (k_max < 0) {
    throw std::invalid_argument("s_counts: negative bound");
  }
  const std::vector<BigInt> seq =
      nbonacci_sequence(order - 1, k_max + order - 1);
  std::vector<BigInt> out;
  out.reserve(k_max + 1);
  for (int k = 0; k <= k_max; ++k) {
    out.push_back(seq[k + order - 2]);
  }
  return out;
}

}  // namespace nvalued
