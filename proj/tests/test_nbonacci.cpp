#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include "nvalued/nbonacci.hpp"

using nvalued::BigInt;
using nvalued::PrecisionRangeError;
using nvalued::RootSet;

namespace {

// Plain bisection on x^n - x^{n-1} - ... - 1 over [1, 2], used as an
// independent check of the Newton-based implementation.
double bisect_root(int n) {
  double lo = 1.0;
  double hi = 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (nvalued::char_poly(n, mid) > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

std::complex<double> char_poly_derivative(int n, std::complex<double> x) {
  // d/dx (x^n - x^{n-1} - ... - 1)
  std::complex<double> v = static_cast<double>(n);
  for (int i = n - 1; i >= 1; --i) {
    v = v * x - static_cast<double>(i);
  }
  return v;
}

std::complex<double> complex_ipow(std::complex<double> base, int exp) {
  if (exp < 0) return 1.0 / complex_ipow(base, -exp);
  std::complex<double> out = 1.0;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

TEST_CASE("exact recurrence values") {
  CHECK(nvalued::nbonacci_exact(2, 10) == 55);
  const std::vector<int> tribonacci = {0, 0, 1, 1, 2, 4, 7, 13};
  for (int k = 0; k < static_cast<int>(tribonacci.size()); ++k) {
    CHECK(nvalued::nbonacci_exact(3, k) == tribonacci[k]);
  }
  for (int n = 2; n <= 8; ++n) {
    CHECK(nvalued::nbonacci_exact(n, n - 1) == 1);
    for (int k = 0; k < n - 1; ++k) {
      CHECK(nvalued::nbonacci_exact(n, k) == 0);
    }
  }
  CHECK_THROWS_AS(nvalued::nbonacci_exact(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(nvalued::nbonacci_exact(2, -1), std::invalid_argument);
}

TEST_CASE("exact values do not overflow fixed width") {
  // F_300 is far beyond 64 bits; spot-check the leading digits via string.
  const std::string f300 = nvalued::nbonacci_exact(2, 300).str();
  CHECK(f300.size() == 63);
  CHECK(f300.substr(0, 10) == "2222322446");
}

TEST_CASE("dominant root matches the golden ratio and bisection") {
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  CHECK(std::abs(nvalued::dominant_root(2) - golden) < 1e-12);
  CHECK(std::abs(nvalued::dominant_root(3) - bisect_root(3)) < 1e-10);
  CHECK(std::abs(nvalued::dominant_root(3) - 1.839286755214161) < 1e-9);
  for (int n = 2; n <= 10; ++n) {
    const double r = nvalued::dominant_root(n);
    CHECK(r > 1.0);
    CHECK(r < 2.0);
    CHECK(std::abs(nvalued::char_poly(n, r)) < 1e-12);
  }
}

TEST_CASE("dominant roots increase towards 2") {
  double prev = 0.0;
  for (int n = 2; n <= 12; ++n) {
    const double r = nvalued::dominant_root(n);
    CHECK(r > prev);
    prev = r;
  }
  CHECK(prev > 1.999);
}

TEST_CASE("all roots: quadratic case against the explicit formula") {
  const RootSet rs = nvalued::all_roots(2);
  REQUIRE(rs.roots.size() == 2);
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  CHECK(std::abs(rs.roots[0] - std::complex<double>(golden, 0.0)) < 1e-10);
  CHECK(std::abs(rs.roots[1] - std::complex<double>(1.0 - golden, 0.0)) <
        1e-10);
  CHECK(rs.dominant == doctest::Approx(golden).epsilon(1e-12));
}

TEST_CASE("all roots: modulus structure and Vieta product") {
  for (int n = 2; n <= 8; ++n) {
    const RootSet rs = nvalued::all_roots(n);
    REQUIRE(rs.roots.size() == static_cast<std::size_t>(n));
    CHECK(rs.residual < 1e-12);
    int outside = 0;
    std::complex<double> product = 1.0;
    for (const auto& root : rs.roots) {
      if (std::abs(root) > 1.0) ++outside;
      product *= root;
    }
    CHECK(outside == 1);
    // constant coefficient is -1, so the root product has modulus 1
    CHECK(std::abs(std::abs(product) - 1.0) < 1e-9);
  }
  const RootSet cubic = nvalued::all_roots(3);
  CHECK(std::abs(cubic.roots[1] - std::conj(cubic.roots[2])) < 1e-9);
  CHECK(std::abs(cubic.roots[1]) < 1.0);
}

TEST_CASE("explicit formula reproduces the recurrence") {
  CHECK(nvalued::binet_nbonacci(2, 10) == doctest::Approx(55.0).epsilon(1e-9));
  CHECK(nvalued::binet_nbonacci(3, 7) == doctest::Approx(13.0).epsilon(1e-9));
  CHECK(std::abs(nvalued::binet_nbonacci(4, 3) - 1.0) < 1e-6);
  for (int n = 2; n <= 8; ++n) {
    for (int k = 0; k <= 40; ++k) {
      const double expected =
          nvalued::nbonacci_exact(n, k).convert_to<double>();
      CHECK(std::abs(nvalued::binet_nbonacci(n, k) - expected) < 1e-5);
    }
  }
}

TEST_CASE("the two coefficient expressions coincide") {
  for (int n = 2; n <= 8; ++n) {
    const RootSet rs = nvalued::all_roots(n);
    for (const auto& root : rs.roots) {
      const std::complex<double> via_derivative =
          1.0 / char_poly_derivative(n, root);
      const std::complex<double> closed =
          (root - 1.0) / ((n + 1.0) * root - 2.0 * n) *
          complex_ipow(root, -n + 1);
      CHECK(std::abs(via_derivative - closed) < 1e-9);
    }
  }
}

TEST_CASE("nearest-integer formula equals the exact recurrence in range") {
  CHECK(nvalued::rnd_formula(2, 10) == 55);
  CHECK(nvalued::rnd_formula(2, 1) == 1);
  CHECK(BigInt(nvalued::rnd_formula(3, 20)) == nvalued::nbonacci_exact(3, 20));
  CHECK(nvalued::rnd_formula(3, 20) == 35890);
  for (int n = 2; n <= 6; ++n) {
    const int limit = nvalued::rnd_precision_limit(n);
    CHECK(limit >= 40);  // covers the whole comparison range below
    const int top = std::min(limit, 60);
    for (int k = 0; k <= top; ++k) {
      REQUIRE(BigInt(nvalued::rnd_formula(n, k)) ==
              nvalued::nbonacci_exact(n, k));
    }
  }
}

TEST_CASE("nearest-integer formula refuses out-of-range indices") {
  for (int n = 2; n <= 6; ++n) {
    const int limit = nvalued::rnd_precision_limit(n);
    CHECK_THROWS_AS(nvalued::rnd_formula(n, limit + 1), PrecisionRangeError);
  }
  CHECK_THROWS_AS(nvalued::rnd_formula(2, 500), PrecisionRangeError);
}
