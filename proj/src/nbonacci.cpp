#include "nvalued/nbonacci.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace nvalued {

namespace {

void validate_depth(int n) {
  if (n < 2) {
    throw std::invalid_argument("n-bonacci: recurrence depth must be >= 2");
  }
}

template <typename Real>
Real real_ipow(Real base, int exp) {
  if (exp < 0) return Real(1) / real_ipow(base, -exp);
  Real result = 1;
  Real factor = base;
  for (int e = exp; e > 0; e >>= 1) {
    if (e & 1) result *= factor;
    factor *= factor;
  }
  return result;
}

std::complex<double> complex_ipow(std::complex<double> base, int exp) {
  if (exp < 0) return 1.0 / complex_ipow(base, -exp);
  std::complex<double> result = 1.0;
  std::complex<double> factor = base;
  for (int e = exp; e > 0; e >>= 1) {
    if (e & 1) result *= factor;
    factor *= factor;
  }
  return result;
}

long double char_poly_ld(int n, long double x) {
  long double v = 1;
  for (int i = 0; i < n; ++i) v = v * x - 1;
  return v;
}

// The dominant root, refined past double precision: the k-th powers in the
// explicit formulas amplify the root's relative error by k, so the extra
// mantissa bits are what keeps those sums inside their tolerances.
long double dominant_root_ld(int n) {
  // companion polynomial p(x) = x^{n+1} - 2 x^n + 1 = (x - 1) chi(x);
  // negative just right of its root at 1, equal to 1 at x = 2
  const auto companion = [n](long double x) {
    return real_ipow(x, n + 1) - 2 * real_ipow(x, n) + 1;
  };
  long double lo = 1.0L + 1e-9L;
  long double hi = 2.0L;
  while (hi - lo > 1e-4L) {
    const long double mid = (lo + hi) / 2;
    (companion(mid) > 0 ? hi : lo) = mid;
  }
  long double x = (lo + hi) / 2;
  for (int iter = 0; iter < 200; ++iter) {
    const long double value = companion(x);
    const long double slope =
        (n + 1) * real_ipow(x, n) - 2 * n * real_ipow(x, n - 1);
    const long double step = value / slope;
    x -= step;
    if (x <= 1 || x >= 2) x = (lo + hi) / 2;  // keep the bracket
    if (std::abs(step) < 1e-19L * x) break;
  }
  return x;
}

long double binet_lead_coefficient_ld(int n, long double r) {
  return (r - 1) / ((n + 1) * r - 2 * n);
}

std::complex<double> binet_coefficient(int n, std::complex<double> root) {
  return (root - 1.0) / ((n + 1.0) * root - 2.0 * n);
}

}  // namespace

std::vector<BigInt> nbonacci_sequence(int n, int count) {
  validate_depth(n);
  if (count < 0) {
    throw std::invalid_argument("n-bonacci: negative sequence length");
  }
  std::vector<BigInt> seq;
  seq.reserve(count);
  for (int k = 0; k < count; ++k) {
    if (k < n - 1) {
      seq.emplace_back(0);
    } else if (k == n - 1) {
      seq.emplace_back(1);
    } else {
      BigInt next = 0;
      for (int i = 1; i <= n; ++i) next += seq[k - i];
      seq.push_back(std::move(next));
    }
  }
  return seq;
}

BigInt nbonacci_exact(int n, int k) {
  if (k < 0) throw std::invalid_argument("n-bonacci: negative index");
  return nbonacci_sequence(n, k + 1).back();
}

double char_poly(int n, double x) {
  double v = 1.0;
  for (int i = 0; i < n; ++i) v = v * x - 1.0;
  return v;
}

std::complex<double> char_poly(int n, std::complex<double> x) {
  std::complex<double> v = 1.0;
  for (int i = 0; i < n; ++i) v = v * x - 1.0;
  return v;
}

double dominant_root(int n, double tol) {
  validate_depth(n);
  if (!(tol > 0)) {
    throw std::invalid_argument("dominant_root: tolerance must be positive");
  }
  const long double root = dominant_root_ld(n);
  const long double residual = std::abs(char_poly_ld(n, root));
  if (!(residual < static_cast<long double>(tol))) {
    char message[96];
    std::snprintf(message, sizeof(message),
                  "dominant_root: residual %.3Le exceeds %.3e", residual, tol);
    throw std::runtime_error(message);
  }
  return static_cast<double>(root);
}

RootSet all_roots(int n, double tol) {
  validate_depth(n);
  using Complex = std::complex<double>;
  constexpr double kTwoPi = 6.283185307179586476925287;

  std::vector<Complex> z(n);
  for (int i = 0; i < n; ++i) {
    // circle of radius 0.9, angle offset 0.4 rad breaks the symmetry
    z[i] = 0.9 * std::exp(Complex(0.0, kTwoPi * i / n + 0.4));
  }
  bool settled = false;
  for (int iter = 0; iter < 500 && !settled; ++iter) {
    double max_step = 0.0;
    for (int i = 0; i < n; ++i) {
      Complex denom = 1.0;
      for (int j = 0; j < n; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      const Complex delta = char_poly(n, z[i]) / denom;
      z[i] -= delta;
      max_step = std::max(max_step, std::abs(delta));
    }
    settled = max_step < 1e-14;
  }

  RootSet out;
  out.roots = std::move(z);
  // Pin the dominant root to the high-accuracy Newton value; measure its
  // residual there, before the final rounding to double.
  const long double root_ld = dominant_root_ld(n);
  std::size_t dominant_index = 0;
  for (std::size_t i = 1; i < out.roots.size(); ++i) {
    if (std::abs(out.roots[i]) > std::abs(out.roots[dominant_index])) {
      dominant_index = i;
    }
  }
  out.dominant = static_cast<double>(root_ld);
  out.roots[dominant_index] = out.dominant;

  out.residual = static_cast<double>(std::abs(char_poly_ld(n, root_ld)));
  for (std::size_t i = 0; i < out.roots.size(); ++i) {
    if (i == dominant_index) continue;
    out.residual = std::max(out.residual, std::abs(char_poly(n, out.roots[i])));
  }
  if (!(out.residual < tol)) {
    throw std::runtime_error("all_roots: Durand-Kerner did not converge");
  }

  int outside_unit = 0;
  for (const auto& root : out.roots) {
    if (std::abs(root) > 1.0) ++outside_unit;
  }
  if (outside_unit != 1) {
    throw std::runtime_error(
        "all_roots: expected exactly one root outside the unit circle");
  }

  std::sort(out.roots.begin(), out.roots.end(),
            [](const Complex& a, const Complex& b) {
              if (a.real() != b.real()) return a.real() > b.real();
              return a.imag() > b.imag();
            });
  return out;
}

double binet_nbonacci(int n, int k) {
  validate_depth(n);
  if (k < 0) throw std::invalid_argument("binet: negative index");
  const RootSet rs = all_roots(n);
  // dominant term in extended precision, the rest in complex double
  const long double r = dominant_root_ld(n);
  const long double lead =
      binet_lead_coefficient_ld(n, r) * real_ipow(r, k - n + 1);
  std::complex<double> tail = 0.0;
  for (const auto& root : rs.roots) {
    if (std::abs(root) > 1.0) continue;
    tail += binet_coefficient(n, root) * complex_ipow(root, k - n + 1);
  }
  if (std::abs(tail.imag()) > 1e-6) {
    throw std::runtime_error("binet: imaginary parts failed to cancel");
  }
  return static_cast<double>(lead + tail.real());
}

int rnd_precision_limit(int n) {
  validate_depth(n);
  const RootSet rs = all_roots(n);
  const long double r = dominant_root_ld(n);
  const long double lead = binet_lead_coefficient_ld(n, r);

  // |sum of subdominant terms| at index k, by the triangle inequality.
  const auto subdominant_bound = [&](int k) {
    double bound = 0.0;
    for (const auto& root : rs.roots) {
      if (std::abs(root) > 1.0) continue;
      bound += std::abs(binet_coefficient(n, root)) *
               real_ipow(std::abs(root), k - n + 1);
    }
    return bound;
  };
  // Rounding-error budget of the evaluated dominant term: a few ulps per
  // multiplication plus the root's own error, amplified by the exponent.
  const long double eps = std::numeric_limits<long double>::epsilon();
  const auto float_error = [&](int k) {
    const long double term = lead * real_ipow(r, k - n + 1);
    const long double ops = 3.0L * std::abs(k - n + 1) + 32.0L;
    return static_cast<double>(term * ops * eps);
  };

  const std::vector<BigInt> exact = nbonacci_sequence(n, 4 * n + 9);
  int limit = -1;
  for (int k = 0; k <= 400; ++k) {
    bool certified = false;
    if (subdominant_bound(k) + float_error(k) < 0.25) {
      certified = true;
    } else if (k < static_cast<int>(exact.size()) && float_error(k) < 0.01) {
      // For small k the triangle inequality is too loose; compare the
      // rounded term against the exact recurrence directly.
      const long double term = lead * real_ipow(r, k - n + 1);
      certified = BigInt(std::llroundl(term)) == exact[k];
    }
    if (!certified) {
      limit = k - 1;
      break;
    }
    limit = k;
  }
  return limit;
}

std::int64_t rnd_formula(int n, int k) {
  validate_depth(n);
  if (k < 0) throw std::invalid_argument("rnd_formula: negative index");
  const int limit = rnd_precision_limit(n);
  if (k > limit) {
    throw PrecisionRangeError(
        "rnd_formula: index " + std::to_string(k) +
        " is beyond the certified rounding range [0, " +
        std::to_string(limit) + "] for depth " + std::to_string(n));
  }
  const long double r = dominant_root_ld(n);
  const long double term =
      binet_lead_coefficient_ld(n, r) * real_ipow(r, k - n + 1);
  return std::llroundl(term);
}

}  // namespace nvalued
