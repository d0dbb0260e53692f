#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nvalued {

using BigInt = boost::multiprecision::cpp_int;

// Requested index lies outside the certified rounding range of the
// nearest-integer formula.
struct PrecisionRangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Roots of the characteristic polynomial x^n - x^{n-1} - ... - 1.
struct RootSet {
  double dominant = 0.0;                    // the unique root in (1, 2)
  std::vector<std::complex<double>> roots;  // all n roots, fixed order
  double residual = 0.0;                    // max |p(root)|
};

// F_k = F_{k-1} + ... + F_{k-n} with F_0 = ... = F_{n-2} = 0, F_{n-1} = 1.
BigInt nbonacci_exact(int n, int k);
std::vector<BigInt> nbonacci_sequence(int n, int count);

// Characteristic polynomial value x^n - x^{n-1} - ... - 1.
double char_poly(int n, double x);
std::complex<double> char_poly(int n, std::complex<double> x);

// The unique positive root in (1, 2), via bisection then Newton on the
// companion polynomial x^{n+1} - 2 x^n + 1 (whose extra root at 1 the
// bracket excludes). |char_poly(result)| < tol or a numeric error is thrown.
double dominant_root(int n, double tol = 1e-13);

// All n roots by Durand-Kerner iteration; validates that exactly the
// dominant root lies outside the unit circle.
RootSet all_roots(int n, double tol = 1e-12);

// Explicit-formula evaluation: sum over roots of
// (x-1)/((n+1)x - 2n) * x^{k-n+1}. The imaginary parts cancel; a residue
// above 1e-6 is a numeric error.
double binet_nbonacci(int n, int k);

// Largest k for which rounding the dominant term is certified to reproduce
// the exact sequence (see rnd_formula).
int rnd_precision_limit(int n);

// Nearest integer of the dominant term (r-1)/((n+1)r - 2n) * r^{k-n+1}.
// Refuses indices beyond the certified range instead of returning a
// possibly wrong integer.
std::int64_t rnd_formula(int n, int k);

}  // namespace nvalued
