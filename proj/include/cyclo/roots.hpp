#pragma once

/**
 * @file roots.hpp
 * @brief Certified isolation of the complex roots of a squarefree rational polynomial.
 *
 * Approximations come from Aberth iteration in GMP floating point. Each
 * approximation is then rounded to a dyadic complex rational and certified
 * with Smith's inclusion theorem: with W_i = f(z_i) / (lc * prod_{j != i}(z_i - z_j)),
 * the discs D(z_i, n|W_i|) cover the roots and an isolated disc holds exactly one.
 * All certification arithmetic is exact.
 */

#include <complex>
#include <string>
#include <vector>

#include "cyclo/poly.hpp"

namespace cyclo {

/// Axis-aligned box with rational endpoints.
struct ComplexBox {
  Rat re_lo, re_hi, im_lo, im_hi;

  bool contains(const CRat& z) const;
  bool contains(std::complex<double> z, double slack = 0.0) const;
  bool overlaps(const ComplexBox& o) const;
  Rat width() const;  // max of the two side lengths
  std::complex<double> midpoint() const;
  std::string to_string() const;
};

/// A disc D(center, radius) holding exactly one root; D(center, isolation) holds no other.
struct IsolatedRoot {
  CRat center;
  Rat radius;
  Rat isolation;
  /// Certified real (f real, disc symmetric about the real axis).
  bool real = false;

  ComplexBox box() const;
  std::complex<double> approx() const { return center.to_complex(); }
};

/// Numerical approximations to all roots (no certification).
std::vector<std::complex<double>> approximate_roots(const Poly& f, unsigned bits = 128);

/// Certified isolating discs for every root of a squarefree f of degree >= 1, in the order
/// of the numeric approximations sorted by (real part, imaginary part). Precision is doubled
/// until certification succeeds. Throws std::domain_error if f is not squarefree.
std::vector<IsolatedRoot> isolate_roots(const Poly& f, unsigned bits = 128);

/// Shrinks the disc to radius <= 2^-bits by Newton steps with exact inclusion checks.
IsolatedRoot refine_root(const Poly& f, const IsolatedRoot& r, unsigned bits);

/// Disc D(center, radius) certified to contain g(alpha) for the root alpha isolated by r.
struct Enclosure {
  CRat center;
  Rat radius;
  ComplexBox box() const;
};
Enclosure enclose_value(const Poly& g, const Poly& f, const IsolatedRoot& r, unsigned bits);

/// Index of the root whose disc contains the numeric point z and is the unique such disc;
/// -1 if none or ambiguous.
int locate_root(const std::vector<IsolatedRoot>& roots, std::complex<double> z);

}  // namespace cyclo
