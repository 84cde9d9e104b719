#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision integers and rationals.
 *
 * Backed by GMP. mpq_class keeps every value in lowest terms with a
 * positive denominator, so equality is structural.
 */

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace cyclo {

using Int = mpz_class;
using Rat = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error if den == 0.
Rat make_rat(const Int& num, const Int& den);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rat& q);
std::string to_string(const Int& z);

/// Parses "n" or "n/d" (optional leading sign, surrounding spaces ignored).
Rat parse_rat(std::string_view text);

double to_double(const Rat& q);

/// Largest power-of-two exponent e with 2^e <= |q|; q must be nonzero.
long floor_log2(const Rat& q);

/// Rational bounds on sqrt(q) for q >= 0, with gap at most 2^-bits * (1 + sqrt(q)).
Rat sqrt_lower(const Rat& q, unsigned bits);
Rat sqrt_upper(const Rat& q, unsigned bits);

/// Exact complex rational.
struct CRat {
  Rat re;
  Rat im;

  CRat() = default;
  CRat(Rat r) : re(std::move(r)) {}
  CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  Rat norm2() const { return re * re + im * im; }
  CRat conj() const { return {re, -im}; }
  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

  friend CRat operator+(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
  friend CRat operator-(const CRat& a, const CRat& b) { return {a.re - b.re, a.im - b.im}; }
  friend CRat operator-(const CRat& a) { return {-a.re, -a.im}; }
  friend CRat operator*(const CRat& a, const CRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend CRat operator/(const CRat& a, const CRat& b);
  friend bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }
};

/// Upper bound on |z|.
Rat abs_upper(const CRat& z, unsigned bits = 64);
/// Lower bound on |z| (0 allowed).
Rat abs_lower(const CRat& z, unsigned bits = 64);

}  // namespace cyclo
