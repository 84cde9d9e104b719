#pragma once

/**
 * @file fp_poly.hpp
 * @brief Polynomials over a prime field F_p with p < 2^31.
 */

#include <cstdint>
#include <random>
#include <vector>

#include "cyclo/rational.hpp"

namespace cyclo {

std::vector<std::uint64_t> first_primes(std::size_t count);
std::vector<std::uint64_t> primes_below(std::uint64_t bound);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);
/// Reduces a rational with denominator prime to p; throws otherwise.
std::uint64_t reduce_mod(const Rat& q, std::uint64_t p);
std::uint64_t reduce_mod(const Int& z, std::uint64_t p);

class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(std::vector<std::uint64_t> coeffs, std::uint64_t p);

  static FpPoly from_integers(const std::vector<Int>& coeffs, std::uint64_t p);
  static FpPoly constant(std::uint64_t c, std::uint64_t p);
  static FpPoly x(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t leading() const { return c_.back(); }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }

  FpPoly monic() const;
  FpPoly derivative() const;
  bool is_squarefree() const;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, std::uint64_t c);
  friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

 private:
  void trim();
  std::vector<std::uint64_t> c_;
  std::uint64_t p_ = 2;
};

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly operator%(const FpPoly& a, const FpPoly& b);
FpPoly gcd(FpPoly a, FpPoly b);
/// s*a + t*b = g with g monic.
void xgcd(const FpPoly& a, const FpPoly& b, FpPoly& g, FpPoly& s, FpPoly& t);
FpPoly powmod(const FpPoly& base, const Int& e, const FpPoly& m);

/// Monic irreducible factors of a squarefree polynomial, sorted by degree then coefficients.
/// Throws std::domain_error if f is not squarefree or p divides the leading coefficient.
std::vector<FpPoly> factor_squarefree_mod_p(const FpPoly& f, std::mt19937_64& rng);

}  // namespace cyclo
