#pragma once

/**
 * @file factor.hpp
 * @brief Factorization over F_p and over Q.
 *
 * Over Q: squarefree decomposition, a good prime with few modular factors,
 * multifactor quadratic Hensel lifting past a Mignotte-type coefficient bound,
 * and exhaustive recombination by trial division.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/fp_poly.hpp"
#include "cyclo/poly.hpp"

namespace cyclo {

/// Irreducible factorization over Q: input = content * prod factor^multiplicity, factors monic.
struct FactorList {
  Rat content;
  std::vector<std::pair<Poly, int>> factors;

  Poly expand() const;
  std::string to_string() const;
};

struct ModPFactorization {
  std::uint64_t prime = 0;
  std::vector<FpPoly> factors;  // monic, sorted by degree
  std::vector<int> pattern;     // sorted factor degrees
};

/// Complete factorization of f mod p. Throws std::domain_error if p divides the leading
/// coefficient (after clearing denominators) or f is not squarefree mod p.
ModPFactorization factor_mod_p(const Poly& f, std::uint64_t p);

/// Sorted degree pattern of f mod p by distinct-degree factorization, or nullopt if p is a bad
/// prime for f (divides a denominator or the leading coefficient, or f is not squarefree mod p).
std::optional<std::vector<int>> degree_pattern(const Poly& f, std::uint64_t p);

FactorList factor_rational(const Poly& f);

/// Monic irreducible factors of a squarefree polynomial.
std::vector<Poly> factor_squarefree_rational(const Poly& f);

bool is_irreducible(const Poly& f);

/// Rational roots of f (rational root theorem; independent of the Hensel path).
std::vector<Rat> rational_roots(const Poly& f);

}  // namespace cyclo
