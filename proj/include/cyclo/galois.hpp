#pragma once

/**
 * @file galois.hpp
 * @brief Galois data of small irreducible polynomials: Frobenius degree patterns,
 * non-Galois witnesses, splitting-field degrees, group names and conjugate fields.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/number_field.hpp"
#include "cyclo/perm_group.hpp"

namespace cyclo {

using Pattern = std::vector<int>;

struct PatternStats {
  std::size_t count = 0;
  std::vector<std::uint64_t> sample_primes;  // first few primes realizing the pattern
};

/// Degree patterns of f mod p over good primes p < prime_budget.
std::map<Pattern, PatternStats> frobenius_cycle_types(const Poly& f, std::uint64_t prime_budget);

struct NoncyclotomicityCertificate {
  std::uint64_t prime = 0;
  Pattern pattern;

  /// Recomputes the factorization at the prime and checks the pattern and its unequal degrees.
  bool recheck(const Poly& f) const;
};

/// Smallest good prime below the budget whose pattern has two distinct degrees; nullopt means
/// inconclusive.
std::optional<NoncyclotomicityCertificate> noncyclotomic_witness(const Poly& f, std::uint64_t prime_budget = 2000);

struct SplittingTower {
  std::size_t degree = 0;
  std::vector<int> steps;       // adjunction degrees
  std::vector<Poly> fields;     // minimal polynomials of the successive flattened fields
};

/// Degree of the splitting field of an irreducible f, by iterated adjunction.
/// Throws std::runtime_error if the degree would exceed cap.
SplittingTower splitting_degree(const Poly& f, std::size_t cap = 720);

struct GaloisReport {
  Poly poly;
  std::size_t splitting_degree = 0;
  std::string group_name;
  bool abelian = false;
  std::map<Pattern, PatternStats> cycle_types;
  bool patterns_realizable = false;  // every observed pattern is a cycle type in the named group
};

GaloisReport identify_group(const Poly& f, std::uint64_t prime_budget = 2000);

/// Cycle types of the transitive group named in the table, as acting on the roots.
std::vector<Pattern> group_cycle_types(const std::string& name);

/// Z/2 wr Z/3 on six points and Z/2 x A4; searches for an explicit isomorphism.
std::optional<IsomorphismWitness> wreath_isomorphism();

struct RootClass {
  std::vector<std::size_t> roots;  // indices into isolate_roots(f)
  Poly field_poly;                 // minimal polynomial shared by the class
};

/// Partitions the roots of f by the subfield of C they generate.
std::vector<RootClass> conjugate_orbit(const Poly& f);

std::string pattern_string(const Pattern& p);

}  // namespace cyclo
