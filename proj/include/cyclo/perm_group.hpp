#pragma once

/**
 * @file perm_group.hpp
 * @brief Small permutation groups by explicit enumeration.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cyclo {

using Perm = std::vector<std::uint8_t>;

Perm identity_perm(std::size_t n);
/// (p * q)(i) = p(q(i))
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
/// Builds a permutation of n points from disjoint cycles.
Perm from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles);
int order(const Perm& p);
/// Sorted cycle lengths including fixed points.
std::vector<int> cycle_type(const Perm& p);
std::string cycle_string(const Perm& p);

/// All elements of the group generated by gens, identity first.
std::vector<Perm> generate_group(const std::vector<Perm>& gens);
bool is_abelian(const std::vector<Perm>& elements);

struct IsomorphismWitness {
  std::vector<Perm> source_generators;
  std::vector<Perm> target_images;
  std::size_t checked_products = 0;
};

/// Searches for an isomorphism from <gens1> onto <gens2> by trying generator images of equal
/// order; verifies the homomorphism property on all pairs and bijectivity.
std::optional<IsomorphismWitness> find_isomorphism(const std::vector<Perm>& gens1, const std::vector<Perm>& gens2);

}  // namespace cyclo
