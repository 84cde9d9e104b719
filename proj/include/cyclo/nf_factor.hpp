#pragma once

/**
 * @file nf_factor.hpp
 * @brief Factorization over a number field by Trager's norm method.
 */

#include <vector>

#include "cyclo/kpoly.hpp"

namespace cyclo {

/// N(x) = Res_y(m(y), f(x - s*y, y)) for monic f over K = Q[y]/(m).
Poly norm_polynomial(const KPoly& f, long s);

struct KFactorList {
  NFElem content;
  std::vector<KPoly> factors;  // monic irreducible over the field
  long shift = 0;              // Trager shift that made the norm squarefree
  KPoly expand() const;
};

/// Complete factorization of a squarefree f over its coefficient field.
/// Throws std::domain_error if f is not squarefree.
KFactorList factor_over_field(const KPoly& f);

/// Roots of the rational polynomial f lying in K, sorted by coordinates.
std::vector<NFElem> roots_in_field(const Poly& f, const FieldPtr& k);

}  // namespace cyclo
