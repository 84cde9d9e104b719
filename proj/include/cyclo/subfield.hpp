#pragma once

/**
 * @file subfield.hpp
 * @brief Field homomorphisms, subfield membership and simple extensions.
 *
 * Towers are always flattened: an extension K(alpha) is presented by the minimal polynomial
 * of a primitive element theta = alpha + s*beta, beta the generator of K.
 */

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/kpoly.hpp"

namespace cyclo {

/// Q-algebra map K -> L determined by the image of K's generator.
struct FieldHom {
  FieldPtr from;
  FieldPtr to;
  NFElem image;

  NFElem apply(const NFElem& a) const;
  KPoly apply(const KPoly& p) const;
};

/// Homomorphisms K -> L (one per root of K's minimal polynomial in L).
std::vector<FieldHom> field_homomorphisms(const FieldPtr& k, const FieldPtr& l);

/// The homomorphism K -> L compatible with both designated embeddings, if any.
std::optional<FieldHom> compatible_embedding(const FieldPtr& k, const FieldPtr& l);

struct SubfieldExpression {
  enum class Status { kPresent, kAbsent, kNoEmbedding };
  Status status = Status::kNoEmbedding;
  std::vector<Rat> coords;  // over the power basis of K, when present
  std::optional<FieldHom> hom;

  bool present() const { return status == Status::kPresent; }
  NFElem value() const;  // the element of K, when present
};

/// Writes a (in L) as an element of K embedded in L compatibly with the designated embeddings.
SubfieldExpression express_in_subfield(const NFElem& a, const FieldPtr& k);

struct Extension {
  FieldPtr field;  // the flattened extension M
  NFElem root;     // the adjoined element, in M
  FieldHom base;   // K -> M
  long shift = 0;  // primitive element is root + shift * (image of K's generator)
  bool trivial = false;  // the polynomial already had the root in K; field is K itself
};

/// Adjoins a root of g (irreducible over K) close to approx under K's designated embedding.
/// Throws std::invalid_argument if g is reducible over K.
Extension adjoin_root(const FieldPtr& k, const KPoly& g, std::complex<double> approx, const std::string& name);

/// K(sqrt(a)), choosing the root with nonnegative imaginary part (ties: nonnegative real part).
/// If a is already a square in K the result is flagged trivial and holds the chosen root in K.
Extension adjoin_sqrt(const FieldPtr& k, const NFElem& a, const std::string& name);

/// The square root of z selected by the branch rule above.
std::complex<double> preferred_sqrt(std::complex<double> z);

}  // namespace cyclo
