#pragma once

/**
 * @file number_field.hpp
 * @brief Number fields Q[x]/(m) with a certified complex embedding, and their elements.
 *
 * Fields are immutable and shared by pointer; elements of different fields never mix.
 * Equality of elements is equality of reduced representatives.
 */

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "cyclo/poly.hpp"
#include "cyclo/roots.hpp"

namespace cyclo {

class NField;
using FieldPtr = std::shared_ptr<const NField>;

class NFElem {
 public:
  NFElem() = default;
  /// rep is reduced modulo the minimal polynomial.
  NFElem(FieldPtr field, Poly rep);

  const FieldPtr& field() const { return field_; }
  const Poly& poly() const { return rep_; }
  /// Power-basis coordinates, length equal to the field degree.
  std::vector<Rat> coords() const;

  bool is_zero() const { return rep_.is_zero(); }
  bool is_one() const { return rep_.degree() == 0 && rep_.leading() == 1; }
  bool is_rational() const { return rep_.degree() <= 0; }
  Rat rational_value() const;

  NFElem inverse() const;
  NFElem pow(long k) const;

  friend NFElem operator+(const NFElem& a, const NFElem& b);
  friend NFElem operator-(const NFElem& a, const NFElem& b);
  friend NFElem operator-(const NFElem& a);
  friend NFElem operator*(const NFElem& a, const NFElem& b);
  friend NFElem operator/(const NFElem& a, const NFElem& b);
  friend NFElem operator*(const NFElem& a, const Rat& c);
  friend NFElem operator*(const Rat& c, const NFElem& a) { return a * c; }
  friend NFElem operator+(const NFElem& a, const Rat& c);
  friend NFElem operator-(const NFElem& a, const Rat& c) { return a + Rat(-c); }
  friend bool operator==(const NFElem& a, const NFElem& b);
  friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

  /// Double-precision value under the designated embedding.
  std::complex<double> approx() const;
  std::string to_string() const;

 private:
  FieldPtr field_;
  Poly rep_;
};

class NField : public std::enable_shared_from_this<NField> {
 public:
  /// Builds a field from a monic irreducible polynomial; the designated root is the unique
  /// certified root nearest to approx. Irreducibility is certified by factorization unless
  /// trusted is set. Throws std::invalid_argument on failure.
  static FieldPtr create(const Poly& min_poly, std::string name, std::complex<double> approx, bool trusted = false);
  /// Same, with the root chosen by index into isolate_roots order.
  static FieldPtr create_with_root(const Poly& min_poly, std::string name, std::size_t root_index,
                                   bool trusted = false);
  static FieldPtr rationals();

  const Poly& min_poly() const { return min_poly_; }
  int degree() const { return min_poly_.degree(); }
  const std::string& name() const { return name_; }
  const IsolatedRoot& root() const { return roots_[root_index_]; }
  std::size_t root_index() const { return root_index_; }
  const std::vector<IsolatedRoot>& all_roots() const { return roots_; }

  NFElem gen() const;
  NFElem zero() const;
  NFElem one() const;
  NFElem from_rat(const Rat& q) const;
  NFElem from_poly(const Poly& p) const;
  NFElem from_coords(const std::vector<Rat>& c) const;

  /// "min_poly=<c0,...,cd>; root in [a,b]+i[c,d]"
  std::string serialize() const;

 private:
  NField() = default;
  Poly min_poly_;
  std::string name_;
  std::vector<IsolatedRoot> roots_;
  std::size_t root_index_ = 0;
};

/// Monic minimal polynomial over Q, by linear dependence among powers.
Poly minimal_polynomial(const NFElem& a);

/// Box of width <= 2^-bits containing the image of a under the designated embedding.
ComplexBox embed(const NFElem& a, unsigned bits);

/// Q(zeta_N) with zeta_N = exp(2 pi i / N); cached per N.
FieldPtr cyclotomic_field(unsigned n);
/// N if k is the field returned by cyclotomic_field(N), else 0.
unsigned cyclotomic_order(const FieldPtr& k);

/// Requires a and b to share a field; throws std::invalid_argument otherwise.
void require_same_field(const NFElem& a, const NFElem& b);

}  // namespace cyclo
