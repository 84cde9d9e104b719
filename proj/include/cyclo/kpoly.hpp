#pragma once

/**
 * @file kpoly.hpp
 * @brief Univariate polynomials with coefficients in a number field.
 */

#include <string>
#include <vector>

#include "cyclo/number_field.hpp"

namespace cyclo {

class KPoly {
 public:
  KPoly() = default;
  KPoly(FieldPtr field, std::vector<NFElem> coeffs);
  /// Coefficients of a rational polynomial mapped into the field.
  static KPoly from_rational(FieldPtr field, const Poly& p);

  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<NFElem>& coeffs() const { return c_; }
  NFElem coeff(std::size_t i) const;
  const NFElem& leading() const { return c_.back(); }

  KPoly monic() const;
  KPoly derivative() const;
  NFElem eval(const NFElem& x) const;
  /// Rational polynomial if every coefficient is rational.
  bool is_rational() const;
  Poly to_rational() const;

  friend KPoly operator+(const KPoly& a, const KPoly& b);
  friend KPoly operator-(const KPoly& a, const KPoly& b);
  friend KPoly operator*(const KPoly& a, const KPoly& b);
  friend KPoly operator*(const KPoly& a, const NFElem& c);
  friend bool operator==(const KPoly& a, const KPoly& b);

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  FieldPtr field_;
  std::vector<NFElem> c_;
};

std::pair<KPoly, KPoly> divmod(const KPoly& a, const KPoly& b);
KPoly operator%(const KPoly& a, const KPoly& b);
/// Monic gcd.
KPoly gcd(KPoly a, KPoly b);
bool is_squarefree(const KPoly& f);
/// p(x + c) reduced modulo m.
KPoly compose_shift_mod(const Poly& p, const NFElem& c, const KPoly& m);

}  // namespace cyclo
