#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over Q.
 *
 * Coefficients are stored lowest degree first and trimmed so the leading
 * coefficient is nonzero; the zero polynomial has no coefficients and
 * degree -1.
 */

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclo/rational.hpp"

namespace cyclo {

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs);

  static Poly constant(const Rat& c);
  static Poly monomial(const Rat& c, std::size_t k);
  static Poly x() { return monomial(Rat(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  /// Coefficient of x^i (zero past the degree).
  Rat coeff(std::size_t i) const;
  const Rat& leading() const;
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& x) const;
  CRat eval(const CRat& z) const;
  Poly derivative() const;
  Poly monic() const;
  /// this(g(x))
  Poly compose(const Poly& g) const;
  /// this(x + s)
  Poly shift(const Rat& s) const;
  /// this(c * x)
  Poly scale_variable(const Rat& c) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Comma-separated coefficients "c0,c1,...,cd"; the zero polynomial is "0".
  std::string to_string() const;
  static Poly parse(std::string_view text);
  /// Human readable form such as "x^2 - 5*x + 3".
  std::string pretty(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Exact quotient; throws std::domain_error if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic gcd (zero if both inputs are zero).
Poly gcd(Poly a, Poly b);

struct ExtendedGcd {
  Poly g;  // monic gcd
  Poly s;  // s*a + t*b = g
  Poly t;
};
ExtendedGcd xgcd(const Poly& a, const Poly& b);

Poly pow(const Poly& p, unsigned k);
/// (base^k) mod m
Poly powmod(const Poly& base, unsigned long k, const Poly& m);

/// lc(a)^deg(b) * prod b(alpha) over roots alpha of a.
Rat resultant(const Poly& a, const Poly& b);
Rat discriminant(const Poly& f);

/// Yun's algorithm: f = lc * prod g_i^i with g_i monic, squarefree, pairwise coprime.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

/// Modular test first, exact gcd as a fallback.
bool is_squarefree(const Poly& f);

/// Phi_N by recursive division of x^N - 1 by Phi_d for proper divisors d.
Poly cyclotomic_polynomial(unsigned n);

/// Clears denominators and content: f = content * primitive, primitive in Z[x] with
/// positive leading coefficient.
struct PrimitiveForm {
  Rat content;
  std::vector<Int> coeffs;
};
PrimitiveForm primitive_form(const Poly& f);
Poly from_integers(const std::vector<Int>& coeffs);

/// Lagrange interpolation through (xs[i], ys[i]).
Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

}  // namespace cyclo
