#pragma once

/**
 * @file center.hpp
 * @brief T-matrix data of the Drinfel'd center of the principal even part of level 0:
 * the field generated by its entries, eigenvalue-averaging projectors, and the separation of
 * the summands of the induced objects.
 */

#include <istream>
#include <map>
#include <string>
#include <vector>

#include "cyclo/number_field.hpp"

namespace cyclo {

struct CenterData {
  int modulus = 39;
  std::vector<std::string> simples;
  std::vector<int> exponents;  // T entry of simples[i] is zeta^exponents[i]
  /// Induction of an object of the even part, as a multiset of simples.
  std::map<std::string, std::vector<std::string>> induction;

  /// 1, pi1, pi2, mu1..mu6, sigma0, sigma1, sigma2 with exponents
  /// (0,0,0,6,-6,15,-15,18,-18,0,13,-13), I(1) = {1,pi1,pi2,pi2}, I(JW2) = all but 1.
  static CenterData haagerup();
  /// Text table: "modulus N" line, then "label exponent" lines; '#' comments. No induction data.
  static CenterData parse(std::istream& in);

  std::vector<NFElem> t_eigenvalues() const;  // in Q(zeta_modulus)
  int exponent_of(const std::string& label) const;
};

struct TFieldReport {
  bool pass = false;
  int generated_gcd = 0;             // gcd of the exponents and the modulus
  std::vector<long> combination;     // sum combination[i] * exponents[i] = generated_gcd mod N
  bool product_equals_generator = false;  // prod T_i^combination[i] = zeta, when gcd = 1
  bool generator_in_entry_field = false;  // express_in_subfield(zeta, Q(zeta^gcd))
  std::string witness;
};
TFieldReport t_field_check(const CenterData& data);

struct AveragingReport {
  bool pass = false;
  std::vector<NFElem> values;  // (1/N) sum_i zeta^{mi} theta^i per eigenvalue
  std::vector<bool> expected;  // theta == zeta^{-m}
};
/// Throws std::invalid_argument if an eigenvalue is not an N-th root of unity.
AveragingReport averaging_projector_identity(int n, const std::vector<NFElem>& eigenvalues, int m);

struct AveragingSweep {
  int checks = 0;
  int failures = 0;
  bool partition_of_unity = false;  // sum over m of the projector values is 1 per eigenvalue
  bool roots_of_unity = false;      // every eigenvalue^N = 1
  bool pass() const { return failures == 0 && partition_of_unity && roots_of_unity; }
};
AveragingSweep averaging_sweep(const CenterData& data);

struct SeparationReport {
  bool pass = false;
  std::vector<std::string> isolated;  // summands of I(JW2) with an eigenvalue no other summand has
  std::map<int, std::vector<std::string>> shared;  // exponent -> summands sharing it
  int pi2_in_unit_induction = 0;
  int sigma0_in_unit_induction = 0;
  std::string witness;
};
SeparationReport eigenprojector_separation(const CenterData& data);

struct QuadraticCoefficientReport {
  bool pass = false;
  NFElem gauss_sum;   // sum_a (a/13) zeta13^a, inside Q(zeta39)
  bool gauss_square = false;     // gauss_sum^2 = 13
  bool gauss_positive = false;   // equals +sqrt(13) under the designated embedding
  NFElem coefficient;            // (5 + sqrt 13)/18 in Q(zeta39)
  bool subfield_roundtrip = false;  // express_in_subfield recovers (5 + s)/18 in Q(sqrt 13)
};
/// (5 + sqrt 13)/18 lies in Q(zeta39).
QuadraticCoefficientReport quadratic_coefficient_membership();

}  // namespace cyclo
