#pragma once

/**
 * @file qscalar.hpp
 * @brief Quantum integers in Q(sqrt D), the two loop conventions, and the scalar package
 * (index, branch ratio, twist scalar) for the two planar algebras of level 0 and 1.
 */

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cyclo/subfield.hpp"

namespace cyclo {

enum class Convention { kLopsided, kSpherical };
/// kPlus: the leftmost region is unshaded.
enum class Shading { kPlus, kMinus };
enum class Side { kLeft, kRight };

std::string to_string(Convention c);
std::string to_string(Shading s);
std::string to_string(Side s);
inline Shading flip(Shading s) { return s == Shading::kPlus ? Shading::kMinus : Shading::kPlus; }

/// The index D as a root of its minimal polynomial (largest real root).
Poly index_min_poly(int level);

struct PlanarParams {
  int level = 0;
  int n = 4;                  // 4*level + 4
  FieldPtr index_field;       // Q(D)
  FieldPtr field;             // Q(sqrt D)
  FieldHom index_to_field;    // Q(D) -> Q(sqrt D)
  NFElem sqrt_d;              // [2]
  NFElem d;                   // the index, in Q(sqrt D)
  Convention convention = Convention::kLopsided;
  NFElem d_plus;              // unshaded modulus
  NFElem d_minus;             // shaded modulus

  /// Cached per (level, convention); both conventions share fields.
  static const PlanarParams& get(int level, Convention convention);
  /// Loop value for a loop whose interior has the given shading (true = shaded).
  const NFElem& loop(bool shaded_interior) const { return shaded_interior ? d_minus : d_plus; }
};

/// [m] by the Chebyshev recurrence [m+1] = [2][m] - [m-1]; memoized.
NFElem quantum_int(const PlanarParams& params, int m);

struct ScalarPack {
  int level = 0;
  int n = 4;
  const PlanarParams* params = nullptr;  // lopsided
  NFElem d_index;                        // D in Q(D)
  NFElem rcheck;                         // [n+2]/[n] in Q(sqrt D)
  NFElem rcheck_index;                   // the same, written in Q(D)
  NFElem lambda_sq_index;                // -[n+2]/([2]^2 [n]) in Q(D)
  FieldPtr lambda_field;                 // Q(lambda)
  NFElem lambda;
  FieldHom index_to_lambda;              // Q(D) -> Q(lambda)
  std::vector<int> odd_members;          // odd m <= 2n+3 with [m] certified in Q(D)
  std::map<std::string, bool> even_ratios;  // "[a]/[b]" -> certified in Q(D)

  static const ScalarPack& get(int level);
};

/// Writes x (in Q(sqrt D)) as an element of Q(D), or throws std::domain_error if it is not one.
NFElem to_index_field(const PlanarParams& params, const NFElem& x);
bool in_index_field(const PlanarParams& params, const NFElem& x);

/// Trace of JW_k from the tables of the two conventions, with the odd-k side conversion
/// tr_R = (d_-+ / d_+-) tr_L for shading +-.
NFElem jw_trace(const PlanarParams& params, int k, Shading shading, Side side);

/// Exponent e with lopsided trace = spherical trace * D^(-e/2) for the closure on the given side.
int trace_rescaling_exponent(int k, Shading shading, Side side);

struct QIntIdentityReport {
  bool ok = true;
  std::vector<int> recurrence_failures;  // m with [2][m] != [m+1] + [m-1]
  bool square_identity = false;          // [2]^2 = [3] + 1
  bool product_identity = false;         // ([n+2] - [n])[n+1] = [2n+2]
};
QIntIdentityReport verify_qint_identities(const PlanarParams& params);

}  // namespace cyclo
