#pragma once

/**
 * @file branch.hpp
 * @brief The two-dimensional algebra at the branch point of the principal and dual graphs,
 * its idempotents and twisted moments, and the word algebras one and two strands further out.
 *
 * The branch algebra is span{JW, G} with G^2 = alpha G + beta JW, tr(JW) = [n+1] (spherical
 * n-box trace) and tr(G) = 0. On the principal side G is the generator S with alpha = 0 and
 * beta = lambda^2; on the dual side G is its one-click rotation with alpha = r-1, beta = r.
 */

#include <map>
#include <string>
#include <vector>

#include "cyclo/qscalar.hpp"

namespace cyclo {

enum class BranchSide { kPrincipal, kDual };
std::string to_string(BranchSide s);

struct BranchPresentation {
  int level = 0;
  int n = 4;
  BranchSide side = BranchSide::kPrincipal;
  const ScalarPack* pack = nullptr;
  FieldPtr field;              // Q(lambda) on the principal side, Q(D) on the dual side
  NFElem quad_lin;             // alpha
  NFElem quad_const;           // beta
  NFElem jw_trace_val;         // [n+1]
  NFElem g_trace_val;          // 0: the generator is uncappable
  int rotation_eigenvalue = -1;
  NFElem ptr_jw;               // ptr(JW_n) = ptr_jw * JW_{n-1}, equal to [2][n+1]/[n]
  NFElem lambda;               // principal side only

  static BranchPresentation make(int level, BranchSide side);
  /// Presentation for G' = s G: alpha -> s alpha, beta -> s^2 beta.
  BranchPresentation rescaled(const NFElem& s) const;
  /// Any element of Q(D) or Q(sqrt D) that lies in Q(D), moved into this field.
  NFElem lift(const NFElem& x) const;
};

struct BranchElem {
  NFElem jw;
  NFElem g;
  bool operator==(const BranchElem& o) const { return jw == o.jw && g == o.g; }
};

BranchElem branch_jw(const BranchPresentation& p);
BranchElem branch_gen(const BranchPresentation& p);
BranchElem branch_mul(const BranchPresentation& p, const BranchElem& a, const BranchElem& b);
BranchElem branch_add(const BranchElem& a, const BranchElem& b);
BranchElem branch_sub(const BranchElem& a, const BranchElem& b);
BranchElem branch_scale(const NFElem& c, const BranchElem& a);
NFElem branch_trace(const BranchPresentation& p, const BranchElem& a);
/// Coefficient c with ptr(a) = c JW_{n-1}.
NFElem branch_ptr(const BranchPresentation& p, const BranchElem& a);

struct IdempotentPair {
  std::string first_name, second_name;  // "P","Q" or "A","B"
  BranchElem first, second;
  NFElem trace_first, trace_second;
  bool first_idempotent = false;
  bool second_idempotent = false;
  bool orthogonal = false;
  bool complete = false;
  bool positive_traces = false;
  bool ok() const { return first_idempotent && second_idempotent && orthogonal && complete && positive_traces; }
};

/// P = (JW + G/lambda)/2, Q = (JW - G/lambda)/2 on the principal side;
/// A = (JW + G)/(r+1), B = (r JW - G)/(r+1) on the dual side.
IdempotentPair branch_idempotents(const BranchPresentation& p);

/// tr(G^k) from G^k = alpha G^{k-1} + beta G^{k-2}.
NFElem twisted_moment(const BranchPresentation& p, int k);

/// Inputs of the normalized third twisted moment M3 = moment_hat / (theta * circle^(m-1)).
struct M3Inputs {
  NFElem moment_hat;
  NFElem theta;
  NFElem circle;
  int m = 2;
};
NFElem normalized_m3_from(const M3Inputs& in);
/// Effect of rescaling the four choices of cap, cup, trivalent vertex and its dual by b, b2, t, t2.
M3Inputs rescale_m3_inputs(const M3Inputs& in, const NFElem& b, const NFElem& b2, const NFElem& t, const NFElem& t2);

struct M3Report {
  int level = 0;
  M3Inputs inputs;
  NFElem third_moment;    // tr(G^3) on the dual side, in Q(lambda)
  NFElem m3;
  NFElem closed_form;     // lambda [2n+2]/[n+2] [2]^2 / (([5]+1) [3]^(2 level + 1))
  bool matches_closed_form = false;
  bool ratio_in_index_field = false;  // m3 / lambda in Q(D)
  bool m3_in_index_field = true;
  NFElem ratio;                       // m3 / lambda, in Q(D) when certified
};
/// moment_hat = tr(G^3) / ([2]^2 lambda^3), with theta = [5]+1, circle = [3], m = n/2.
M3Report normalized_m3(int level);

/// Word algebra obtained by adding strands to the branch algebra. Level 0 is span{JW, G};
/// level L > 0 has basis {a (x) X} and {(a (x) X) e (b (x) X)} for basis words a, b of level
/// L-1, reduced by
///   (a (x) X)(b (x) X) = ab (x) X,
///   e (w (x) X) e = (ptr(w) (x) X) e, absorbed by the neighbouring word,
///   ptr(a (x) X) = loop_L a,  ptr((a (x) X) e (b (x) X)) = ab.
class TowerAlgebra {
 public:
  using Vec = std::vector<NFElem>;

  /// close_loops[L-1] is the value of the loop closed by the strand added at level L.
  TowerAlgebra(BranchPresentation pres, int max_level, std::vector<NFElem> close_loops);

  const BranchPresentation& presentation() const { return pres_; }
  int max_level() const { return max_level_; }
  std::size_t dim(int level) const { return dims_[static_cast<std::size_t>(level)]; }
  std::string word(int level, std::size_t i) const;

  Vec zero(int level) const;
  Vec from_branch(const BranchElem& a) const;
  Vec mul(int level, const Vec& x, const Vec& y) const;
  Vec add(const Vec& x, const Vec& y) const;
  Vec sub(const Vec& x, const Vec& y) const;
  Vec scale(const NFElem& c, const Vec& x) const;
  bool is_zero(const Vec& x) const;
  /// x (x) X at level+1.
  Vec plain(int level, const Vec& x) const;
  /// (x (x) X) e (y (x) X) at level+1.
  Vec sandwich(int level, const Vec& x, const Vec& y) const;
  /// Partial trace to level-1; at level 0 the result has one entry, the coefficient of JW_{n-1}.
  Vec ptr(int level, const Vec& x) const;
  std::string to_string(int level, const Vec& x) const;

 private:
  const Vec& basis_product(int level, std::size_t i, std::size_t j) const;
  Vec unit_embed(int level, const Vec& lower) const;

  BranchPresentation pres_;
  int max_level_;
  std::vector<NFElem> loops_;
  std::vector<std::size_t> dims_;
  mutable std::vector<std::map<std::pair<std::size_t, std::size_t>, Vec>> cache_;
};

struct TowerStep {
  int level = 1;
  TowerAlgebra::Vec base;    // at level-1
  TowerAlgebra::Vec result;  // at level
  NFElem coefficient;        // result = base (x) X - coefficient * sandwich(base, base)
  NFElem base_ptr;           // ptr(base) = base_ptr * (lower idempotent)
  bool coefficient_inverts_ptr = false;
  bool idempotent = false;
  bool complement_idempotent = false;  // the subtracted term is itself idempotent
  bool orthogonal = false;             // result times the subtracted term is 0
  TowerAlgebra::Vec result_ptr;        // ptr(result) at level-1
};

/// Builds base (x) X - coefficient (base (x) X) e (base (x) X) and verifies it.
/// lower is the idempotent that ptr(base) is a multiple of (ignored at level 1).
TowerStep tower_idempotent(const TowerAlgebra& alg, int level, const TowerAlgebra::Vec& base,
                           const TowerAlgebra::Vec& lower, const NFElem& coefficient);

struct TowerReport {
  int level = 0;
  std::string name;  // "P" or "Q"
  TowerStep first;   // P' or Q'
  TowerStep second;  // P'' or Q''
  NFElem expected_ptr_base;   // [2][n+1]/(2[n])
  NFElem expected_ptr_first;  // ([n+2]-[n])/([2][n+1])
  bool ptr_base_matches = false;
  bool ptr_first_matches = false;
  bool ok() const;
};

/// The tower algebra used for the principal-side idempotents: loop values 1 then D.
const TowerAlgebra& principal_tower(int level);
/// P', P'' (or Q', Q'') with the coefficients 2[n]/([2][n+1]) and [2][n+1]/([n+2]-[n]).
TowerReport tower_idempotents(int level, bool use_q);

}  // namespace cyclo
