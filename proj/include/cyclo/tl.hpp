#pragma once

/**
 * @file tl.hpp
 * @brief Shaded Temperley-Lieb diagrams with separate loop moduli, Jones-Wenzl idempotents
 * and partial traces.
 *
 * Boundary points: bottom 0..b-1 then top 0..t-1, each row numbered left to right. Region r of
 * a row lies between points r-1 and r; region 0 is the leftmost region and has the base
 * shading. A closed loop is valued by the shading of its interior (shaded: d_minus).
 */

#include <map>
#include <string>
#include <vector>

#include "cyclo/qscalar.hpp"

namespace cyclo {

struct TLDiagram {
  int bottom = 0;
  int top = 0;
  std::vector<int> partner;  // size bottom + top

  static TLDiagram identity(int k);
  /// Cup-cap joining strands i and i+1 (1-based i) on k strands.
  static TLDiagram generator(int k, int i);
  /// 0 -> 2 and 2 -> 0 arcs.
  static TLDiagram cup();
  static TLDiagram cap();

  bool is_planar() const;
  int through_strands() const;
  /// Signed count of critical points shaded above and unshaded below (minima +1, maxima -1).
  int critical_exponent(Shading base) const;
  std::string ascii() const;
  bool operator<(const TLDiagram& o) const { return partner < o.partner; }
  bool operator==(const TLDiagram& o) const { return bottom == o.bottom && top == o.top && partner == o.partner; }
};

/// All planar pairings from b to t points.
std::vector<TLDiagram> enumerate_diagrams(int bottom, int top);

/// Whether region r (on either row) is shaded.
inline bool region_shaded(Shading base, int r) { return (base == Shading::kMinus) != (r % 2 != 0); }

struct DiagramProduct {
  TLDiagram result;
  int shaded_loops = 0;
  int unshaded_loops = 0;
};
/// upper o lower (lower is applied first; lower.top must equal upper.bottom).
DiagramProduct compose_diagrams(const TLDiagram& upper, const TLDiagram& lower, Shading base);

class TLMorphism {
 public:
  TLMorphism(const PlanarParams& params, int bottom, int top, Shading base);

  static TLMorphism identity(const PlanarParams& params, int k, Shading base);
  static TLMorphism generator(const PlanarParams& params, int k, int i, Shading base);
  static TLMorphism from_diagram(const PlanarParams& params, const TLDiagram& d, Shading base);

  const PlanarParams& params() const { return *params_; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  Shading base() const { return base_; }
  const std::map<TLDiagram, NFElem>& terms() const { return terms_; }
  NFElem coefficient(const TLDiagram& d) const;
  bool is_zero() const { return terms_.empty(); }

  void add(const TLDiagram& d, const NFElem& c);

  friend TLMorphism operator+(const TLMorphism& a, const TLMorphism& b);
  friend TLMorphism operator-(const TLMorphism& a, const TLMorphism& b);
  friend TLMorphism operator*(const NFElem& c, const TLMorphism& a);
  friend bool operator==(const TLMorphism& a, const TLMorphism& b);

  /// Scalar value of a morphism 0 -> 0.
  NFElem scalar() const;
  std::string to_string() const;

 private:
  const PlanarParams* params_;
  int bottom_, top_;
  Shading base_;
  std::map<TLDiagram, NFElem> terms_;
};

/// f o g: g first, then f. Throws std::invalid_argument on boundary or shading mismatch.
TLMorphism compose(const TLMorphism& f, const TLMorphism& g);
/// f (x) id: one extra through strand on the right.
TLMorphism tensor_id_right(const TLMorphism& f);
/// Closes the rightmost or leftmost strand of a k -> k morphism.
TLMorphism partial_trace(const TLMorphism& f, Side side);
/// Closes all strands on one side.
NFElem full_trace(const TLMorphism& f, Side side);

struct JonesWenzl {
  TLMorphism jw;
  std::vector<NFElem> recursion_coefficients;  // c_j in JW_{j+1} = X - c_j X e_j X
};

/// JW_k by the Wenzl recursion with X = JW_j (x) id; c_j = 1/mu solved from X e_j X e_j = mu X e_j.
JonesWenzl jones_wenzl(const PlanarParams& params, int k, Shading base);

}  // namespace cyclo
