#include <doctest.h>

#include "cyclo/tl.hpp"

using namespace cyclo;

namespace {

long catalan(int k) {
  long c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

const PlanarParams& lop(int level = 0) { return PlanarParams::get(level, Convention::kLopsided); }
const PlanarParams& sph(int level = 0) { return PlanarParams::get(level, Convention::kSpherical); }

}  // namespace

TEST_CASE("diagram enumeration matches Catalan numbers") {
  for (int k = 0; k <= 6; ++k) {
    auto ds = enumerate_diagrams(k, k);
    CHECK(static_cast<long>(ds.size()) == catalan(k));
    for (const auto& d : ds) CHECK(d.is_planar());
  }
  CHECK(static_cast<long>(enumerate_diagrams(1, 5).size()) == catalan(3));
  CHECK(enumerate_diagrams(2, 3).empty());
}

TEST_CASE("basic diagrams") {
  CHECK(TLDiagram::identity(3).through_strands() == 3);
  CHECK(TLDiagram::generator(3, 1).through_strands() == 1);
  CHECK(TLDiagram::cup().bottom == 0);
  CHECK(TLDiagram::cup().top == 2);
  CHECK(TLDiagram::cap().bottom == 2);
  CHECK(TLDiagram::cap().top == 0);
  TLDiagram bad = TLDiagram::identity(2);
  bad.partner = {3, 2, 1, 0};
  CHECK_FALSE(bad.is_planar());
}

TEST_CASE("closing a cup with a cap gives the loop value of its interior") {
  for (auto conv : {Convention::kLopsided, Convention::kSpherical}) {
    const PlanarParams& pp = PlanarParams::get(0, conv);
    for (auto base : {Shading::kPlus, Shading::kMinus}) {
      auto r = compose_diagrams(TLDiagram::cap(), TLDiagram::cup(), base);
      CHECK(r.result.bottom == 0);
      CHECK(r.result.top == 0);
      // Region 1 of a row is the loop interior: shaded exactly when the base is unshaded.
      CHECK(r.shaded_loops == (base == Shading::kPlus ? 1 : 0));
      CHECK(r.unshaded_loops == (base == Shading::kPlus ? 0 : 1));
      auto s = compose(TLMorphism::from_diagram(pp, TLDiagram::cap(), base), TLMorphism::from_diagram(pp, TLDiagram::cup(), base));
      CHECK(s.scalar() == pp.loop(base == Shading::kPlus));
    }
  }
  auto s = compose(TLMorphism::from_diagram(lop(), TLDiagram::cap(), Shading::kMinus),
                   TLMorphism::from_diagram(lop(), TLDiagram::cup(), Shading::kMinus));
  CHECK(s.scalar() == lop().d);
}

TEST_CASE("Temperley-Lieb relations") {
  for (auto base : {Shading::kPlus, Shading::kMinus}) {
    const PlanarParams& pp = lop(1);
    auto e1 = TLMorphism::generator(pp, 3, 1, base), e2 = TLMorphism::generator(pp, 3, 2, base);
    CHECK(compose(e1, compose(e2, e1)) == e1);
    CHECK(compose(e2, compose(e1, e2)) == e2);
    // e1^2 closes a loop in region 1, e2^2 in region 2.
    CHECK(compose(e1, e1) == pp.loop(region_shaded(base, 1)) * e1);
    CHECK(compose(e2, e2) == pp.loop(region_shaded(base, 2)) * e2);
  }
}

TEST_CASE("second Jones-Wenzl idempotent") {
  for (int level : {0, 1}) {
    TLDiagram e = TLDiagram::generator(2, 1);
    NFElem two = quantum_int(lop(level), 2);
    auto p = jones_wenzl(lop(level), 2, Shading::kPlus).jw;
    CHECK(p == TLMorphism::identity(lop(level), 2, Shading::kPlus) - TLMorphism::from_diagram(lop(level), e, Shading::kPlus));
    auto m = jones_wenzl(lop(level), 2, Shading::kMinus).jw;
    CHECK(m.coefficient(e) == -(two * two).inverse());
    for (auto base : {Shading::kPlus, Shading::kMinus})
      CHECK(jones_wenzl(sph(level), 2, base).jw.coefficient(e) == -quantum_int(sph(level), 2).inverse());
  }
}

TEST_CASE("Jones-Wenzl idempotents are idempotent and uncappable") {
  for (int level : {0, 1})
    for (auto conv : {Convention::kLopsided, Convention::kSpherical})
      for (auto base : {Shading::kPlus, Shading::kMinus}) {
        const PlanarParams& pp = PlanarParams::get(level, conv);
        for (int k = 1; k <= 6; ++k) {
          auto jw = jones_wenzl(pp, k, base).jw;
          CHECK(compose(jw, jw) == jw);
          CHECK(jw.coefficient(TLDiagram::identity(k)).is_one());
          for (int i = 1; i < k; ++i) {
            auto e = TLMorphism::generator(pp, k, i, base);
            CHECK(compose(e, jw).is_zero());
            CHECK(compose(jw, e).is_zero());
          }
        }
      }
}

TEST_CASE("partial traces") {
  for (auto conv : {Convention::kLopsided, Convention::kSpherical})
    for (auto base : {Shading::kPlus, Shading::kMinus}) {
      const PlanarParams& pp = PlanarParams::get(0, conv);
      for (int k = 1; k <= 5; ++k) {
        // The closing loop on the right encloses region k.
        auto r = partial_trace(TLMorphism::identity(pp, k, base), Side::kRight);
        CHECK(r == pp.loop(region_shaded(base, k)) * TLMorphism::identity(pp, k - 1, base));
        auto l = partial_trace(TLMorphism::identity(pp, k, base), Side::kLeft);
        // On the left the loop encloses region 0 and the remaining strands start one region later.
        CHECK(l == pp.loop(region_shaded(base, 0)) * TLMorphism::identity(pp, k - 1, flip(base)));
      }
      for (int k = 1; k <= 6; ++k)
        for (auto side : {Side::kLeft, Side::kRight})
          CHECK(full_trace(jones_wenzl(pp, k, base).jw, side) == jw_trace(pp, k, base, side));
    }
}

TEST_CASE("partial trace of JW4 is a multiple of JW3") {
  for (int level : {0, 1}) {
    const PlanarParams& pp = lop(level);
    auto pt = partial_trace(jones_wenzl(pp, 4, Shading::kPlus).jw, Side::kRight);
    NFElem c = quantum_int(pp, 2) * quantum_int(pp, 5) / quantum_int(pp, 4);
    CHECK(pt == c * jones_wenzl(pp, 3, Shading::kPlus).jw);
    const PlanarParams& sp = sph(level);
    for (auto base : {Shading::kPlus, Shading::kMinus}) {
      auto s = partial_trace(jones_wenzl(sp, 4, base).jw, Side::kRight);
      CHECK(s == (quantum_int(sp, 5) / quantum_int(sp, 4)) * jones_wenzl(sp, 3, base).jw);
      auto l = partial_trace(jones_wenzl(sp, 4, base).jw, Side::kLeft);
      CHECK(l == (quantum_int(sp, 5) / quantum_int(sp, 4)) * jones_wenzl(sp, 3, flip(base)).jw);
    }
  }
}

TEST_CASE("left and right traces of one strand") {
  for (int level : {0, 1}) {
    const PlanarParams& pp = lop(level);
    for (auto base : {Shading::kPlus, Shading::kMinus}) {
      auto id = TLMorphism::identity(pp, 1, base);
      const NFElem& own = base == Shading::kPlus ? pp.d_plus : pp.d_minus;
      const NFElem& opp = base == Shading::kPlus ? pp.d_minus : pp.d_plus;
      CHECK(full_trace(id, Side::kRight) * own == full_trace(id, Side::kLeft) * opp);
      // The opposite orientation of the ratio does not hold.
      CHECK_FALSE(full_trace(id, Side::kLeft) * own == full_trace(id, Side::kRight) * opp);
    }
  }
}

TEST_CASE("critical points of small diagrams") {
  // Maxima count -1 with shading above, minima +1 with shading above.
  CHECK(TLDiagram::cap().critical_exponent(Shading::kPlus) == 0);
  CHECK(TLDiagram::cap().critical_exponent(Shading::kMinus) == -1);
  CHECK(TLDiagram::cup().critical_exponent(Shading::kPlus) == 1);
  CHECK(TLDiagram::cup().critical_exponent(Shading::kMinus) == 0);
  CHECK(TLDiagram::identity(4).critical_exponent(Shading::kPlus) == 0);
}

TEST_CASE("morphism arithmetic") {
  const PlanarParams& pp = lop();
  auto a = TLMorphism::identity(pp, 2, Shading::kPlus);
  auto e = TLMorphism::generator(pp, 2, 1, Shading::kPlus);
  CHECK((a + e) - e == a);
  CHECK((a - a).is_zero());
  CHECK(pp.field->from_rat(3) * a == a + a + a);
  CHECK_THROWS(compose(a, TLMorphism::identity(pp, 3, Shading::kPlus)));
  CHECK_THROWS(compose(a, TLMorphism::identity(pp, 2, Shading::kMinus)));
  CHECK(tensor_id_right(a) == TLMorphism::identity(pp, 3, Shading::kPlus));
}
