#include "property_suites.hpp"

#include <random>
#include <vector>

#include "cyclo/branch.hpp"
#include "cyclo/factor.hpp"
#include "cyclo/tl.hpp"

namespace cyclo::props {

namespace {

Rat small_rat(std::mt19937_64& rng, int range = 9, int den = 5) {
  std::uniform_int_distribution<int> n(-range, range), d(1, den);
  return make_rat(n(rng), d(rng));
}

NFElem random_elem(const FieldPtr& k, std::mt19937_64& rng) {
  std::vector<Rat> c;
  for (int i = 0; i < k->degree(); ++i) c.push_back(small_rat(rng));
  return k->from_coords(c);
}

NFElem random_nonzero(const FieldPtr& k, std::mt19937_64& rng) {
  for (;;) {
    NFElem x = random_elem(k, rng);
    if (!x.is_zero()) return x;
  }
}

void fail(SuiteResult& r, const std::string& what) {
  if (r.failures++ == 0) r.first_failure = what;
}

}  // namespace

SuiteResult field_axioms(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<FieldPtr> fields{ScalarPack::get(0).lambda_field, ScalarPack::get(1).lambda_field,
                                     PlanarParams::get(1, Convention::kLopsided).field, cyclotomic_field(13)};
  SuiteResult r;
  for (int i = 0; i < cases; ++i) {
    const FieldPtr& k = fields[static_cast<std::size_t>(i) % fields.size()];
    NFElem a = random_elem(k, rng), b = random_elem(k, rng), c = random_nonzero(k, rng);
    ++r.cases;
    bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
              a + b == b + a && a * b == b * a && (a - b) + b == a && c * c.inverse() == k->one() && (a / c) * c == a &&
              a + k->zero() == a && a * k->one() == a;
    if (!ok) fail(r, k->name() + ": " + a.to_string() + ", " + b.to_string() + ", " + c.to_string());
  }
  return r;
}

SuiteResult factorization_reexpansion(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> nfac(1, 3), deg(1, 3), coef(-6, 6), mult(1, 2);
  SuiteResult r;
  for (int i = 0; i < cases; ++i) {
    Poly f = Poly::constant(small_rat(rng) + Rat(10));
    int k = nfac(rng);
    for (int j = 0; j < k; ++j) {
      std::vector<Rat> c;
      int d = deg(rng);
      for (int e = 0; e < d; ++e) c.push_back(coef(rng));
      int lead = coef(rng);
      c.push_back(lead == 0 ? 1 : lead);
      Poly g(c);
      f = f * (mult(rng) == 2 && d == 1 ? g * g : g);
    }
    ++r.cases;
    FactorList fl = factor_rational(f);
    bool ok = fl.expand() == f;
    for (const auto& [g, m] : fl.factors) ok = ok && g.is_monic() && m >= 1;
    if (!ok) fail(r, f.pretty() + " -> " + fl.to_string());
  }
  return r;
}

SuiteResult tl_associativity(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> strands(0, 5), nterms(1, 3), pick_conv(0, 1), pick_base(0, 1), pick_level(0, 1);
  SuiteResult r;
  std::map<std::pair<int, int>, std::vector<TLDiagram>> cache;
  auto diagrams = [&](int b, int t) -> const std::vector<TLDiagram>& {
    auto it = cache.find({b, t});
    if (it == cache.end()) it = cache.emplace(std::make_pair(b, t), enumerate_diagrams(b, t)).first;
    return it->second;
  };
  for (int i = 0; i < cases; ++i) {
    const PlanarParams& pp = PlanarParams::get(pick_level(rng), pick_conv(rng) ? Convention::kSpherical : Convention::kLopsided);
    Shading base = pick_base(rng) ? Shading::kMinus : Shading::kPlus;
    // Boundary sizes a -> b -> c -> d with equal parity.
    int a = strands(rng);
    int sizes[4] = {a, 0, 0, 0};
    for (int j = 1; j < 4; ++j) {
      int s = strands(rng);
      if ((s + a) % 2) s = s == 5 ? 4 : s + 1;
      sizes[j] = s;
    }
    auto random_morphism = [&](int bottom, int top) {
      TLMorphism m(pp, bottom, top, base);
      const auto& ds = diagrams(bottom, top);
      std::uniform_int_distribution<std::size_t> pick(0, ds.size() - 1);
      int t = nterms(rng);
      for (int j = 0; j < t; ++j) m.add(ds[pick(rng)], pp.sqrt_d * small_rat(rng) + small_rat(rng));
      return m;
    };
    TLMorphism h = random_morphism(sizes[0], sizes[1]);
    TLMorphism g = random_morphism(sizes[1], sizes[2]);
    TLMorphism f = random_morphism(sizes[2], sizes[3]);
    ++r.cases;
    if (!(compose(compose(f, g), h) == compose(f, compose(g, h))))
      fail(r, "sizes " + std::to_string(sizes[0]) + "," + std::to_string(sizes[1]) + "," + std::to_string(sizes[2]) + "," +
                  std::to_string(sizes[3]));
  }
  return r;
}

SuiteResult m3_scaling(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SuiteResult r;
  const M3Inputs base[2] = {normalized_m3(0).inputs, normalized_m3(1).inputs};
  const NFElem m3[2] = {normalized_m3_from(base[0]), normalized_m3_from(base[1])};
  for (int i = 0; i < cases; ++i) {
    int level = i % 2;
    const FieldPtr& k = base[level].moment_hat.field();
    NFElem b = random_nonzero(k, rng), b2 = random_nonzero(k, rng), t = random_nonzero(k, rng), t2 = random_nonzero(k, rng);
    M3Inputs scaled = rescale_m3_inputs(base[level], b, b2, t, t2);
    ++r.cases;
    // The inputs themselves move; only the normalized ratio is invariant.
    bool moved = scaled.theta == base[level].theta * t * t2 && scaled.circle == base[level].circle * b * b2;
    if (!moved || normalized_m3_from(scaled) != m3[level]) fail(r, "level " + std::to_string(level) + " scale " + b.to_string());
  }
  return r;
}

}  // namespace cyclo::props
