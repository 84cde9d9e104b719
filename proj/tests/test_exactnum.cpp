#include <doctest.h>

#include <random>

#include "cyclo/factor.hpp"
#include "cyclo/qscalar.hpp"
#include "cyclo/subfield.hpp"

using namespace cyclo;

namespace {

// Cyclotomic polynomial by the Moebius product, in plain integer arithmetic.
std::vector<long> moebius_cyclotomic(int n) {
  auto mu = [](int m) {
    int r = 1;
    for (int p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) return 0;
        r = -r;
      }
    return m > 1 ? -r : r;
  };
  std::vector<long> num{1}, den{1};
  auto mul_binomial = [](std::vector<long>& a, int d) {  // a *= (x^d - 1)
    std::vector<long> r(a.size() + static_cast<std::size_t>(d), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      r[i + static_cast<std::size_t>(d)] += a[i];
      r[i] -= a[i];
    }
    a = r;
  };
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    int m = mu(n / d);
    if (m == 1) mul_binomial(num, d);
    if (m == -1) mul_binomial(den, d);
  }
  // Exact long division num / den, both monic up to sign.
  std::vector<long> q(num.size() - den.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = num[i + den.size() - 1] / den.back();
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q[i] * den[j];
  }
  return q;
}

Poly from_longs(const std::vector<long>& c) {
  std::vector<Rat> r;
  for (long x : c) r.emplace_back(x);
  return Poly(r);
}

bool box_near(const ComplexBox& b, double re, double im, double tol) {
  return to_double(b.re_lo) >= re - tol && to_double(b.re_hi) <= re + tol && to_double(b.im_lo) >= im - tol &&
         to_double(b.im_hi) <= im + tol;
}

FieldPtr sqrt13() { return NField::create(Poly{-13, 0, 1}, "r13", {3.6, 0.0}); }

}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(parse_rat(" -6/4 ") == Rat(-3, 2));
  CHECK(to_string(Rat(-3, 2)) == "-3/2");
  CHECK(to_string(make_rat(4, 2)) == "2");
  CHECK_THROWS_AS(make_rat(1, 0), std::domain_error);
  CHECK(sqrt_lower(Rat(2), 40) <= Rat(14142135623, 10000000000) + Rat(1, 1000000000));
  CHECK(sqrt_lower(Rat(2), 40) * sqrt_lower(Rat(2), 40) <= 2);
  CHECK(sqrt_upper(Rat(2), 40) * sqrt_upper(Rat(2), 40) >= 2);
}

TEST_CASE("polynomial text format round-trips") {
  Poly f{Rat(1, 2), 0, -3, 1};
  CHECK(f.to_string() == "1/2,0,-3,1");
  CHECK(Poly::parse(f.to_string()) == f);
  CHECK(Poly().to_string() == "0");
  CHECK(Poly::parse("0").is_zero());
  CHECK(Poly{3, -5, 1}.pretty() == "x^2 - 5*x + 3");
  CHECK(Poly{Rat(2, 4), Rat(6, 3)} == Poly{Rat(1, 2), 2});
}

TEST_CASE("polynomial gcd, resultant and discriminant") {
  Poly a = Poly{-1, 1} * Poly{2, 1}, b = Poly{-1, 1} * Poly{3, 0, 1};
  CHECK(gcd(a, b) == Poly{-1, 1});
  auto e = xgcd(a, b);
  CHECK(e.s * a + e.t * b == e.g);
  CHECK(discriminant(Poly{3, -5, 1}) == 13);
  // (sqrt13 - 5)(-sqrt13 - 5) = 12
  CHECK(resultant(Poly{-13, 0, 1}, Poly{-5, 1}) == 12);
  auto sq = squarefree_decomposition(Poly{-1, 1} * Poly{-1, 1} * Poly{1, 0, 1});
  REQUIRE(sq.size() == 2);
  CHECK(sq[0].first == Poly{1, 0, 1});
  CHECK(sq[1] == std::make_pair(Poly{-1, 1}, 2));
  CHECK_THROWS_AS(exact_div(Poly{1, 0, 1}, Poly{-1, 1}), std::domain_error);
}

TEST_CASE("field arithmetic examples") {
  FieldPtr k = sqrt13();
  NFElem s = k->gen();
  CHECK(s * s == k->from_rat(13));
  NFElem a = s + Rat(2);
  CHECK((a / a).is_one());
  CHECK_THROWS(k->zero().inverse());
}

TEST_CASE("minimal polynomials") {
  FieldPtr k = sqrt13();
  CHECK(minimal_polynomial(k->zero()) == Poly{0, 1});
  NFElem d0 = (k->gen() + Rat(5)) * Rat(1, 2);
  CHECK(minimal_polynomial(d0) == Poly{3, -5, 1});
  // lambda0^2 = (1 - sqrt13)/6: (6x^2 - 1)^2 = 13.
  const ScalarPack& p = ScalarPack::get(0);
  CHECK(minimal_polynomial(p.lambda) == Poly{Rat(-1, 3), 0, Rat(-1, 3), 0, 1});
}

TEST_CASE("minimal polynomial vanishes and has degree dividing the field degree") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-4, 4);
  for (const FieldPtr& k : {ScalarPack::get(1).lambda_field, cyclotomic_field(12), sqrt13()}) {
    for (int t = 0; t < 20; ++t) {
      std::vector<Rat> co;
      for (int i = 0; i < k->degree(); ++i) co.emplace_back(c(rng) * (i % 2 ? 0 : 1) + (t % 3 == 0 ? 0 : c(rng)));
      NFElem a = k->from_coords(co);
      Poly m = minimal_polynomial(a);
      NFElem v = k->zero();
      for (int i = m.degree(); i >= 0; --i) v = v * a + m.coeff(static_cast<std::size_t>(i));
      CHECK(v.is_zero());
      CHECK(k->degree() % m.degree() == 0);
    }
  }
}

TEST_CASE("embeddings of the constants") {
  CHECK(box_near(embed(ScalarPack::get(0).d_index, 128), 4.30278, 0, 1e-4));
  CHECK(box_near(embed(ScalarPack::get(1).d_index, 128), 4.3772, 0, 1e-4));
  CHECK(box_near(embed(ScalarPack::get(0).lambda, 128), 0, 0.658983, 1e-5));
  CHECK(box_near(embed(ScalarPack::get(1).lambda, 128), 0, 0.648585, 1e-5));
  ComplexBox b = embed(ScalarPack::get(0).d_index, 200);
  CHECK(b.width() <= Rat(1, 1) / Rat(Int(1) << 200));
}

TEST_CASE("embedding respects products") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(-5, 5);
  FieldPtr k = ScalarPack::get(1).lambda_field;
  for (int t = 0; t < 30; ++t) {
    std::vector<Rat> x, y;
    for (int i = 0; i < k->degree(); ++i) {
      x.emplace_back(c(rng));
      y.emplace_back(c(rng));
    }
    NFElem a = k->from_coords(x), b = k->from_coords(y);
    ComplexBox ba = embed(a, 80), bb = embed(b, 80), bp = embed(a * b, 80);
    auto hull = [](std::initializer_list<Rat> v) { return std::make_pair(std::min(v), std::max(v)); };
    auto rr = hull({ba.re_lo * bb.re_lo, ba.re_lo * bb.re_hi, ba.re_hi * bb.re_lo, ba.re_hi * bb.re_hi});
    auto ii = hull({ba.im_lo * bb.im_lo, ba.im_lo * bb.im_hi, ba.im_hi * bb.im_lo, ba.im_hi * bb.im_hi});
    auto ri = hull({ba.re_lo * bb.im_lo, ba.re_lo * bb.im_hi, ba.re_hi * bb.im_lo, ba.re_hi * bb.im_hi});
    auto ir = hull({ba.im_lo * bb.re_lo, ba.im_lo * bb.re_hi, ba.im_hi * bb.re_lo, ba.im_hi * bb.re_hi});
    ComplexBox prod{rr.first - ii.second, rr.second - ii.first, ri.first + ir.first, ri.second + ir.second};
    CHECK(prod.overlaps(bp));
  }
}

TEST_CASE("cyclotomic fields") {
  CHECK(cyclotomic_field(1)->min_poly() == Poly{-1, 1});
  std::vector<Rat> ones(13, Rat(1));
  CHECK(cyclotomic_field(13)->min_poly() == Poly(ones));
  CHECK(cyclotomic_field(39)->min_poly() == from_longs(moebius_cyclotomic(39)));
  CHECK(cyclotomic_field(39)->degree() == 24);
  for (unsigned n : {1u, 2u, 5u, 8u, 12u, 13u, 39u}) {
    Poly m = cyclotomic_field(n)->min_poly();
    CHECK(m == from_longs(moebius_cyclotomic(static_cast<int>(n))));
    CHECK((Poly::monomial(1, n) - Poly::constant(1)) % m == Poly());
    CHECK(is_irreducible(m));
    CHECK(cyclotomic_order(cyclotomic_field(n)) == n);
  }
  CHECK(cyclotomic_order(sqrt13()) == 0);
  auto z = cyclotomic_field(39)->gen().approx();
  CHECK(std::abs(z - std::polar(1.0, 2 * 3.14159265358979323846 / 39)) < 1e-12);
}

TEST_CASE("subfield expressions") {
  FieldPtr k13 = cyclotomic_field(13);
  NFElem z = k13->gen();
  NFElem d0 = k13->from_rat(2);
  for (int e : {2, 5, 6, 7, 8, 11}) d0 = d0 - z.pow(e);
  CHECK(minimal_polynomial(d0) == Poly{3, -5, 1});
  auto ex = express_in_subfield(d0, sqrt13());
  REQUIRE(ex.present());
  CHECK(ex.value() == (ex.value().field()->gen() + Rat(5)) * Rat(1, 2));
  CHECK(ex.hom->apply(ex.value()) == d0);

  FieldPtr k39 = cyclotomic_field(39);
  auto cube = express_in_subfield(k39->gen().pow(13), cyclotomic_field(3));
  REQUIRE(cube.present());
  CHECK(cube.value() == cyclotomic_field(3)->gen());
  CHECK(cube.hom->apply(cube.value()) == k39->gen().pow(13));

  auto absent = express_in_subfield(k13->gen(), sqrt13());
  CHECK(absent.status == SubfieldExpression::Status::kAbsent);
}

TEST_CASE("re-expansion of subfield expressions reproduces the element") {
  const ScalarPack& p = ScalarPack::get(1);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-7, 7);
  for (int t = 0; t < 10; ++t) {
    NFElem x = p.d_index * Rat(c(rng)) + p.d_index * p.d_index * Rat(c(rng)) + Rat(c(rng));
    NFElem up = p.index_to_lambda.apply(x);
    auto ex = express_in_subfield(up, p.params->index_field);
    REQUIRE(ex.present());
    CHECK(ex.value() == x);
    CHECK(ex.hom->apply(ex.value()) == up);
  }
}

TEST_CASE("adjoining square roots") {
  auto i = adjoin_sqrt(NField::rationals(), NField::rationals()->from_rat(-1), "i");
  CHECK(i.field->min_poly() == Poly{1, 0, 1});
  CHECK(i.root * i.root == i.field->from_rat(-1));
  auto two = adjoin_sqrt(NField::rationals(), NField::rationals()->from_rat(4), "two");
  CHECK(two.trivial);
  CHECK(two.root == NField::rationals()->from_rat(2));

  const PlanarParams& pp = PlanarParams::get(0, Convention::kLopsided);
  NFElem rc = to_index_field(pp, quantum_int(pp, 6) / quantum_int(pp, 4));
  auto ext = adjoin_sqrt(pp.index_field, -rc, "m");
  CHECK(ext.field->degree() == 4);
  // lambda0 = sqrt(-r) / [2] and [2]^2 = D.
  NFElem d = ext.base.apply(ScalarPack::get(0).d_index);
  NFElem lam_sq = ext.root * ext.root / d;
  CHECK(minimal_polynomial(lam_sq) == Poly{Rat(-1, 3), Rat(-1, 3), 1});
}
