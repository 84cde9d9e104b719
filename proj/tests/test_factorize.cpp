#include <doctest.h>

#include <random>
#include <set>

#include "cyclo/factor.hpp"
#include "cyclo/fp_poly.hpp"
#include "cyclo/galois.hpp"
#include "cyclo/nf_factor.hpp"
#include "cyclo/qscalar.hpp"
#include "cyclo/roots.hpp"

using namespace cyclo;

namespace {

// Brute-force factorization pattern mod p by counting roots of f in F_{p^k} through gcds with
// x^{p^k} - x, written against plain vectors rather than the library's distinct-degree code.
std::vector<int> brute_pattern(const std::vector<long>& f, long p) {
  using V = std::vector<long>;
  auto norm = [&](V a) {
    for (auto& x : a) x = ((x % p) + p) % p;
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
  };
  auto inv = [&](long a) {
    long r = 1, e = p - 2, b = a % p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  auto mod = [&](V a, const V& m) {
    a = norm(a);
    long li = inv(m.back());
    while (a.size() >= m.size()) {
      long c = a.back() * li % p;
      std::size_t s = a.size() - m.size();
      for (std::size_t i = 0; i < m.size(); ++i) a[s + i] = ((a[s + i] - c * m[i]) % p + p) % p;
      a = norm(a);
    }
    return a;
  };
  auto mul = [&](const V& a, const V& b, const V& m) {
    V r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return mod(r, m);
  };
  auto pgcd = [&](V a, V b) {
    a = norm(a);
    b = norm(b);
    while (!b.empty()) {
      V r = mod(a, b);
      a = b;
      b = r;
    }
    return a;
  };
  V g = norm(f);
  std::vector<int> pattern;
  V xp{0, 1};
  for (int k = 1; g.size() > 1; ++k) {
    V acc{1};
    // xp <- xp^p mod g
    V base = mod(xp, g);
    V r{1};
    for (long e = p; e; e >>= 1) {
      if (e & 1) r = mul(r, base, g);
      base = mul(base, base, g);
    }
    xp = r;
    V h = xp;
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] - 1 + p) % p;
    V d = pgcd(g, h);
    int cnt = static_cast<int>(d.size()) - 1;
    for (int i = 0; i < cnt / k; ++i) pattern.push_back(k);
    if (cnt > 0) {
      // g <- g / d
      V q(g.size() - d.size() + 1, 0);
      V rem = g;
      long li = inv(d.back());
      for (std::size_t i = q.size(); i-- > 0;) {
        q[i] = rem[i + d.size() - 1] * li % p;
        for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] = ((rem[i + j] - q[i] * d[j]) % p + p) % p;
      }
      g = norm(q);
      xp = mod(xp, g.size() > 1 ? g : V{0, 1});
    }
  }
  std::sort(pattern.begin(), pattern.end());
  return pattern;
}

std::set<int> subset_sums(const std::vector<int>& parts) {
  std::set<int> s{0};
  for (int d : parts) {
    std::set<int> t = s;
    for (int x : s) t.insert(x + d);
    s = t;
  }
  return s;
}

}  // namespace

TEST_CASE("factorization modulo small primes") {
  auto a = factor_mod_p(Poly{1, 0, 1}, 5);
  CHECK(a.pattern == std::vector<int>{1, 1});
  REQUIRE(a.factors.size() == 2);
  CHECK(a.factors[0] * a.factors[1] == FpPoly({1, 0, 1}, 5));
  auto b = factor_mod_p(Poly{1, 0, 1}, 3);
  CHECK(b.pattern == std::vector<int>{2});
  CHECK_THROWS_AS(factor_mod_p(Poly{1, 0, 1}, 2), std::domain_error);
}

TEST_CASE("patterns of 3x^4 - x^2 - 1 are dihedral cycle types") {
  const std::set<std::vector<int>> d4{{1, 1, 1, 1}, {1, 1, 2}, {2, 2}, {4}};
  Poly f{-1, 0, -1, 0, 3};
  std::set<std::vector<int>> seen;
  for (auto p : primes_below(100)) {
    auto pat = degree_pattern(f, p);
    if (!pat) continue;
    CHECK(*pat == brute_pattern({-1, 0, -1, 0, 3}, static_cast<long>(p)));
    CHECK(factor_mod_p(f, p).pattern == *pat);
    seen.insert(*pat);
  }
  for (const auto& s : seen) CHECK(d4.count(s) == 1);
  CHECK(seen.size() == 4);
}

TEST_CASE("rational factorization examples") {
  FactorList fl = factor_rational(Poly{-1, 0, 0, 0, 1});
  CHECK(fl.factors.size() == 3);
  CHECK(fl.expand() == Poly{-1, 0, 0, 0, 1});
  std::set<std::string> got;
  for (const auto& [g, m] : fl.factors) got.insert(g.to_string());
  CHECK(got == std::set<std::string>{"-1,1", "1,1", "1,0,1"});

  Poly phi39 = cyclotomic_polynomial(39);
  CHECK(phi39.degree() == 24);
  CHECK(is_irreducible(phi39));

  // 3x^4 - x^2 - 1: no rational roots, and no factorization (x^2+ax+b)(3x^2+cx+d) since the
  // mod 5 pattern is {4}.
  Poly lam0{Rat(-1, 3), 0, Rat(-1, 3), 0, 1};
  CHECK(rational_roots(lam0).empty());
  CHECK(brute_pattern({-1, 0, -1, 0, 3}, 5) == std::vector<int>{4});
  CHECK(is_irreducible(lam0));
  CHECK(factor_rational(lam0 * Rat(6)).content == 6);
}

TEST_CASE("rational roots by the rational root theorem") {
  auto r = rational_roots(Poly{-6, 11, -6, 1} * Poly{1, 0, 1} * Poly{-1, 2});
  CHECK(r == std::vector<Rat>{Rat(1, 2), 1, 2, 3});
}

TEST_CASE("irreducible factors pass an independent spot check") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-5, 5), deg(2, 4);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    Poly f{1};
    for (int j = 0; j < 2; ++j) {
      std::vector<Rat> co;
      int d = deg(rng);
      for (int e = 0; e < d; ++e) co.emplace_back(c(rng));
      co.emplace_back(1);
      f = f * Poly(co);
    }
    FactorList fl = factor_rational(f);
    CHECK(fl.expand() == f);
    for (const auto& [g, m] : fl.factors) {
      if (g.degree() < 2) continue;
      CHECK(rational_roots(g).empty());
      // Degrees of a hypothetical factor must be subset sums of every good pattern.
      auto pf = primitive_form(g);
      std::vector<long> gi;
      for (const auto& x : pf.coeffs) gi.push_back(x.get_si());
      std::set<int> possible;
      for (int s = 0; s <= g.degree(); ++s) possible.insert(s);
      int good = 0;
      for (auto p : primes_below(400)) {
        auto pat = degree_pattern(g, p);
        if (!pat) continue;
        CHECK(brute_pattern(gi, static_cast<long>(p)) == *pat);
        std::set<int> s = subset_sums(*pat), keep;
        for (int x : possible)
          if (s.count(x)) keep.insert(x);
        possible = keep;
        if (++good >= 3 && possible.size() == 2) break;
      }
      CHECK(good >= 3);
      CHECK(possible == std::set<int>{0, g.degree()});
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("factorization over number fields") {
  FieldPtr r13 = NField::create(Poly{-13, 0, 1}, "r13", {3.6, 0.0});
  auto fl = factor_over_field(KPoly::from_rational(r13, Poly{-13, 0, 1}));
  REQUIRE(fl.factors.size() == 2);
  CHECK(fl.expand() == KPoly::from_rational(r13, Poly{-13, 0, 1}));
  for (const auto& g : fl.factors) CHECK(g.degree() == 1);

  FieldPtr qi = cyclotomic_field(4);
  auto fi = factor_over_field(KPoly::from_rational(qi, Poly{1, 0, 1}));
  CHECK(fi.factors.size() == 2);

  CHECK_THROWS_AS(factor_over_field(KPoly::from_rational(qi, Poly{1, 2, 1})), std::domain_error);
}

TEST_CASE("factors over a number field partition the numeric roots") {
  for (int level : {0, 1}) {
    const ScalarPack& s = ScalarPack::get(level);
    Poly f = minimal_polynomial(s.lambda);
    auto fl = factor_over_field(KPoly::from_rational(s.lambda_field, f));
    CHECK(fl.expand() == KPoly::from_rational(s.lambda_field, f));
    int total = 0;
    for (const auto& g : fl.factors) total += g.degree();
    CHECK(total == f.degree());
    // Each numeric root of f is a root of exactly one factor under the designated embedding.
    for (auto z : approximate_roots(f)) {
      int hits = 0;
      for (const auto& g : fl.factors) {
        std::complex<double> v = 0;
        for (int i = g.degree(); i >= 0; --i) v = v * z + g.coeff(static_cast<std::size_t>(i)).approx();
        if (std::abs(v) < 1e-9) ++hits;
      }
      CHECK(hits == 1);
    }
    // Q(lambda) contains +-lambda only; the other conjugates lie in conjugate fields.
    CHECK(roots_in_field(f, s.lambda_field).size() == 2);
  }
}
