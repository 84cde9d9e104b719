#include <doctest.h>

#include <set>

#include "cyclo/factor.hpp"
#include "cyclo/galois.hpp"
#include "cyclo/roots.hpp"

using namespace cyclo;

namespace {

const Poly kLambda0{Rat(-1, 3), 0, Rat(-1, 3), 0, 1};
const Poly kLambda1{Rat(-1, 5), 0, Rat(-2, 5), 0, Rat(3, 5), 0, 1};

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("Frobenius cycle types") {
  auto q = frobenius_cycle_types(Poly{1, 0, 1}, 500);
  std::set<Pattern> keys;
  for (const auto& [p, st] : q) keys.insert(p);
  CHECK(keys == std::set<Pattern>{{1, 1}, {2}});

  auto l0 = frobenius_cycle_types(kLambda0, 500);
  CHECK(l0.count(Pattern{4}) == 1);
  for (const auto& [p, st] : l0) {
    CHECK(st.count > 0);
    for (auto prime : st.sample_primes) CHECK(factor_mod_p(kLambda0, prime).pattern == p);
  }

  auto l1 = frobenius_cycle_types(kLambda1, 2000);
  bool order6 = l1.count(Pattern{6}) || l1.count(Pattern{1, 2, 3});
  CHECK(order6);
  for (const auto& [p, st] : l1) CHECK(std::find(p.begin(), p.end(), 4) == p.end());
}

TEST_CASE("non-cyclotomicity witnesses") {
  for (const Poly& f : {kLambda0, kLambda1}) {
    auto c = noncyclotomic_witness(f, 2000);
    REQUIRE(c.has_value());
    CHECK(c->recheck(f));
    auto pat = factor_mod_p(f, c->prime).pattern;
    CHECK(pat == c->pattern);
    CHECK(std::set<int>(pat.begin(), pat.end()).size() > 1);
  }
  auto c0 = noncyclotomic_witness(kLambda0, 2000);
  CHECK(c0->pattern == Pattern{1, 1, 2});
  CHECK_FALSE(noncyclotomic_witness(Poly{-13, 0, 1}, 2000).has_value());
  CHECK_FALSE(noncyclotomic_witness(cyclotomic_polynomial(13), 2000).has_value());
}

TEST_CASE("splitting degrees") {
  CHECK(splitting_degree(Poly{1, 0, 1}).degree == 2);
  CHECK(splitting_degree(kLambda0).degree == 8);
  CHECK(splitting_degree(kLambda1).degree == 24);
  CHECK(splitting_degree(Poly{-2, 0, 0, 1}).degree == 6);
  CHECK(splitting_degree(cyclotomic_polynomial(7)).degree == 6);
  for (const Poly& f : {kLambda0, kLambda1, Poly{-2, 0, 0, 1}, Poly{1, 0, 0, 0, 1}, Poly{-1, -1, 0, 1}}) {
    auto t = splitting_degree(f);
    CHECK(t.degree % static_cast<std::size_t>(f.degree()) == 0);
    CHECK(factorial(f.degree()) % static_cast<long>(t.degree) == 0);
    std::size_t prod = 1;
    for (int s : t.steps) prod *= static_cast<std::size_t>(s);
    CHECK(prod == t.degree);
  }
}

TEST_CASE("group identification") {
  auto g0 = identify_group(kLambda0);
  CHECK(g0.group_name == "D4");
  CHECK_FALSE(g0.abelian);
  CHECK(g0.patterns_realizable);
  auto g1 = identify_group(kLambda1);
  CHECK(g1.group_name == "A4xC2");
  CHECK_FALSE(g1.abelian);
  CHECK(g1.patterns_realizable);
  auto z8 = identify_group(Poly{1, 0, 0, 0, 1});
  CHECK(z8.splitting_degree == 4);
  CHECK(z8.abelian);
  for (const auto* r : {&g0, &g1, &z8}) {
    auto types = group_cycle_types(r->group_name);
    for (const auto& [p, st] : r->cycle_types) CHECK(std::find(types.begin(), types.end(), p) != types.end());
  }
}

TEST_CASE("wreath product isomorphism") {
  auto w = wreath_isomorphism();
  REQUIRE(w.has_value());
  CHECK(w->source_generators.size() == w->target_images.size());
  auto src = generate_group(w->source_generators);
  auto dst = generate_group(w->target_images);
  CHECK(src.size() == 24);
  CHECK(dst.size() == 24);
  CHECK_FALSE(is_abelian(src));
}

TEST_CASE("permutation groups") {
  Perm c = from_cycles(4, {{0, 1, 2, 3}});
  Perm f = from_cycles(4, {{1, 3}});
  CHECK(order(c) == 4);
  CHECK(cycle_type(f) == std::vector<int>{1, 1, 2});
  CHECK(compose(c, inverse(c)) == identity_perm(4));
  auto d4 = generate_group({c, f});
  CHECK(d4.size() == 8);
  CHECK(d4.front() == identity_perm(4));
  CHECK_FALSE(is_abelian(d4));
  CHECK(cycle_string(c) == "(0 1 2 3)");
  CHECK(find_isomorphism({c, f}, {from_cycles(4, {{0, 2, 1, 3}}), from_cycles(4, {{0, 1}})}).has_value());
  CHECK_FALSE(find_isomorphism({c}, {from_cycles(4, {{0, 1}, {2, 3}}), from_cycles(4, {{0, 2}, {1, 3}})}).has_value());
}

TEST_CASE("conjugate fields") {
  auto c0 = conjugate_orbit(kLambda0);
  CHECK(c0.size() == 2);
  auto roots = isolate_roots(kLambda0);
  for (const auto& cls : c0) {
    CHECK(cls.roots.size() == 2);
    bool re = roots[cls.roots[0]].real;
    for (auto i : cls.roots) CHECK(roots[i].real == re);
  }
  CHECK(conjugate_orbit(Poly{-13, 0, 1}).size() == 1);
  CHECK(conjugate_orbit(Poly{1, 0, 0, 0, 1}).size() == 1);
  CHECK(conjugate_orbit(kLambda1).size() == 3);
  CHECK(conjugate_orbit(Poly{-2, 0, 0, 1}).size() == 3);
}
