#include <doctest.h>

#include <numeric>
#include <sstream>

#include "cyclo/center.hpp"

using namespace cyclo;

TEST_CASE("T-matrix data") {
  auto d = CenterData::haagerup();
  CHECK(d.simples.size() == 12);
  CHECK(d.exponent_of("mu1") == 6);
  CHECK(d.exponent_of("sigma2") == -13);
  CHECK_THROWS_AS(d.exponent_of("nu"), std::invalid_argument);
  for (const auto& t : d.t_eigenvalues()) CHECK(t.pow(39).is_one());
}

TEST_CASE("entries generate the full cyclotomic field") {
  auto r = t_field_check(CenterData::haagerup());
  CHECK(r.pass);
  CHECK(r.generated_gcd == 1);
  CHECK(r.product_equals_generator);
  long s = 0;
  auto d = CenterData::haagerup();
  for (std::size_t i = 0; i < d.exponents.size(); ++i) s += r.combination[i] * d.exponents[i];
  CHECK(((s % 39) + 39) % 39 == 1);
  CHECK(std::gcd(std::gcd(6, 13), 39) == 1);
}

TEST_CASE("smaller exponent sets generate smaller fields") {
  std::istringstream no13("modulus 39\na 6\nb 15\nc 18\n");
  auto r = t_field_check(CenterData::parse(no13));
  CHECK_FALSE(r.pass);
  CHECK(r.generated_gcd == 3);
  CHECK(r.witness.find("Q(zeta13)") != std::string::npos);

  std::istringstream trivial("modulus 39\na 0\nb 0\n");
  auto t = t_field_check(CenterData::parse(trivial));
  CHECK_FALSE(t.pass);
  CHECK(t.generated_gcd == 39);
  CHECK(t.witness.find("generate Q") != std::string::npos);
  CHECK(t.witness.find("zeta") == std::string::npos);

  std::istringstream pair("modulus 39 # comment\nx 6\ny 13\n");
  CHECK(t_field_check(CenterData::parse(pair)).pass);

  std::istringstream bad("modulus 39\nx\n");
  CHECK_THROWS_AS(CenterData::parse(bad), std::invalid_argument);
}

TEST_CASE("averaging projector examples") {
  FieldPtr k = cyclotomic_field(39);
  NFElem z = k->gen();
  auto a = averaging_projector_identity(39, {z.pow(6)}, 33);
  CHECK(a.pass);
  CHECK(a.values[0].is_one());
  auto b = averaging_projector_identity(39, {z.pow(6)}, 0);
  CHECK(b.values[0].is_zero());
  // N = 2: (1 + (-1)^1 theta)/2 is (1 - theta)/2.
  FieldPtr k2 = cyclotomic_field(2);
  auto c = averaging_projector_identity(2, {k2->one(), k2->from_rat(-1)}, 1);
  CHECK(c.values[0].is_zero());
  CHECK(c.values[1].is_one());
  CHECK_THROWS_AS(averaging_projector_identity(39, {z + Rat(1)}, 0), std::invalid_argument);
}

TEST_CASE("full averaging sweep") {
  auto s = averaging_sweep(CenterData::haagerup());
  CHECK(s.checks == 39 * 12);
  CHECK(s.failures == 0);
  CHECK(s.partition_of_unity);
  CHECK(s.roots_of_unity);
}

TEST_CASE("separation of induced summands") {
  auto r = eigenprojector_separation(CenterData::haagerup());
  CHECK(r.pass);
  CHECK(r.isolated == std::vector<std::string>{"mu1", "mu2", "mu3", "mu4", "mu5", "mu6", "sigma1", "sigma2"});
  REQUIRE(r.shared.count(0) == 1);
  CHECK(r.shared.at(0) == std::vector<std::string>{"pi1", "pi2", "sigma0"});
  CHECK(r.pi2_in_unit_induction == 2);
}

TEST_CASE("quadratic coefficient lies in the cyclotomic field") {
  auto r = quadratic_coefficient_membership();
  CHECK(r.pass);
  CHECK(r.gauss_square);
  CHECK(r.gauss_positive);
  CHECK(std::abs(r.coefficient.approx().real() - (5 + std::sqrt(13.0)) / 18) < 1e-12);
}
