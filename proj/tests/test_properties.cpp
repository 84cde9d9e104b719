#include <doctest.h>

#include "property_suites.hpp"

using namespace cyclo::props;

TEST_CASE("field axioms on random triples") {
  auto r = field_axioms(kCases, kSeed);
  CHECK(r.cases == kCases);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}

TEST_CASE("factorizations re-expand to their input") {
  auto r = factorization_reexpansion(kCases, kSeed);
  CHECK(r.cases == kCases);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}

TEST_CASE("Temperley-Lieb composition is associative") {
  auto r = tl_associativity(kCases, kSeed);
  CHECK(r.cases == kCases);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}

TEST_CASE("M3 is invariant under rescaling of its inputs") {
  auto r = m3_scaling(kCases, kSeed);
  CHECK(r.cases == kCases);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}
