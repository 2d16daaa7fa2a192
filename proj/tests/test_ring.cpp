#include "zdclass/zdclass.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace zdclass;

TEST(ModRing, ArithmeticMatchesIntegerResidues) {
  const Ring r = mod_ring(18);
  ASSERT_EQ(r.order(), 18u);
  for (ElementId a = 0; a < 18; ++a) {
    for (ElementId b = 0; b < 18; ++b) {
      EXPECT_EQ(r.add(a, b), (a + b) % 18);
      EXPECT_EQ(r.mul(a, b), (a * b) % 18);
    }
    EXPECT_EQ(r.add(a, r.neg(a)), r.zero());
  }
  EXPECT_EQ(r.element_name(7), "7");
  EXPECT_EQ(r.element("11"), 11u);
}

TEST(ModRing, RejectsModulusBelowTwo) {
  EXPECT_THROW(mod_ring(1), Error);
  EXPECT_THROW(mod_ring(0), Error);
}

TEST(ProductRing, ComponentwiseArithmetic) {
  const Ring r = product_ring({mod_ring(4), mod_ring(6)});
  ASSERT_EQ(r.order(), 24u);
  const ElementId a = r.element("(3,5)");
  const ElementId b = r.element("(2,4)");
  EXPECT_EQ(r.element_name(r.mul(a, b)), "(2,2)");
  EXPECT_EQ(r.element_name(r.add(a, b)), "(1,3)");
  EXPECT_EQ(r.element_name(r.one()), "(1,1)");
  EXPECT_EQ(r.element_name(r.zero()), "(0,0)");
}

TEST(ProductRing, ElementCap) {
  EXPECT_THROW(product_ring({mod_ring(100), mod_ring(100)}, 1000), Error);
}

TEST(Characteristic, LcmOfComponents) {
  EXPECT_EQ(characteristic(mod_ring(12)), 12u);
  EXPECT_EQ(characteristic(product_ring({mod_ring(4), mod_ring(6)})), 12u);
  EXPECT_EQ(characteristic(build_ring("quot(Z2; t,x,y; t^2+t+1, x^2, y^2)")), 2u);
  EXPECT_EQ(characteristic(build_ring("quot(Z4; x; x^2, 2x)")), 4u);
}

// Non-units closed under addition, checked by brute force.
bool local_by_brute_force(const Ring &r) {
  std::vector<ElementId> nonunits;
  for (ElementId a = 0; a < r.order(); ++a) {
    bool unit = false;
    for (ElementId b = 0; b < r.order() && !unit; ++b)
      unit = r.mul(a, b) == r.one();
    if (!unit)
      nonunits.push_back(a);
  }
  std::vector<bool> is_nonunit(r.order(), false);
  for (auto a : nonunits)
    is_nonunit[a] = true;
  for (auto a : nonunits)
    for (auto b : nonunits)
      if (!is_nonunit[r.add(a, b)])
        return false;
  return true;
}

TEST(IsLocal, AgreesWithBruteForce) {
  for (const char *spec : {"Z8", "Z9", "Z12", "Z30", "product(Z2,Z2)",
                           "quot(Z2; x; x^2)", "quot(Z4; x,y; x^2, xy, y^2, 2x)",
                           "quot(Z2; t,x,y; t^2+t+1, x^2, y^2)"}) {
    const Ring r = build_ring(spec);
    EXPECT_EQ(is_local(r), local_by_brute_force(r)) << spec;
  }
}

TEST(IsLocal, LargeRingPath) {
  // Above the closure limit the unit criterion is used.
  EXPECT_TRUE(is_local(build_ring("quot(Z2; x,y,z; x^2, y^2, z^4)")));
  EXPECT_FALSE(is_local(build_ring("product(Z2, quot(Z2; x,y,z; x^2, y^2, z^3))")));
}

TEST(ZeroDivisorMask, UnitsAreCoprimeResidues) {
  for (std::int64_t n : {2, 12, 36, 97, 100}) {
    const Ring r = mod_ring(n);
    const auto mask = zero_divisor_mask(r);
    for (std::int64_t a = 1; a < n; ++a)
      EXPECT_EQ(mask[a], std::gcd(a, n) > 1) << n << " " << a;
  }
}

TEST(AnnihilatorScanner, MatchesDirectScanWithoutTables) {
  RingOptions no_tables;
  no_tables.table_threshold = 0;
  QuotientOptions q;
  q.ring = no_tables;
  const Ring r = quotient_ring(
      make_quotient_spec(3, {"x", "y"}, {"x^3", "xy", "y^3"}), q);
  ASSERT_FALSE(r.has_tables());
  AnnihilatorScanner scan(r);
  for (ElementId x = 0; x < r.order(); x += 7) {
    const IdSet got = scan(x);
    for (ElementId y = 0; y < r.order(); ++y)
      EXPECT_EQ(got.contains(y), r.mul(x, y) == r.zero());
  }
}

TEST(Validation, ExhaustiveOnSmallRing) {
  const Ring r = build_ring("quot(Z3; x,y; xy, x^3, y^3, x^2-y^2)");
  const auto report = validate_ring_axioms(r, kDefaultValidationBudget);
  EXPECT_TRUE(report.passed);
  EXPECT_TRUE(report.exhaustive);
  EXPECT_EQ(report.triples_checked, 81u * 81u * 81u);
}

TEST(Validation, SampledIsReproducible) {
  const Ring r = build_ring("quot(Z2; x,y,z; x^2, y^2, z^3)");
  const auto a = validate_ring_axioms(r, 10000, 42);
  const auto b = validate_ring_axioms(r, 10000, 42);
  EXPECT_FALSE(a.exhaustive);
  EXPECT_TRUE(a.passed);
  EXPECT_EQ(a.triples_checked, b.triples_checked);
}

TEST(Validation, NonConfluentPresentationRejected) {
  try {
    build_ring("quot(Z3; x,y; x^2-y, xy, y^3)");
    FAIL() << "expected rejection";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::non_confluent);
  }
}
