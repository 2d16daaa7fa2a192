#include "zdclass/zdclass.hpp"

#include <gtest/gtest.h>

using namespace zdclass;

namespace {
std::vector<std::string> basis_names(const QuotientSpec &spec) {
  std::vector<std::string> out;
  for (const auto &m : standard_basis(spec))
    out.push_back(render(Poly::monomial(spec.modulus, m), spec.vars));
  return out;
}
} // namespace

TEST(PolyParse, GrammarForms) {
  const std::vector<std::string> v{"x", "y"};
  EXPECT_EQ(render(parse_poly("x*y", v, 5), v), "xy");
  EXPECT_EQ(render(parse_poly("xy", v, 5), v), "xy");
  EXPECT_EQ(render(parse_poly(" 2 x^2 y - 3 ", v, 5), v), "2+2x^2y");
  EXPECT_EQ(render(parse_poly("x^2 - x^2", v, 5), v), "0");
  EXPECT_EQ(render(parse_poly("7", v, 5), v), "2");
}

TEST(PolyParse, ErrorsCarryPosition) {
  const std::vector<std::string> v{"x", "y"};
  try {
    parse_poly("x + y^", v, 3);
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse);
    EXPECT_GT(e.position(), 0u);
  }
  EXPECT_THROW(parse_poly("x + z", v, 3), Error);
  EXPECT_THROW(parse_poly("", v, 3), Error);
}

TEST(StandardBasis, FinalExample) {
  const auto spec = make_quotient_spec(3, {"x", "y"}, {"x*y", "x^3", "y^3", "x^2-y^2"});
  EXPECT_EQ(basis_names(spec), (std::vector<std::string>{"1", "x", "y", "x^2"}));
  const Ring r = quotient_ring(spec);
  EXPECT_EQ(r.order(), 81u);
  EXPECT_EQ(r.mul(r.element("y"), r.element("y")), r.element("x^2"));
}

TEST(StandardBasis, TruncationMakesBasisFinite) {
  const auto base = make_quotient_spec(3, {"x", "y"}, {"x^3", "x*y"});
  EXPECT_THROW(quotient_ring(base), Error);
  const auto spec = truncate(base, "y", 3);
  auto names = basis_names(spec);
  std::sort(names.begin(), names.end());
  EXPECT_EQ(names, (std::vector<std::string>{"1", "x", "x^2", "y", "y^2"}));
}

TEST(Truncate, DeduplicatesAndRejectsUnknownVariable) {
  const auto base = make_quotient_spec(2, {"x", "y", "z"}, {"x^2", "y^2"});
  const auto twice = truncate(truncate(base, "z", 2), "z", 3);
  EXPECT_EQ(twice.relations.size(), 4u);
  EXPECT_EQ(truncate(truncate(base, "z", 2), "z", 2).relations.size(), 3u);
  EXPECT_THROW(truncate(base, "w", 2), Error);
  EXPECT_THROW(truncate(base, "z", 0), Error);
}

TEST(QuotientRing, FieldOfFourElements) {
  const Ring f = build_ring("quot(Z2; t; t^2+t+1)");
  ASSERT_EQ(f.order(), 4u);
  for (ElementId a = 1; a < 4; ++a) {
    bool unit = false;
    for (ElementId b = 1; b < 4; ++b)
      unit = unit || f.mul(a, b) == f.one();
    EXPECT_TRUE(unit);
  }
}

TEST(QuotientRing, ElementNamesAreParsable) {
  const Ring r = build_ring("quot(Z3; x,y; x^3, xy, y^3)");
  for (ElementId a = 0; a < r.order(); ++a)
    EXPECT_EQ(r.element(r.element_name(a)), a);
}

TEST(QuotientRing, CapsAreEnforced) {
  BuildOptions small;
  small.element_cap = 1000;
  try {
    build_ring("quot(Z2; x,y,z; x^2, y^2, z^4)", small);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::cap_exceeded);
  }
  BuildOptions tiny_basis;
  tiny_basis.basis_cap = 8;
  EXPECT_THROW(build_ring("quot(Z2; x; x^20)", tiny_basis), Error);
}

TEST(RingSpecParse, Forms) {
  EXPECT_EQ(render(parse_ring_spec("Z12")), "Z12");
  EXPECT_EQ(render(parse_ring_spec(" product( Z4 , Z4 ) ")), "product(Z4,Z4)");
  const RingSpec q = parse_ring_spec("quot(Z3; x,y; x*y, x^3, y^3, x^2-y^2)");
  ASSERT_TRUE(std::holds_alternative<QuotientSpec>(q.node));
  EXPECT_EQ(std::get<QuotientSpec>(q.node).relations.size(), 4u);
  const RingSpec t = parse_ring_spec("quot(Z2; x,y,z; x^2, y^2)trunc(z,3)");
  EXPECT_EQ(std::get<QuotientSpec>(t.node).relations.size(), 3u);
}

TEST(RingSpecParse, Errors) {
  for (const char *bad : {"Z", "Z1", "Z(12", "product()", "product(Z2,", "quot(Z2; ; x)",
                          "quot(Z2; x; y^2)", "quot(Z0; x; x^2)", "Q12", "Z12 junk"}) {
    EXPECT_THROW(parse_ring_spec(bad), Error) << bad;
  }
}
