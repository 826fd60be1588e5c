#include <doctest.h>

#include "amat/covariants.hpp"
#include "amat/element.hpp"
#include "test_support.hpp"

using namespace amat;
using testing::P;

namespace {

BinaryForm random_irreducible(testing::Rng& rng, int n, long bound = 9) {
  for (;;) {
    std::vector<Int> c(static_cast<std::size_t>(n) + 1);
    for (auto& v : c) v = testing::uniform(rng, -bound, bound);
    if (c.front() == 0 || c.back() == 0) continue;
    const BinaryForm f(c);
    if (form_discriminant(f) != 0 && is_irreducible(f)) return f;
  }
}

}  // namespace

TEST_CASE("quartic invariants") {
  auto inv = quartic_invariants(BinaryForm::parse("1,0,0,0,1"));
  CHECK(inv.I == 12);
  CHECK(inv.J == 0);
  inv = quartic_invariants(BinaryForm::parse("1,0,1,0,1"));
  CHECK(inv.I == 13);
  CHECK(inv.J == 70);
  inv = quartic_invariants(BinaryForm::parse("4,-2,-3,1,1"));
  CHECK(inv.I == 63);
  CHECK(inv.J == -972);
  // The generic polynomials evaluated at the same point.
  const auto [gi, gj] = quartic_invariants(generic_quartic());
  const std::map<std::string, Rat> pt{{"a", 4}, {"b", -2}, {"c", -3}, {"d", 1}, {"e", 1}};
  CHECK(gi.eval(pt) == 63);
  CHECK(gj.eval(pt) == -972);
  CHECK_THROWS_AS(quartic_invariants(BinaryForm::parse("1,1,-2,-1")), Error);
}

TEST_CASE("generic G, H, F") {
  const auto cov = quartic_GHF(generic_quartic());
  CHECK(cov.t_coeffs[4] == P("1"));
  CHECK(cov.t_coeffs[3].is_zero());
  const auto gx = cov.G.collect("x");
  REQUIRE(gx.size() == 3);
  CHECK(gx[2] == P("3*b^2 - 8*a*c"));
  const auto yz = cov.G.collect("y")[1].collect("z")[1];
  CHECK(yz == P("4*c*d - 24*b*e"));
  CHECK(cov.G.is_homogeneous_in({"x", "y", "z"}, 2));
  CHECK(cov.H.is_homogeneous_in({"x", "y", "z"}, 3));
  CHECK(cov.F.is_homogeneous_in({"x", "y", "z"}, 4));
  CHECK(quartic_hessian_check(generic_quartic()));
}

TEST_CASE("t^3 cancels for random quartics") {
  testing::Rng rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const auto cov = quartic_GHF(random_irreducible(rng, 4));
    CHECK(cov.t_coeffs[3].is_zero());
  }
}

TEST_CASE("quartic syzygy") {
  CHECK(quartic_syzygy_check(generic_quartic()));
  CHECK(quartic_syzygy_check(BinaryForm::parse("1,0,0,0,1")));
  CHECK(quartic_syzygy_check(BinaryForm::parse("4,-2,-3,1,1")));
  testing::Rng rng(52);
  for (int trial = 0; trial < 50; ++trial) CHECK(quartic_syzygy_check(random_irreducible(rng, 4)));
}

TEST_CASE("quartic syzygy fails with a wrong constant") {
  // Sanity: the check is sensitive. Replace 27 by 26 in the identity.
  const auto cov = quartic_GHF(generic_quartic());
  const auto [I, J] = quartic_invariants(generic_quartic());
  const MultiPoly x = P("x");
  const std::map<std::string, MultiPoly> sub{{"x", P("x^2")}, {"y", x}, {"z", P("1")}};
  const MultiPoly g4 = cov.G.substitute(sub), g6 = cov.H.substitute(sub);
  const MultiPoly v = P("a*x^4 + b*x^3 + c*x^2 + d*x + e");
  const MultiPoly lhs = g4.pow(3) - MultiPoly(48) * g4 * I * v * v - MultiPoly(64) * J * v.pow(3);
  CHECK((lhs - MultiPoly(27) * g6 * g6).is_zero());
  CHECK_FALSE((lhs - MultiPoly(26) * g6 * g6).is_zero());
}

TEST_CASE("quartic norm equation") {
  CHECK(quartic_norm_equation_check(generic_quartic()));
  const BinaryForm v = BinaryForm::parse("1,1,0,-2,-1");
  CHECK(quartic_norm_equation_check(v));
  const NumberField f = make_field(EssentialPair{1, v});
  CHECK(quartic_norm_form_value(v, Element::one(4)) == 256);
  const auto units = norm_one_elements(f, 3);
  CHECK(units.size() > 1);
  for (const auto& e : units) CHECK(quartic_norm_form_value(v, e) == 256);
  testing::Rng rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const Element e = testing::random_element(rng, 4);
    CHECK(quartic_norm_form_value(v, e) == 256 * norm(f, e));
  }
}

TEST_CASE("cubic covariants") {
  const BinaryForm c = BinaryForm::parse("1,1,-2,-1");
  const auto cov = cubic_covariants(c);
  CHECK(covariant_coefficients(cov.Q, 2) == std::vector<Int>{7, 7, 7});
  CHECK(cov.disc == MultiPoly(49));
  CHECK(cubic_syzygy_check(generic_cubic()));
  CHECK(cubic_syzygy_check(c));
  CHECK(cubic_norm_equation_check(generic_cubic()));
  testing::Rng rng(54);
  for (int trial = 0; trial < 20; ++trial) CHECK(cubic_syzygy_check(random_irreducible(rng, 3)));
  CHECK_THROWS_AS(cubic_covariants(BinaryForm::parse("1,0,0,0,1")), Error);
}

TEST_CASE("cubic norm-one elements") {
  const BinaryForm c = BinaryForm::parse("1,1,-2,-1");
  const NumberField f = make_field(EssentialPair{1, c});
  const auto units = norm_one_elements(f, 3);
  CHECK(units.size() > 1);
  for (const auto& e : units) CHECK(cubic_norm_form_value(c, e) == 27);
  // Brute-force cross-check of the enumeration: count with an independent determinant.
  std::size_t count = 0;
  for (long x0 = -3; x0 <= 3; ++x0)
    for (long x1 = -3; x1 <= 3; ++x1)
      for (long x2 = -3; x2 <= 3; ++x2)
        if (det_cofactor(arithmetic_matrix(f, Element(std::vector<Rat>{x0, x1, x2}))) == 1) ++count;
  CHECK(count == units.size());
}
