#include <doctest.h>

#include "amat/element.hpp"
#include "test_support.hpp"

using namespace amat;

namespace {

NumberField field(const char* pair) { return make_field(EssentialPair::parse(pair)); }
Element E(const char* text) { return Element::parse(text); }

}  // namespace

TEST_CASE("quadratic field worked values") {
  const NumberField f = field("1:1,1,-1");
  const Element zeta = E("0,1");
  CHECK(mul(f, zeta, E("1,1")) == E("1,0"));
  CHECK(trace(f, zeta) == -1);
  CHECK(norm(f, zeta) == -1);
  CHECK(norm_resultant_oracle(f, zeta) == -1);
  CHECK(inverse(f, zeta) == E("1,1"));
  CHECK(char_poly(f, zeta) == UniPoly(std::vector<Rat>{-1, 1, 1}));
}

TEST_CASE("unit element") {
  testing::Rng rng(41);
  for (int n = 2; n <= 6; ++n) {
    const NumberField f = testing::random_field(rng, n);
    const auto dim = static_cast<std::size_t>(n);
    const Element one = Element::one(dim);
    CHECK(trace(f, one) == n);
    CHECK(norm(f, one) == 1);
    CHECK(norm_resultant_oracle(f, one) == 1);
    CHECK(inverse(f, one) == one);
    UniPoly expected(std::vector<Rat>{1});
    for (int k = 0; k < n; ++k) expected = expected * UniPoly(std::vector<Rat>{-1, 1});
    CHECK(char_poly(f, one) == expected);
    const Element a = testing::random_element(rng, dim);
    CHECK(mul(f, a, one) == a);
    CHECK(add(f, a, Element::zero(dim)) == a);
  }
}

TEST_CASE("addition") {
  const NumberField f = field("1:1,1,0,-2,-1");
  CHECK(add(f, E("1,0,0,0"), E("0,1,0,0")) == E("1,1,0,0"));
  CHECK_THROWS_AS(add(f, E("1,0,0,0"), E("1,0,0")), Error);
}

TEST_CASE("zero element") {
  const NumberField f = field("1:1,1,0,-2,-1");
  CHECK(norm(f, Element::zero(4)) == 0);
  CHECK(trace(f, Element::zero(4)) == 0);
  try {
    inverse(f, Element::zero(4));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::zero_element);
  }
}

TEST_CASE("example field characteristic polynomial") {
  const NumberField f = field("2:4,-2,-3,1,1");
  CHECK(char_poly(f, Element::basis(4, 1)) == UniPoly(std::vector<Rat>{4, 2, -3, -1, 1}));
}

TEST_CASE("matrix identities across degrees") {
  testing::Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 5;
    const NumberField f = testing::random_field(rng, n, 6, trial % 7 == 0 ? 2 : 1);
    const auto dim = static_cast<std::size_t>(n);
    const Element a = testing::random_element(rng, dim), b = testing::random_element(rng, dim);
    const RatMatrix na = arithmetic_matrix(f, a), nb = arithmetic_matrix(f, b);
    CHECK(na * nb == arithmetic_matrix(f, mul(f, a, b)));
    CHECK(na * nb == nb * na);
  }
}

TEST_CASE("norm properties") {
  testing::Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 5;
    const NumberField f = testing::random_field(rng, n, 6, trial % 5 == 0 ? 2 : 1);
    const auto dim = static_cast<std::size_t>(n);
    const Element a = testing::random_nonzero_element(rng, dim), b = testing::random_nonzero_element(rng, dim);
    CHECK(norm(f, mul(f, a, b)) == norm(f, a) * norm(f, b));
    CHECK(norm(f, a) == norm_resultant_oracle(f, a));
  }
}

TEST_CASE("oracle norm on many elements") {
  testing::Rng rng(44);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 5;
    const NumberField f = testing::random_field(rng, n, 8, trial % 6 == 0 ? 2 : 1);
    const Element a = testing::random_nonzero_element(rng, static_cast<std::size_t>(n));
    CHECK(norm(f, a) == norm_resultant_oracle(f, a));
  }
}

TEST_CASE("trace linearity and char poly coefficients") {
  testing::Rng rng(45);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 5;
    const NumberField f = testing::random_field(rng, n);
    const auto dim = static_cast<std::size_t>(n);
    const Element a = testing::random_element(rng, dim), b = testing::random_element(rng, dim);
    const Rat p = testing::frac(testing::uniform(rng, -5, 5), testing::uniform(rng, 1, 4));
    const Rat q = testing::frac(testing::uniform(rng, -5, 5), testing::uniform(rng, 1, 4));
    CHECK(trace(f, add(f, scale(f, p, a), scale(f, q, b))) == p * trace(f, a) + q * trace(f, b));
    const UniPoly c = char_poly(f, a);
    CHECK(c.degree() == n);
    CHECK(c.leading() == 1);
    CHECK(trace(f, a) == -c.coeff(dim - 1));
    CHECK(norm(f, a) == (n % 2 ? -c.coeff(0) : c.coeff(0)));
    for (const auto& k : c.coeffs()) CHECK(is_integer(k));
    CHECK(evaluate_at(f, c, a).is_zero());
  }
}

TEST_CASE("inverse") {
  testing::Rng rng(46);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 4;
    const NumberField f = testing::random_field(rng, n);
    const auto dim = static_cast<std::size_t>(n);
    const Element a = testing::random_nonzero_element(rng, dim, trial % 2 ? 2 : 6);
    const Element inv = inverse(f, a);
    CHECK(mul(f, a, inv) == Element::one(dim));
    const Rat nm = norm(f, a);
    CHECK(is_integral(inv) == (nm == 1 || nm == -1));
  }
}

TEST_CASE("rational coordinates give rational char polys") {
  testing::Rng rng(47);
  const NumberField f = field("1:1,1,0,-2,-1");
  const Element a = testing::random_fractional_element(rng, 4);
  CHECK_FALSE(is_integral(a));
  CHECK(evaluate_at(f, char_poly(f, a), a).is_zero());
  CHECK(is_integral(E("1,2,3,4")));
  CHECK_FALSE(is_integral(E("1/2,0,0,0")));
}
