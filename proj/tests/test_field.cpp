#include <doctest.h>

#include "amat/field.hpp"
#include "test_support.hpp"

using namespace amat;
using testing::P;
using testing::poly_matrix;

namespace {

NumberField field(const char* pair) { return make_field(EssentialPair::parse(pair)); }

Errc error_of(const char* pair) {
  try {
    field(pair);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::internal_error;
}

}  // namespace

TEST_CASE("make_field") {
  const NumberField f = field("1:1,1,0,-2,-1");
  CHECK(f.discriminant() == -275);
  CHECK(f.degree() == 4);
  const NumberField g = field("2:4,-2,-3,1,1");
  CHECK(g.discriminant() == 513);
  CHECK(g.form_discriminant() == 2052);
  CHECK(error_of("2:2,2,1") == Errc::divisibility_violation);
  CHECK(error_of("2:4,1,1") == Errc::divisibility_violation);
  CHECK(error_of("0:1,1,-1") == Errc::divisibility_violation);
  CHECK(error_of("1:1,0,-1") == Errc::reducible_form);
  CHECK(error_of("1:1,2,1") == Errc::zero_discriminant);
  CHECK(error_of("1:1,1") == Errc::invalid_form);
  CHECK(std::string(errc_name(Errc::divisibility_violation)) == "divisibility-violation");
  CHECK(EssentialPair::parse("2:4,-2,-3,1,1").to_string() == "2:4,-2,-3,1,1");
  CHECK_THROWS_AS(EssentialPair::parse("4,-2,-3,1,1"), Error);
}

TEST_CASE("quadratic template") {
  CHECK(generic_arithmetic_matrix(2) == poly_matrix({{"u", "-a*c*x"}, {"x", "u - b*x"}}));
}

TEST_CASE("generic quartic matrix") {
  const PolyMatrix expected = poly_matrix({
      {"u", "-a*e*z", "-e*(a*y + b*z)", "-e*(a*x + b*y + c*z)"},
      {"x", "u - b*x - c*y - d*z", "-c*x - d*y - e*z", "-d*x - e*y"},
      {"y", "a*x", "u - c*y - d*z", "-d*y - e*z"},
      {"z", "a*y", "a*x + b*y", "u - d*z"},
  });
  CHECK(generic_arithmetic_matrix(4) == expected);
  CHECK(generic_arithmetic_matrix(4).trace() == P("4*u - b*x - 2*c*y - 3*d*z"));
}

TEST_CASE("generic quintic matrix") {
  const PolyMatrix expected = poly_matrix({
      {"u", "-a*f*w", "-f*(b*w + a*z)", "-f*(c*w + a*y + b*z)", "-f*(d*w + a*x + b*y + c*z)"},
      {"x", "u - e*w - b*x - c*y - d*z", "-f*w - c*x - d*y - e*z", "-d*x - e*y - f*z", "-e*x - f*y"},
      {"y", "a*x", "u - e*w - c*y - d*z", "-f*w - d*y - e*z", "-e*y - f*z"},
      {"z", "a*y", "a*x + b*y", "u - e*w - d*z", "-f*w - e*z"},
      {"w", "a*z", "a*y + b*z", "a*x + b*y + c*z", "u - e*w"},
  });
  CHECK(generic_arithmetic_matrix(5) == expected);
}

TEST_CASE("generic quintic matrices commute") {
  const PolyMatrix m = generic_arithmetic_matrix(5);
  std::map<std::string, MultiPoly> rename{{"u", P("u2")}, {"x", P("x2")}, {"y", P("y2")}, {"z", P("z2")}, {"w", P("w2")}};
  PolyMatrix n = m;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) n(i, j) = m(i, j).substitute(rename);
  CHECK(m * n == n * m);
}

TEST_CASE("example field with a0 = 2") {
  const NumberField f = field("2:4,-2,-3,1,1");
  const PolyMatrix expected = poly_matrix({
      {"u", "-2*z", "2*z - 4*y", "-2*x + 2*y + 3*z"},
      {"x", "u + x + 3*y - z", "3*x - 2*y - 2*z", "-x - 2*y"},
      {"y", "x", "u + 3*y - z", "-y - z"},
      {"z", "2*y", "2*x - 2*y", "u - z"},
  });
  CHECK(symbolic_arithmetic_matrix(f, default_coord_names(4)) == expected);
  CHECK(basis_change_matrix(f)(1, 1) == 2);
  const auto basis = integral_basis_description(f);
  REQUIRE(basis.size() == 4);
  CHECK(basis[0] == UniPoly(std::vector<Rat>{1}));
  CHECK(basis[1] == UniPoly(std::vector<Rat>{0, 2}));
  CHECK(basis[2] == UniPoly(std::vector<Rat>{0, -2, 4}));
  CHECK(basis[3] == UniPoly(std::vector<Rat>{0, -3, -2, 4}));
}

TEST_CASE("explicit and conjugated constructions agree") {
  testing::Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(testing::uniform(rng, 2, 6));
    const long a0 = testing::uniform(rng, 1, 3);
    std::vector<MultiPoly> a, x;
    for (const auto& v : default_coeff_names(n)) a.push_back(P(v));
    for (const auto& v : default_coord_names(n)) x.push_back(P(v));
    const Rat r0(a0);
    CHECK(explicit_arithmetic_matrix<MultiPoly>(a, r0, x) == conjugated_arithmetic_matrix<MultiPoly>(a, r0, x));
  }
  const std::vector<MultiPoly> a{P("a"), P("b"), P("c"), P("d"), P("e")}, x{P("u"), P("x"), P("y"), P("z")};
  CHECK(explicit_arithmetic_matrix<MultiPoly>(a, Rat(1), x) == standard_arithmetic_matrix<MultiPoly>(a, x));
}

TEST_CASE("identity, linearity and integrality of entries") {
  testing::Rng rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(testing::uniform(rng, 2, 6));
    const NumberField f = testing::random_field(rng, n, 6, trial % 3 == 0 ? 2 : 1);
    const auto dim = static_cast<std::size_t>(n);
    CHECK(arithmetic_matrix(f, Element::one(dim)) == RatMatrix::identity(dim));
    const Element a = testing::random_element(rng, dim), b = testing::random_element(rng, dim);
    std::vector<Rat> sum(dim);
    for (std::size_t i = 0; i < dim; ++i) sum[i] = a[i] + b[i];
    CHECK(arithmetic_matrix(f, Element(sum)) == arithmetic_matrix(f, a) + arithmetic_matrix(f, b));
    const PolyMatrix sym = symbolic_arithmetic_matrix(f, default_coord_names(n));
    for (const auto& e : sym.data()) CHECK(e.has_integer_coefficients());
    const RatMatrix m = arithmetic_matrix(f, a);
    for (std::size_t i = 0; i < dim; ++i) CHECK(m(i, 0) == a[i]);
  }
}

TEST_CASE("integer entries exactly for integer coordinates") {
  testing::Rng rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = static_cast<int>(testing::uniform(rng, 2, 5));
    const NumberField f = testing::random_field(rng, n, 6, trial % 4 == 0 ? 2 : 1);
    const Element frac = testing::random_fractional_element(rng, static_cast<std::size_t>(n));
    const RatMatrix mf = arithmetic_matrix(f, frac);
    bool integral = true;
    for (const auto& e : mf.data()) integral = integral && is_integer(e);
    CHECK_FALSE(integral);
    const Element whole = testing::random_element(rng, static_cast<std::size_t>(n));
    const RatMatrix mw = arithmetic_matrix(f, whole);
    for (const auto& e : mw.data()) CHECK(is_integer(e));
  }
}

TEST_CASE("basis change matrix") {
  const NumberField f = field("1:2,3,5,7");
  CHECK(basis_change_matrix(f) == RatMatrix(3, 3, {1, 0, 0, 0, 2, 3, 0, 0, 2}));
  testing::Rng rng(34);
  for (int trial = 0; trial < 10; ++trial) {
    const NumberField g = testing::random_field(rng, static_cast<int>(testing::uniform(rng, 2, 6)), 6, trial % 2 ? 2 : 1);
    const RatMatrix m = basis_change_matrix(g);
    CHECK(inverse(m) * m == RatMatrix::identity(m.rows()));
  }
  const auto basis = integral_basis_description(field("1:1,1,0,-2,-1"));
  CHECK(basis[0] == UniPoly(std::vector<Rat>{1}));
  CHECK(basis[1] == UniPoly(std::vector<Rat>{0, 1}));
  CHECK(basis[2] == UniPoly(std::vector<Rat>{0, 1, 1}));
  CHECK(basis[3] == UniPoly(std::vector<Rat>{0, 0, 1, 1}));
}

TEST_CASE("mismatched coordinates are rejected") {
  const NumberField f = field("1:1,1,0,-2,-1");
  CHECK_THROWS_AS(arithmetic_matrix(f, Element::parse("1,2,3")), Error);
}
