#include "amat/covariants.hpp"

#include <random>

#include "amat/element.hpp"

namespace amat {

namespace {

MultiPoly var(const char* name) { return MultiPoly::variable(name); }
MultiPoly num(long c) { return MultiPoly(c); }

void require_degree(const BinaryForm& f, int n) {
  if (f.degree() != n)
    fail(Errc::wrong_degree, "expected a form of degree " + std::to_string(n) + ", got degree " + std::to_string(f.degree()));
}

template <std::size_t N>
std::array<MultiPoly, N> numeric_coeffs(const BinaryForm& f) {
  std::array<MultiPoly, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = MultiPoly(Rat(f.coeffs()[i]));
  return out;
}

MultiPoly symbolic_det(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& x) {
  return det_cofactor(standard_arithmetic_matrix<MultiPoly>(a, x));
}

// V(x, y) over symbolic or numeric coefficients, x-power descending.
template <std::size_t N>
MultiPoly binary_form_poly(const std::array<MultiPoly, N>& c, const MultiPoly& x, const MultiPoly& y) {
  MultiPoly out;
  const unsigned n = N - 1;
  for (unsigned k = 0; k <= n; ++k) out += c[k] * x.pow(n - k) * y.pow(k);
  return out;
}

}  // namespace

QuarticCoeffs generic_quartic() { return {var("a"), var("b"), var("c"), var("d"), var("e")}; }
CubicCoeffs generic_cubic() { return {var("a"), var("b"), var("c"), var("d")}; }

QuarticCoeffs quartic_coeffs(const BinaryForm& v) {
  require_degree(v, 4);
  return numeric_coeffs<5>(v);
}

CubicCoeffs cubic_coeffs(const BinaryForm& c) {
  require_degree(c, 3);
  return numeric_coeffs<4>(c);
}

std::pair<MultiPoly, MultiPoly> quartic_invariants(const QuarticCoeffs& v) {
  const auto& [a, b, c, d, e] = v;
  MultiPoly I = num(12) * a * e - num(3) * b * d + c * c;
  MultiPoly J = num(72) * a * c * e + num(9) * b * c * d - num(27) * a * d * d - num(27) * b * b * e - num(2) * c.pow(3);
  return {std::move(I), std::move(J)};
}

QuarticInvariants quartic_invariants(const BinaryForm& v) {
  auto [I, J] = quartic_invariants(quartic_coeffs(v));
  return {I.constant_value().get_num(), J.constant_value().get_num()};
}

QuarticCovariants quartic_GHF(const QuarticCoeffs& v) {
  const auto& [a, b, c, d, e] = v;
  const MultiPoly t = var("t"), x = var("x"), y = var("y"), z = var("z");
  const MultiPoly u = (t + b * x + num(2) * c * y + num(3) * d * z) / Rat(4);
  const MultiPoly det = symbolic_det({a, b, c, d, e}, {u, x, y, z}) * Rat(256);
  QuarticCovariants out;
  out.t_coeffs = det.collect("t");
  out.t_coeffs.resize(5);
  out.G = out.t_coeffs[2] / Rat(-2);
  out.H = out.t_coeffs[1] / Rat(-8);
  out.F = out.t_coeffs[0];
  return out;
}

QuarticCovariants quartic_GHF(const BinaryForm& v) { return quartic_GHF(quartic_coeffs(v)); }

bool quartic_syzygy_check(const QuarticCoeffs& v) {
  const auto cov = quartic_GHF(v);
  const auto [I, J] = quartic_invariants(v);
  const MultiPoly x = var("x");
  const std::map<std::string, MultiPoly> sub{{"x", x * x}, {"y", x}, {"z", num(1)}};
  const MultiPoly g4 = cov.G.substitute(sub);
  const MultiPoly g6 = cov.H.substitute(sub);
  const MultiPoly vx = binary_form_poly(v, x, num(1));
  const MultiPoly lhs = g4.pow(3) - num(48) * g4 * I * vx * vx - num(64) * J * vx.pow(3);
  return (lhs - num(27) * g6 * g6).is_zero();
}

bool quartic_syzygy_check(const BinaryForm& v) { return quartic_syzygy_check(quartic_coeffs(v)); }

bool quartic_hessian_check(const QuarticCoeffs& v) {
  const MultiPoly x = var("x"), y = var("y");
  const MultiPoly vxy = binary_form_poly(v, x, y);
  const MultiPoly hxx = vxy.derivative("x").derivative("x");
  const MultiPoly hxy = vxy.derivative("x").derivative("y");
  const MultiPoly hyy = vxy.derivative("y").derivative("y");
  const MultiPoly hess = hxx * hyy - hxy * hxy;
  const MultiPoly g = quartic_GHF(v).G.substitute({{"x", x * x}, {"y", x * y}, {"z", y * y}});
  return g * Rat(3) + hess == MultiPoly();
}

Rat quartic_norm_form_value(const BinaryForm& v, const Element& alpha) {
  require_degree(v, 4);
  if (alpha.size() != 4) fail(Errc::field_mismatch, "quartic norm form needs 4 coordinates");
  const auto cov = quartic_GHF(v);
  const Rat t = 4 * alpha[0] - Rat(v.a(2)) * alpha[1] - 2 * Rat(v.a(3)) * alpha[2] - 3 * Rat(v.a(4)) * alpha[3];
  const std::map<std::string, Rat> pt{{"x", alpha[1]}, {"y", alpha[2]}, {"z", alpha[3]}};
  return t * t * t * t - 2 * cov.G.eval(pt) * t * t - 8 * cov.H.eval(pt) * t + cov.F.eval(pt);
}

bool quartic_norm_equation_check(const QuarticCoeffs& v, int samples, std::uint64_t seed) {
  const auto cov = quartic_GHF(v);
  const MultiPoly t = var("t");
  const MultiPoly rhs = t.pow(4) - num(2) * cov.G * t * t - num(8) * cov.H * t + cov.F;
  MultiPoly expanded;
  for (std::size_t k = 0; k < cov.t_coeffs.size(); ++k) expanded += cov.t_coeffs[k] * t.pow(static_cast<unsigned>(k));
  if (!(expanded == rhs) || !cov.t_coeffs[3].is_zero() || !(cov.t_coeffs[4] == num(1))) return false;

  // Independent numeric side: build N from Rat entries and take det_bareiss.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (int s = 0; s < samples; ++s) {
    std::map<std::string, Rat> pt;
    for (const char* name : {"a", "b", "c", "d", "e", "t", "x", "y", "z"}) pt[name] = Rat(dist(rng));
    std::vector<Rat> a(5);
    for (std::size_t i = 0; i < 5; ++i) a[i] = v[i].eval(pt);
    const Rat u = (pt["t"] + a[1] * pt["x"] + 2 * a[2] * pt["y"] + 3 * a[3] * pt["z"]) / 4;
    const std::vector<Rat> coords{u, pt["x"], pt["y"], pt["z"]};
    const Rat lhs = 256 * det_bareiss(standard_arithmetic_matrix<Rat>(a, coords));
    if (lhs != rhs.eval(pt)) return false;
  }
  return true;
}

bool quartic_norm_equation_check(const BinaryForm& v, int samples, std::uint64_t seed) {
  return quartic_norm_equation_check(quartic_coeffs(v), samples, seed);
}

CubicCovariants cubic_covariants(const CubicCoeffs& c) {
  const auto& [a, b, cc, d] = c;
  const MultiPoly x = var("x"), y = var("y");
  CubicCovariants out;
  out.Q = (b * b - num(3) * a * cc) * x * x + (b * cc - num(9) * a * d) * x * y + (cc * cc - num(3) * b * d) * y * y;
  const MultiPoly cxy = binary_form_poly(c, x, y);
  out.F = cxy.derivative("x") * out.Q.derivative("y") - cxy.derivative("y") * out.Q.derivative("x");
  out.disc = b * b * cc * cc - num(4) * a * cc.pow(3) - num(4) * b.pow(3) * d - num(27) * a * a * d * d +
             num(18) * a * b * cc * d;
  return out;
}

CubicCovariants cubic_covariants(const BinaryForm& c) { return cubic_covariants(cubic_coeffs(c)); }

std::vector<Int> covariant_coefficients(const MultiPoly& form, int degree) {
  const auto by_x = form.collect("x");
  std::vector<Int> out;
  for (int k = degree; k >= 0; --k) {
    const MultiPoly px = k < static_cast<int>(by_x.size()) ? by_x[static_cast<std::size_t>(k)] : MultiPoly();
    const auto by_y = px.collect("y");
    const auto want = static_cast<std::size_t>(degree - k);
    const MultiPoly coeff = want < by_y.size() ? by_y[want] : MultiPoly();
    if (!coeff.is_constant() || !is_integer(coeff.constant_value()))
      fail(Errc::non_integer_entries, "covariant coefficient is not an integer constant");
    out.push_back(coeff.constant_value().get_num());
  }
  return out;
}

bool cubic_syzygy_check(const CubicCoeffs& c) {
  const auto cov = cubic_covariants(c);
  const MultiPoly cxy = binary_form_poly(c, var("x"), var("y"));
  return (cov.F * cov.F + num(27) * cov.disc * cxy * cxy - num(4) * cov.Q.pow(3)).is_zero();
}

bool cubic_syzygy_check(const BinaryForm& c) { return cubic_syzygy_check(cubic_coeffs(c)); }

Rat cubic_norm_form_value(const BinaryForm& c, const Element& alpha) {
  require_degree(c, 3);
  if (alpha.size() != 3) fail(Errc::field_mismatch, "cubic norm form needs 3 coordinates");
  const auto cov = cubic_covariants(c);
  const Rat t = 3 * alpha[0] - Rat(c.a(2)) * alpha[1] - 2 * Rat(c.a(3)) * alpha[2];
  const std::map<std::string, Rat> pt{{"x", alpha[1]}, {"y", alpha[2]}};
  return t * t * t - 3 * t * cov.Q.eval(pt) + cov.F.eval(pt);
}

bool cubic_norm_equation_check(const CubicCoeffs& c) {
  const auto cov = cubic_covariants(c);
  const auto& [a, b, cc, d] = c;
  const MultiPoly t = var("t"), x = var("x"), y = var("y");
  const MultiPoly u = (t + b * x + num(2) * cc * y) / Rat(3);
  const MultiPoly lhs = symbolic_det({a, b, cc, d}, {u, x, y}) * Rat(27);
  return lhs == t.pow(3) - num(3) * t * cov.Q + cov.F;
}

std::vector<Element> norm_one_elements(const NumberField& field, int bound) {
  const auto n = static_cast<std::size_t>(field.degree());
  std::vector<Element> out;
  std::vector<long> c(n, -bound);
  for (;;) {
    std::vector<Rat> coords(c.begin(), c.end());
    Element alpha(std::move(coords));
    if (norm(field, alpha) == 1) out.push_back(std::move(alpha));
    std::size_t i = 0;
    while (i < n && c[i] == bound) c[i++] = -bound;
    if (i == n) break;
    ++c[i];
  }
  return out;
}

}  // namespace amat
