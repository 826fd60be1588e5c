#include "amat/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace amat {

namespace {

Real to_real(const Rat& q) { return static_cast<Real>(q.get_d()); }

Real to_real_exact(const Int& z) {
  // get_d loses bits beyond 53; split into two halves for long double.
  if (mpz_sizeinbase(z.get_mpz_t(), 2) <= 53) return static_cast<Real>(z.get_d());
  return std::stold(z.get_str());
}

Real rat_to_real(const Rat& q) {
  if (mpz_sizeinbase(q.get_num_mpz_t(), 2) <= 53 && mpz_sizeinbase(q.get_den_mpz_t(), 2) <= 53) return to_real(q);
  return to_real_exact(q.get_num()) / to_real_exact(q.get_den());
}

bool root_less(const Complex& a, const Complex& b) {
  const Real tol = 1e-9L * (1 + std::max(std::abs(a.real()), std::abs(b.real())));
  if (std::abs(a.real() - b.real()) > tol) return a.real() < b.real();
  return a.imag() < b.imag();
}

Complex horner(const std::vector<Real>& c, const Complex& z) {
  Complex acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Int round_to_int(Real v) {
  const Real r = std::roundl(v);
  if (std::abs(r) < 9.0e18L) return Int(static_cast<long>(r));
  fail(Errc::rounding_failure, "value too large to round reliably");
}

// Coefficients (x-power descending) of prod (p_k x + q_k y).
std::vector<Complex> linear_product(const std::vector<std::pair<Complex, Complex>>& factors) {
  std::vector<Complex> c{Complex(1)};
  for (const auto& [p, q] : factors) {
    std::vector<Complex> next(c.size() + 1, Complex(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k] += c[k] * p;
      next[k + 1] += c[k] * q;
    }
    c = std::move(next);
  }
  return c;
}

RoundedForm round_form(const std::vector<Complex>& c, Real tolerance) {
  std::vector<Int> coeffs;
  Real residual = 0, imag = 0;
  for (const auto& v : c) {
    const Int r = round_to_int(v.real());
    residual = std::max(residual, std::abs(v.real() - std::roundl(v.real())));
    imag = std::max(imag, std::abs(v.imag()));
    coeffs.push_back(r);
  }
  if (residual >= tolerance || imag >= tolerance)
    fail(Errc::rounding_failure, "coefficients are not within tolerance of integers (residual " +
                                     std::to_string(static_cast<double>(std::max(residual, imag))) + ")");
  return RoundedForm{BinaryForm(std::move(coeffs)), residual, imag};
}

}  // namespace

std::vector<Complex> find_roots(const BinaryForm& form) {
  if (form_discriminant(form) == 0) fail(Errc::zero_discriminant, "form has repeated roots");
  const UniPoly f = form.dehomogenize();
  const auto n = static_cast<std::size_t>(f.degree());
  std::vector<Real> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = rat_to_real(f.coeff(k)) / rat_to_real(f.leading());
  std::vector<Real> dc(n);
  for (std::size_t k = 1; k <= n; ++k) dc[k - 1] = c[k] * static_cast<Real>(k);

  // Cauchy bound for the starting circle.
  Real radius = 0;
  for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::abs(c[k]));
  radius = 1 + radius;
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Real theta = 2 * std::numbers::pi_v<Real> * (static_cast<Real>(k) + 0.25L) / static_cast<Real>(n);
    z[k] = std::polar(radius * 0.5L, theta);
  }

  bool converged = false;
  for (int iter = 0; iter < 2000 && !converged; ++iter) {
    Real worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const Complex fz = horner(c, z[k]);
      if (fz == Complex(0)) continue;
      const Complex ratio = fz / horner(dc, z[k]);
      Complex repulsion = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) repulsion += Complex(1) / (z[k] - z[j]);
      const Complex step = ratio / (Complex(1) - ratio * repulsion);
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / (1 + std::abs(z[k])));
    }
    converged = worst < 1e-17L;
  }
  // A few Newton steps polish each root against the plain polynomial.
  for (auto& r : z)
    for (int k = 0; k < 3; ++k) {
      const Complex d = horner(dc, r);
      if (d != Complex(0)) r -= horner(c, r) / d;
    }
  Real scale = 0;
  for (const auto v : c) scale += std::abs(v);
  for (const auto& r : z)
    if (std::abs(horner(c, r)) > 1e-12L * scale * std::pow(1 + std::abs(r), static_cast<Real>(n)))
      fail(Errc::root_finding, "root finder did not converge for " + form.to_string());
  // Real inputs: clean conjugate-symmetric noise on essentially real roots.
  for (auto& r : z)
    if (std::abs(r.imag()) < 1e-15L * (1 + std::abs(r.real()))) r = Complex(r.real(), 0);
  std::sort(z.begin(), z.end(), root_less);
  return z;
}

EmbeddingData embed(const NumberField& field) {
  EmbeddingData emb;
  emb.roots = find_roots(field.form());
  const auto n = static_cast<Eigen::Index>(field.degree());
  emb.xi.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Complex p = 1;
    for (Eigen::Index j = 0; j < n; ++j) {
      emb.xi(i, j) = p;
      p *= emb.roots[static_cast<std::size_t>(i)];
    }
  }
  const RatMatrix az = basis_change_matrix(field);
  ComplexMatrix azc(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      azc(i, j) = rat_to_real(az(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
  emb.gamma = emb.xi * azc;
  return emb;
}

std::vector<Complex> embedding_values(const EmbeddingData& emb, const Element& alpha) {
  const auto n = emb.gamma.rows();
  if (static_cast<Eigen::Index>(alpha.size()) != n) fail(Errc::field_mismatch, "coordinate count mismatch");
  std::vector<Complex> out(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    Complex acc = 0;
    for (Eigen::Index j = 0; j < n; ++j) acc += emb.gamma(i, j) * rat_to_real(alpha[static_cast<std::size_t>(j)]);
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

std::vector<Complex> eigenvalues(const RatMatrix& m) {
  if (!m.is_square()) fail(Errc::not_square, "eigenvalues of non-square matrix");
  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXd d(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) d(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(d, false);
  std::vector<Complex> out;
  for (Eigen::Index i = 0; i < n; ++i) out.emplace_back(solver.eigenvalues()(i).real(), solver.eigenvalues()(i).imag());
  std::sort(out.begin(), out.end(), root_less);
  return out;
}

Real diagonalization_residual(const NumberField& field, const Element& alpha) {
  return diagonalization_residual(field, embed(field), alpha);
}

Real diagonalization_residual(const NumberField& field, const EmbeddingData& emb, const Element& alpha) {
  const RatMatrix na = arithmetic_matrix(field, alpha);
  const auto n = static_cast<Eigen::Index>(na.rows());
  ComplexMatrix nc(n, n);
  Real n_max = 1;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      nc(i, j) = rat_to_real(na(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
      n_max = std::max(n_max, std::abs(nc(i, j).real()));
    }
  ComplexMatrix g = emb.gamma;
  for (Eigen::Index i = 0; i < n; ++i) {
    Real row_max = 0;
    for (Eigen::Index j = 0; j < n; ++j) row_max = std::max(row_max, std::abs(g(i, j)));
    g.row(i) /= Complex(row_max);
  }
  const auto kappa = embedding_values(emb, alpha);
  ComplexMatrix diff = g * nc;
  for (Eigen::Index i = 0; i < n; ++i) diff.row(i) -= kappa[static_cast<std::size_t>(i)] * g.row(i);
  Real worst = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) worst = std::max(worst, std::abs(diff(i, j)));
  return worst / n_max;
}

RoundedForm dh_cubic_form(const NumberField& field, Real tolerance) {
  if (field.degree() != 3) fail(Errc::wrong_degree, "Davenport-Heilbronn form needs a cubic field");
  const EmbeddingData emb = embed(field);
  std::vector<std::pair<Complex, Complex>> factors;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      factors.emplace_back(emb.gamma(i, 1) - emb.gamma(j, 1), emb.gamma(i, 2) - emb.gamma(j, 2));
  auto c = linear_product(factors);
  const Complex root_disc = std::sqrt(Complex(to_real_exact(field.discriminant())));
  for (auto& v : c) v /= root_disc;
  return round_form(c, tolerance);
}

QuarticSubform quartic_subform(const NumberField& field, int i, int j, Real tolerance) {
  if (field.degree() != 4) fail(Errc::wrong_degree, "quartic subform needs a quartic field");
  if (i == j || i < 2 || i > 4 || j < 2 || j > 4) fail(Errc::invalid_form, "indices must be distinct values in {2,3,4}");
  const EmbeddingData emb = embed(field);
  const ComplexMatrix p = emb.gamma.determinant() * emb.gamma.inverse();
  std::vector<std::pair<Complex, Complex>> factors;
  for (Eigen::Index k = 0; k < 4; ++k) factors.emplace_back(p(i - 1, k), -p(j - 1, k));
  auto c = linear_product(factors);
  const Real disc = to_real_exact(field.discriminant());
  for (auto& v : c) v /= disc;

  QuarticSubform out{round_form(c, tolerance), 9 - i - j, 0, 0};
  const Eigen::Index col = out.q - 1;
  Complex prod = 1;
  for (Eigen::Index l = 0; l < 4; ++l)
    for (Eigen::Index m = l + 1; m < 4; ++m) {
      const Complex d = emb.gamma(m, col) - emb.gamma(l, col);
      prod *= d * d;
    }
  out.omega_disc = round_to_int(prod.real());
  out.omega_residual = std::abs(prod - Complex(std::roundl(prod.real())));
  return out;
}

}  // namespace amat
