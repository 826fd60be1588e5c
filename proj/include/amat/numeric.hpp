#ifndef AMAT_NUMERIC_HPP
#define AMAT_NUMERIC_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "amat/field.hpp"

namespace amat {

using Real = long double;
using Complex = std::complex<Real>;
using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

/// Roots of B(x, 1) by Aberth iteration, sorted by (real, imaginary).
/// Throws zero_discriminant for repeated roots, root_finding on non-convergence.
std::vector<Complex> find_roots(const BinaryForm& form);

struct EmbeddingData {
  std::vector<Complex> roots;
  ComplexMatrix xi;     // xi(i, j) = root_i^j
  ComplexMatrix gamma;  // xi * (A Z): row i holds the images of w_0..w_{n-1} under embedding i
};

EmbeddingData embed(const NumberField& field);

/// kappa_i(alpha) for each embedding, in root order.
std::vector<Complex> embedding_values(const EmbeddingData& emb, const Element& alpha);

/// Numeric eigenvalues of an exact matrix, sorted like find_roots.
std::vector<Complex> eigenvalues(const RatMatrix& m);

/// Max-norm of G N - Theta G divided by max(1, |N|_max), where G is gamma
/// with every row scaled to unit max-norm and Theta = diag(kappa_i(alpha)).
/// Row scaling keeps the rows left eigenvectors, so the quantity is zero
/// exactly when N is diagonalized by the embeddings.
Real diagonalization_residual(const NumberField& field, const Element& alpha);
Real diagonalization_residual(const NumberField& field, const EmbeddingData& emb, const Element& alpha);

struct RoundedForm {
  BinaryForm form;
  Real rounding_residual;  // max distance of a coefficient from its integer
  Real imag_residual;      // max imaginary part discarded
};

/// Integer cubic form prod_{i<j} ((w1_i - w1_j) x + (w2_i - w2_j) y) / sqrt(disc).
/// Correct up to sign; its discriminant equals the field discriminant.
RoundedForm dh_cubic_form(const NumberField& field, Real tolerance = 1e-6L);

struct QuarticSubform {
  RoundedForm rounded;
  int q;                // the index in {2,3,4} not in {i,j}
  Int omega_disc;       // rounded prod_{l<m} (w_{q-1}^(m) - w_{q-1}^(l))^2
  Real omega_residual;  // distance of that product from omega_disc
};

/// B_ij(x,y) = (1/disc) prod_k (p_ik x - p_jk y) with P = det(gamma) gamma^{-1};
/// i, j are 1-based and distinct in {2, 3, 4}.
QuarticSubform quartic_subform(const NumberField& field, int i, int j, Real tolerance = 1e-5L);

}  // namespace amat

#endif  // AMAT_NUMERIC_HPP
