#pragma once

#include <functional>
#include <vector>

#include "orthoentropy/complex_matrix.hpp"
#include "orthoentropy/defaults.hpp"

namespace orthoentropy {

/// Eigenvalues of a Hermitian matrix, sorted ascending, with the worst
/// residual max_k ||A v_k - lambda_k v_k||_2 over computed pairs.
struct Spectrum {
  std::vector<double> eigenvalues;
  double residual = 0.0;
};

/// Full decomposition: vectors(:,k) is the eigenvector for values[k].
struct EigenDecomposition {
  std::vector<double> values;
  ComplexMatrix vectors;
  double residual = 0.0;
};

/**
 * @brief Cyclic Jacobi eigensolver for Hermitian matrices.
 *
 * The input must satisfy ||a - a*||_max <= tol (NotHermitian otherwise);
 * it is symmetrized to (a + a*)/2 before sweeping. Sweeps run until the
 * off-diagonal Frobenius mass drops below 1e-13 * ||A||_F, at most 100
 * sweeps. Deterministic for identical input bits.
 */
EigenDecomposition hermitian_eigendecomposition(const ComplexMatrix& a,
                                                double tol = defaults::kHermitianTol);

/// Eigenvalues only.
Spectrum hermitian_spectrum(const ComplexMatrix& a, double tol = defaults::kHermitianTol);

/// V f(Lambda) V* for Hermitian input.
ComplexMatrix hermitian_function(const ComplexMatrix& a,
                                 const std::function<double(double)>& f,
                                 double tol = defaults::kHermitianTol);

/**
 * @brief exp(A) for skew-Hermitian A, via the spectrum of -iA.
 *
 * Exact geodesic ingredient for steps on the unitary group; the result
 * is unitary to solver precision.
 */
ComplexMatrix exp_skew_hermitian(const ComplexMatrix& a);

}  // namespace orthoentropy
