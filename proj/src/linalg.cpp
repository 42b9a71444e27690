#include "orthoentropy/linalg.hpp"

#include <cmath>
#include <string>

namespace orthoentropy {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int na = a.dim();
  const int nb = b.dim();
  ComplexMatrix c(na * nb);
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      if (aij == 0.0) continue;
      for (int s = 0; s < nb; ++s)
        for (int t = 0; t < nb; ++t) c(i * nb + s, j * nb + t) = aij * b(s, t);
    }
  }
  return c;
}

double eta(double t, double zero_tol) {
  if (t < -zero_tol)
    throw NegativeEigenvalue("eta: argument " + std::to_string(t) +
                             " below -zero_tol = " + std::to_string(-zero_tol));
  if (t <= zero_tol) return 0.0;
  return -t * std::log(t);
}

double unitarity_defect(const ComplexMatrix& u) {
  const ComplexMatrix gram = u.adjoint() * u;
  return frobenius_diff(gram, ComplexMatrix::identity(u.dim()));
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  const ComplexMatrix id = ComplexMatrix::identity(u.dim());
  return frobenius_diff(u.adjoint() * u, id) <= tol &&
         frobenius_diff(u * u.adjoint(), id) <= tol;
}

ComplexMatrix haar_random_unitary(int dim, Rng& rng) {
  if (dim < 1) throw ShapeMismatch("haar_random_unitary: dim must be >= 1");
  ComplexMatrix g(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_gaussian();

  // Modified Gram-Schmidt, column by column, with one reorthogonalization
  // pass. Normalizing against the positive residual norm yields the QR
  // factor whose R has positive real diagonal, i.e. the Haar-correct Q.
  ComplexMatrix q = g;
  for (int j = 0; j < dim; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) {
        Complex proj = 0.0;
        for (int i = 0; i < dim; ++i) proj += std::conj(q(i, k)) * q(i, j);
        for (int i = 0; i < dim; ++i) q(i, j) -= proj * q(i, k);
      }
    }
    double nrm = 0.0;
    for (int i = 0; i < dim; ++i) nrm += std::norm(q(i, j));
    nrm = std::sqrt(nrm);
    for (int i = 0; i < dim; ++i) q(i, j) /= nrm;
  }
  return q;
}

ComplexMatrix haar_random_unitary(int dim, std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_unitary(dim, rng);
}

}  // namespace orthoentropy
