#include "orthoentropy/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace orthoentropy {

namespace {

double off_diagonal_mass(const ComplexMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition hermitian_eigendecomposition(const ComplexMatrix& input, double tol) {
  const int d = input.dim();
  if (!input.all_finite())
    throw ShapeMismatch("hermitian_eigendecomposition: non-finite entries");
  const double herm_defect = max_abs_diff(input, input.adjoint());
  if (herm_defect > tol)
    throw NotHermitian("hermitian defect " + std::to_string(herm_defect) +
                       " exceeds tol " + std::to_string(tol));

  // Symmetrize, then run cyclic Jacobi with complex rotations.
  ComplexMatrix a(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));
  const ComplexMatrix a0 = a;

  ComplexMatrix v = ComplexMatrix::identity(d);
  const double stop = 1e-13 * a.frobenius_norm();
  constexpr int kMaxSweeps = 100;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_mass(a) <= stop) break;
    for (int p = 0; p < d; ++p) {
      for (int q = p + 1; q < d; ++q) {
        const Complex apq = a(p, q);
        const double beta = std::abs(apq);
        if (beta == 0.0) continue;

        // 2x2 unitary zeroing a(p,q): phase rotation to the real case,
        // then the classical Jacobi angle (smaller root).
        const Complex phase = apq / beta;
        const double alpha = a(p, p).real();
        const double gamma = a(q, q).real();
        const double tau = (gamma - alpha) / (2.0 * beta);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex cp = phase * c;  // U = [[e^{i phi} c, e^{i phi} s], [-s, c]]
        const Complex sp = phase * s;

        // Columns p,q of A <- A U.
        for (int r = 0; r < d; ++r) {
          const Complex arp = a(r, p);
          const Complex arq = a(r, q);
          a(r, p) = cp * arp - s * arq;
          a(r, q) = sp * arp + c * arq;
        }
        // Rows p,q of A <- U* A.
        for (int r = 0; r < d; ++r) {
          const Complex apr = a(p, r);
          const Complex aqr = a(q, r);
          a(p, r) = std::conj(cp) * apr - s * aqr;
          a(q, r) = std::conj(sp) * apr + c * aqr;
        }
        // Clean the pair to keep the Hermitian invariant exact.
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = Complex(a(p, p).real(), 0.0);
        a(q, q) = Complex(a(q, q).real(), 0.0);

        // Accumulate V <- V U.
        for (int r = 0; r < d; ++r) {
          const Complex vrp = v(r, p);
          const Complex vrq = v(r, q);
          v(r, p) = cp * vrp - s * vrq;
          v(r, q) = sp * vrp + c * vrq;
        }
      }
    }
  }

  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out{std::vector<double>(d), ComplexMatrix(d), 0.0};
  for (int k = 0; k < d; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (int r = 0; r < d; ++r) out.vectors(r, k) = v(r, order[k]);
  }

  // Residual against the symmetrized input, max over pairs of the vector
  // 2-norm of A v - lambda v.
  double worst = 0.0;
  for (int k = 0; k < d; ++k) {
    double res2 = 0.0;
    for (int i = 0; i < d; ++i) {
      Complex acc = 0.0;
      for (int j = 0; j < d; ++j) acc += a0(i, j) * out.vectors(j, k);
      acc -= out.values[k] * out.vectors(i, k);
      res2 += std::norm(acc);
    }
    worst = std::max(worst, std::sqrt(res2));
  }
  out.residual = worst;
  return out;
}

Spectrum hermitian_spectrum(const ComplexMatrix& a, double tol) {
  EigenDecomposition eig = hermitian_eigendecomposition(a, tol);
  return Spectrum{std::move(eig.values), eig.residual};
}

ComplexMatrix hermitian_function(const ComplexMatrix& a,
                                 const std::function<double(double)>& f, double tol) {
  const EigenDecomposition eig = hermitian_eigendecomposition(a, tol);
  const int d = a.dim();
  ComplexMatrix out(d);
  for (int k = 0; k < d; ++k) {
    const double fk = f(eig.values[k]);
    if (fk == 0.0) continue;
    for (int i = 0; i < d; ++i) {
      const Complex vik = eig.vectors(i, k);
      if (vik == 0.0) continue;
      for (int j = 0; j < d; ++j)
        out(i, j) += fk * vik * std::conj(eig.vectors(j, k));
    }
  }
  return out;
}

ComplexMatrix exp_skew_hermitian(const ComplexMatrix& a) {
  const int d = a.dim();
  // H = -iA is Hermitian; exp(A) = V diag(e^{i lambda}) V*.
  ComplexMatrix h(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) h(i, j) = Complex(0.0, -1.0) * a(i, j);
  const double defect = max_abs_diff(h, h.adjoint());
  if (defect > 1e-10 * (1.0 + h.max_abs()))
    throw NotHermitian("exp_skew_hermitian: input is not skew-Hermitian");

  const EigenDecomposition eig = hermitian_eigendecomposition(h, 1e-9 * (1.0 + h.max_abs()));
  ComplexMatrix out(d);
  for (int k = 0; k < d; ++k) {
    const Complex ek = std::exp(Complex(0.0, eig.values[k]));
    for (int i = 0; i < d; ++i) {
      const Complex vik = eig.vectors(i, k);
      if (vik == 0.0) continue;
      for (int j = 0; j < d; ++j)
        out(i, j) += ek * vik * std::conj(eig.vectors(j, k));
    }
  }
  return out;
}

}  // namespace orthoentropy
