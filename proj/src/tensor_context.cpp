#include "orthoentropy/tensor_context.hpp"

#include <cmath>
#include <string>

#include "orthoentropy/linalg.hpp"

namespace orthoentropy {

MatrixUnits MatrixUnits::standard(int n) {
  MatrixUnits mu;
  mu.n = n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ComplexMatrix e(n);
      e(i, j) = 1.0;
      mu.units.push_back(std::move(e));
    }
  }
  return mu;
}

MatrixUnits MatrixUnits::conjugated(const ComplexMatrix& v, double tol) {
  if (!is_unitary(v, tol)) throw NotUnitary("MatrixUnits::conjugated: v is not unitary");
  const int n = v.dim();
  const ComplexMatrix vs = v.adjoint();
  MatrixUnits mu;
  mu.n = n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ComplexMatrix e(n);
      e(i, j) = 1.0;
      mu.units.push_back(v * e * vs);
    }
  }
  return mu;
}

double MatrixUnits::relation_defect() const {
  double worst = 0.0;
  ComplexMatrix sum(n);
  for (int i = 0; i < n; ++i) {
    sum += at(i, i);
    for (int j = 0; j < n; ++j) {
      worst = std::max(worst, max_abs_diff(at(i, j).adjoint(), at(j, i)));
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
          ComplexMatrix expect(n);
          if (j == s) expect = at(i, t);
          worst = std::max(worst, max_abs_diff(at(i, j) * at(s, t), expect));
        }
    }
  }
  worst = std::max(worst, max_abs_diff(sum, ComplexMatrix::identity(n)));
  return worst;
}

TensorContext::TensorContext(int n, TracialAlgebra L)
    : n_(n), L_(std::move(L)), total_dim_(n * L_.rep_dim()) {
  if (n < 1) throw ShapeMismatch("TensorContext: n must be >= 1");
}

ComplexMatrix TensorContext::matrix_unit(int i, int j) const {
  ComplexMatrix e(n_);
  e(i, j) = 1.0;
  return e;
}

ComplexMatrix TensorContext::embed_factor(const ComplexMatrix& a) const {
  if (a.dim() != n_) throw ShapeMismatch("embed_factor: expected an n x n matrix");
  return kron(a, ComplexMatrix::identity(L_.rep_dim()));
}

ComplexMatrix TensorContext::embed_algebra(const AlgElement& y) const {
  return kron(ComplexMatrix::identity(n_), L_.to_rep(y));
}

ComplexMatrix TensorContext::tensor(const ComplexMatrix& a, const AlgElement& y) const {
  if (a.dim() != n_) throw ShapeMismatch("tensor: expected an n x n factor");
  return kron(a, L_.to_rep(y));
}

Complex TensorContext::tau(const ComplexMatrix& x) const {
  if (x.dim() != total_dim_) throw ShapeMismatch("tau_M: dimension mismatch");
  const int dl = L_.rep_dim();
  Complex t = 0.0;
  for (int g = 0; g < total_dim_; ++g) t += L_.weight_of_index(g % dl) * x(g, g);
  return t / static_cast<double>(n_);
}

Complex TensorContext::tau_of_product(const ComplexMatrix& x, const ComplexMatrix& y) const {
  if (x.dim() != total_dim_ || y.dim() != total_dim_)
    throw ShapeMismatch("tau_of_product: dimension mismatch");
  const int dl = L_.rep_dim();
  Complex t = 0.0;
  for (int g = 0; g < total_dim_; ++g) {
    Complex row = 0.0;
    for (int k = 0; k < total_dim_; ++k) row += x(g, k) * y(k, g);
    t += L_.weight_of_index(g % dl) * row;
  }
  return t / static_cast<double>(n_);
}

double TensorContext::tau_norm(const ComplexMatrix& x) const {
  if (x.dim() != total_dim_) throw ShapeMismatch("tau_norm: dimension mismatch");
  const int dl = L_.rep_dim();
  double s = 0.0;
  for (int i = 0; i < total_dim_; ++i)
    for (int j = 0; j < total_dim_; ++j) s += L_.weight_of_index(i % dl) * std::norm(x(i, j));
  return std::sqrt(s / n_);
}

std::vector<std::vector<AlgElement>> TensorContext::blocks_of(const ComplexMatrix& x,
                                                              double pattern_tol) const {
  if (x.dim() != total_dim_) throw ShapeMismatch("blocks_of: dimension mismatch");
  const int dl = L_.rep_dim();
  std::vector<std::vector<AlgElement>> grid(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      ComplexMatrix sub(dl);
      for (int p = 0; p < dl; ++p)
        for (int q = 0; q < dl; ++q) sub(p, q) = x(i * dl + p, j * dl + q);
      grid[i].push_back(L_.from_rep(sub, pattern_tol));
    }
  }
  return grid;
}

std::vector<std::vector<AlgElement>> TensorContext::blocks_of_with_units(
    const MatrixUnits& units, const ComplexMatrix& x, double pattern_tol) const {
  if (units.n != n_) throw ShapeMismatch("blocks_of_with_units: units size mismatch");
  if (x.dim() != total_dim_) throw ShapeMismatch("blocks_of_with_units: dimension mismatch");
  const int dl = L_.rep_dim();
  std::vector<std::vector<AlgElement>> grid(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      // x_ij = Tr_n((f_ji (x) 1) x), the unnormalized partial trace over M_n.
      const ComplexMatrix lifted = embed_factor(units.at(j, i)) * x;
      ComplexMatrix sub(dl);
      for (int a = 0; a < n_; ++a)
        for (int p = 0; p < dl; ++p)
          for (int q = 0; q < dl; ++q) sub(p, q) += lifted(a * dl + p, a * dl + q);
      grid[i].push_back(L_.from_rep(sub, pattern_tol));
    }
  }
  return grid;
}

ComplexMatrix TensorContext::assemble(const std::vector<std::vector<AlgElement>>& blocks) const {
  if (static_cast<int>(blocks.size()) != n_)
    throw ShapeMismatch("assemble: grid must be n x n");
  const int dl = L_.rep_dim();
  ComplexMatrix x(total_dim_);
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(blocks[i].size()) != n_)
      throw ShapeMismatch("assemble: grid must be n x n");
    for (int j = 0; j < n_; ++j) {
      const ComplexMatrix rep = L_.to_rep(blocks[i][j]);
      for (int p = 0; p < dl; ++p)
        for (int q = 0; q < dl; ++q) x(i * dl + p, j * dl + q) = rep(p, q);
    }
  }
  return x;
}

bool TensorContext::unitarity_block_check(const std::vector<std::vector<AlgElement>>& blocks,
                                          double tol) const {
  if (static_cast<int>(blocks.size()) != n_) throw ShapeMismatch("grid must be n x n");
  const AlgElement one = L_.identity_element();
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      AlgElement row_sum = L_.zero_element();
      AlgElement col_sum = L_.zero_element();
      for (int j = 0; j < n_; ++j) {
        row_sum = L_.add(row_sum, L_.mul(blocks[i][j], L_.adjoint(blocks[k][j])));
        col_sum = L_.add(col_sum, L_.mul(L_.adjoint(blocks[j][i]), blocks[j][k]));
      }
      const AlgElement target = (i == k) ? one : L_.zero_element();
      double row_defect = 0.0, col_defect = 0.0;
      for (int s = 0; s < L_.block_count(); ++s) {
        row_defect += std::pow(frobenius_diff(row_sum.blocks[s], target.blocks[s]), 2);
        col_defect += std::pow(frobenius_diff(col_sum.blocks[s], target.blocks[s]), 2);
      }
      if (std::sqrt(row_defect) > tol || std::sqrt(col_defect) > tol) return false;
    }
  }
  return true;
}

ComplexMatrix TensorContext::expect_onto_N(const ComplexMatrix& x) const {
  if (x.dim() != total_dim_) throw ShapeMismatch("expect_onto_N: dimension mismatch");
  const int dl = L_.rep_dim();
  ComplexMatrix out(total_dim_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      Complex c = 0.0;  // tau_L of the (i,j) block, read off the diagonal
      for (int p = 0; p < dl; ++p)
        c += L_.weight_of_index(p) * x(i * dl + p, j * dl + p);
      if (c == 0.0) continue;
      for (int p = 0; p < dl; ++p) out(i * dl + p, j * dl + p) = c;
    }
  }
  return out;
}

ComplexMatrix TensorContext::expect_onto_L_leg(const ComplexMatrix& x) const {
  if (x.dim() != total_dim_) throw ShapeMismatch("expect_onto_L_leg: dimension mismatch");
  const int dl = L_.rep_dim();
  ComplexMatrix y(dl);
  for (int a = 0; a < n_; ++a)
    for (int p = 0; p < dl; ++p)
      for (int q = 0; q < dl; ++q) y(p, q) += x(a * dl + p, a * dl + q);
  y *= Complex(1.0 / n_, 0.0);
  // Pinch to the block pattern; a no-op whenever x lies in M.
  for (int p = 0; p < dl; ++p)
    for (int q = 0; q < dl; ++q)
      if (L_.block_of_index(p) != L_.block_of_index(q)) y(p, q) = 0.0;
  return kron(ComplexMatrix::identity(n_), y);
}

ComplexMatrix TensorContext::expect_onto(Leg leg, const ComplexMatrix& x) const {
  return leg == Leg::N ? expect_onto_N(x) : expect_onto_L_leg(x);
}

ComplexMatrix TensorContext::expect_onto_conjugate(const ComplexMatrix& u,
                                                   const ComplexMatrix& x, Leg leg,
                                                   double unitary_tol) const {
  if (u.dim() != total_dim_ || x.dim() != total_dim_)
    throw ShapeMismatch("expect_onto_conjugate: dimension mismatch");
  if (!is_unitary(u, unitary_tol))
    throw NotUnitary("expect_onto_conjugate: conjugator is not unitary");
  const ComplexMatrix us = u.adjoint();
  return u * expect_onto(leg, us * x * u) * us;
}

std::vector<ComplexMatrix> TensorContext::leg_basis(Leg leg) const {
  std::vector<ComplexMatrix> basis;
  if (leg == Leg::N) {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) basis.push_back(embed_factor(matrix_unit(i, j)));
  } else {
    for (const AlgElement& f : L_.basis_units()) basis.push_back(embed_algebra(f));
  }
  return basis;
}

std::vector<ComplexMatrix> TensorContext::basis_of_M() const {
  std::vector<ComplexMatrix> basis;
  const auto lunits = L_.basis_units();
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (const AlgElement& f : lunits) basis.push_back(tensor(matrix_unit(i, j), f));
  return basis;
}

std::vector<int> TensorContext::sector_indices(int s) const {
  std::vector<int> idx;
  const int dl = L_.rep_dim();
  const int off = L_.block_offset(s);
  for (int i = 0; i < n_; ++i)
    for (int p = 0; p < L_.block_sizes()[s]; ++p) idx.push_back(i * dl + off + p);
  return idx;
}

bool TensorContext::in_pattern(int row, int col) const {
  const int dl = L_.rep_dim();
  return L_.block_of_index(row % dl) == L_.block_of_index(col % dl);
}

double TensorContext::pattern_defect(const ComplexMatrix& x) const {
  if (x.dim() != total_dim_) throw ShapeMismatch("pattern_defect: dimension mismatch");
  double s = 0.0;
  for (int i = 0; i < total_dim_; ++i)
    for (int j = 0; j < total_dim_; ++j)
      if (!in_pattern(i, j)) s += std::norm(x(i, j));
  return std::sqrt(s);
}

ComplexMatrix TensorContext::project_to_pattern(const ComplexMatrix& x) const {
  if (x.dim() != total_dim_) throw ShapeMismatch("project_to_pattern: dimension mismatch");
  ComplexMatrix out = x;
  for (int i = 0; i < total_dim_; ++i)
    for (int j = 0; j < total_dim_; ++j)
      if (!in_pattern(i, j)) out(i, j) = 0.0;
  return out;
}

ComplexMatrix TensorContext::haar_unitary_in_M(Rng& rng) const {
  ComplexMatrix u(total_dim_);
  for (int s = 0; s < sector_count(); ++s) {
    const std::vector<int> idx = sector_indices(s);
    const ComplexMatrix block = haar_random_unitary(static_cast<int>(idx.size()), rng);
    for (size_t a = 0; a < idx.size(); ++a)
      for (size_t b = 0; b < idx.size(); ++b)
        u(idx[a], idx[b]) = block(static_cast<int>(a), static_cast<int>(b));
  }
  return u;
}

ComplexMatrix TensorContext::haar_unitary_in_M(std::uint64_t seed) const {
  Rng rng(seed);
  return haar_unitary_in_M(rng);
}

}  // namespace orthoentropy
