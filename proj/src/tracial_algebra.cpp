#include "orthoentropy/tracial_algebra.hpp"

#include <cmath>
#include <string>

namespace orthoentropy {

TracialAlgebra::TracialAlgebra(std::vector<int> block_sizes, std::vector<double> weights)
    : block_sizes_(std::move(block_sizes)), weights_(std::move(weights)) {
  if (block_sizes_.empty() || block_sizes_.size() != weights_.size())
    throw ShapeMismatch("TracialAlgebra: need matching nonempty block/weight lists");
  double state = 0.0;
  for (size_t s = 0; s < block_sizes_.size(); ++s) {
    if (block_sizes_[s] < 1) throw ShapeMismatch("TracialAlgebra: block sizes must be >= 1");
    if (!(weights_[s] > 0.0))
      throw ShapeMismatch("TracialAlgebra: trace weights must be positive");
    offsets_.push_back(rep_dim_);
    rep_dim_ += block_sizes_[s];
    alg_dim_ += block_sizes_[s] * block_sizes_[s];
    state += weights_[s] * block_sizes_[s];
    for (int k = 0; k < block_sizes_[s]; ++k) index_block_.push_back(static_cast<int>(s));
  }
  if (std::abs(state - 1.0) > 1e-12)
    throw ShapeMismatch("TracialAlgebra: sum of w_s * m_s = " + std::to_string(state) +
                        ", trace is not a state");
}

TracialAlgebra TracialAlgebra::full_matrix(int m) {
  return TracialAlgebra({m}, {1.0 / m});
}

TracialAlgebra TracialAlgebra::abelian(int r) {
  return TracialAlgebra(std::vector<int>(r, 1), std::vector<double>(r, 1.0 / r));
}

AlgElement TracialAlgebra::zero_element() const {
  AlgElement y;
  for (int m : block_sizes_) y.blocks.emplace_back(m);
  return y;
}

AlgElement TracialAlgebra::identity_element() const {
  AlgElement y;
  for (int m : block_sizes_) y.blocks.push_back(ComplexMatrix::identity(m));
  return y;
}

std::vector<AlgElement> TracialAlgebra::basis_units() const {
  std::vector<AlgElement> basis;
  for (int s = 0; s < block_count(); ++s) {
    const int m = block_sizes_[s];
    for (int p = 0; p < m; ++p) {
      for (int q = 0; q < m; ++q) {
        AlgElement y = zero_element();
        y.blocks[s](p, q) = 1.0;
        basis.push_back(std::move(y));
      }
    }
  }
  return basis;
}

AlgElement TracialAlgebra::random_element(Rng& rng) const {
  AlgElement y = zero_element();
  for (int s = 0; s < block_count(); ++s)
    for (int p = 0; p < block_sizes_[s]; ++p)
      for (int q = 0; q < block_sizes_[s]; ++q) y.blocks[s](p, q) = rng.complex_gaussian();
  return y;
}

void TracialAlgebra::validate_shape(const AlgElement& y) const {
  if (static_cast<int>(y.blocks.size()) != block_count())
    throw ShapeMismatch("AlgElement: block count mismatch");
  for (int s = 0; s < block_count(); ++s)
    if (y.blocks[s].dim() != block_sizes_[s])
      throw ShapeMismatch("AlgElement: block " + std::to_string(s) + " has dim " +
                          std::to_string(y.blocks[s].dim()) + ", expected " +
                          std::to_string(block_sizes_[s]));
}

AlgElement TracialAlgebra::add(const AlgElement& a, const AlgElement& b) const {
  validate_shape(a);
  validate_shape(b);
  AlgElement out = a;
  for (int s = 0; s < block_count(); ++s) out.blocks[s] += b.blocks[s];
  return out;
}

AlgElement TracialAlgebra::sub(const AlgElement& a, const AlgElement& b) const {
  validate_shape(a);
  validate_shape(b);
  AlgElement out = a;
  for (int s = 0; s < block_count(); ++s) out.blocks[s] -= b.blocks[s];
  return out;
}

AlgElement TracialAlgebra::mul(const AlgElement& a, const AlgElement& b) const {
  validate_shape(a);
  validate_shape(b);
  AlgElement out;
  for (int s = 0; s < block_count(); ++s) out.blocks.push_back(a.blocks[s] * b.blocks[s]);
  return out;
}

AlgElement TracialAlgebra::scale(Complex c, const AlgElement& a) const {
  validate_shape(a);
  AlgElement out = a;
  for (auto& blk : out.blocks) blk *= c;
  return out;
}

AlgElement TracialAlgebra::adjoint(const AlgElement& a) const {
  validate_shape(a);
  AlgElement out;
  for (const auto& blk : a.blocks) out.blocks.push_back(blk.adjoint());
  return out;
}

Complex TracialAlgebra::tau(const AlgElement& y) const {
  validate_shape(y);
  Complex t = 0.0;
  for (int s = 0; s < block_count(); ++s) t += weights_[s] * y.blocks[s].trace();
  return t;
}

double TracialAlgebra::tau_norm(const AlgElement& y) const {
  validate_shape(y);
  double s2 = 0.0;
  for (int s = 0; s < block_count(); ++s) {
    double blk = 0.0;
    for (int p = 0; p < block_sizes_[s]; ++p)
      for (int q = 0; q < block_sizes_[s]; ++q) blk += std::norm(y.blocks[s](p, q));
    s2 += weights_[s] * blk;
  }
  return std::sqrt(s2);
}

ComplexMatrix TracialAlgebra::to_rep(const AlgElement& y) const {
  validate_shape(y);
  ComplexMatrix m(rep_dim_);
  for (int s = 0; s < block_count(); ++s) {
    const int off = offsets_[s];
    for (int p = 0; p < block_sizes_[s]; ++p)
      for (int q = 0; q < block_sizes_[s]; ++q) m(off + p, off + q) = y.blocks[s](p, q);
  }
  return m;
}

AlgElement TracialAlgebra::from_rep(const ComplexMatrix& m, double pattern_tol) const {
  if (m.dim() != rep_dim_)
    throw ShapeMismatch("from_rep: matrix dim " + std::to_string(m.dim()) +
                        " != rep_dim " + std::to_string(rep_dim_));
  for (int i = 0; i < rep_dim_; ++i) {
    for (int j = 0; j < rep_dim_; ++j) {
      if (index_block_[i] == index_block_[j]) continue;
      if (std::abs(m(i, j)) > pattern_tol)
        throw ShapeMismatch("from_rep: entry (" + std::to_string(i) + "," +
                            std::to_string(j) + ") lies outside the block pattern");
    }
  }
  AlgElement y = zero_element();
  for (int s = 0; s < block_count(); ++s) {
    const int off = offsets_[s];
    for (int p = 0; p < block_sizes_[s]; ++p)
      for (int q = 0; q < block_sizes_[s]; ++q) y.blocks[s](p, q) = m(off + p, off + q);
  }
  return y;
}

}  // namespace orthoentropy
