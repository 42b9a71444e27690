#pragma once

#include <vector>

#include "orthoentropy/complex_matrix.hpp"
#include "orthoentropy/defaults.hpp"
#include "orthoentropy/linalg.hpp"

namespace orthoentropy {

/// Element of a block-diagonal algebra: one square matrix per block,
/// sizes matching the parent algebra's block sizes.
struct AlgElement {
  std::vector<ComplexMatrix> blocks;
};

/**
 * @brief Finite-dimensional tracial von Neumann algebra.
 *
 * Represented as block sizes [m_1,...,m_r] plus trace weights
 * [w_1,...,w_r], where w_s is the trace of one minimal projection of
 * block s. The weights must satisfy sum_s w_s m_s = 1 (the trace is a
 * state) and w_s > 0 (faithfulness).
 */
class TracialAlgebra {
 public:
  TracialAlgebra(std::vector<int> block_sizes, std::vector<double> weights);

  /// Full matrix algebra M_m with the normalized trace Tr/m.
  static TracialAlgebra full_matrix(int m);
  /// Abelian algebra C^r with equal weights 1/r.
  static TracialAlgebra abelian(int r);

  const std::vector<int>& block_sizes() const { return block_sizes_; }
  const std::vector<double>& weights() const { return weights_; }
  int block_count() const { return static_cast<int>(block_sizes_.size()); }
  int rep_dim() const { return rep_dim_; }    // sum m_s
  int alg_dim() const { return alg_dim_; }    // sum m_s^2
  int block_offset(int s) const { return offsets_[s]; }

  // --- elements ---------------------------------------------------------

  AlgElement zero_element() const;
  AlgElement identity_element() const;
  /// Matrix-unit basis: for each block s all f^s_pq, alg_dim() elements.
  std::vector<AlgElement> basis_units() const;
  AlgElement random_element(Rng& rng) const;

  void validate_shape(const AlgElement& y) const;  // throws ShapeMismatch

  AlgElement add(const AlgElement& a, const AlgElement& b) const;
  AlgElement sub(const AlgElement& a, const AlgElement& b) const;
  AlgElement mul(const AlgElement& a, const AlgElement& b) const;
  AlgElement scale(Complex s, const AlgElement& a) const;
  AlgElement adjoint(const AlgElement& a) const;

  /// tau_L(y) = sum_s w_s Tr(y_s).
  Complex tau(const AlgElement& y) const;
  /// ||y||_tau = tau(y* y)^{1/2}.
  double tau_norm(const AlgElement& y) const;

  // --- block-diagonal matrix representation ------------------------------

  /// Embed as a rep_dim x rep_dim block-diagonal matrix.
  ComplexMatrix to_rep(const AlgElement& y) const;
  /**
   * Read an element back from its matrix representation. Off-pattern
   * entries above pattern_tol are rejected (ShapeMismatch), never
   * silently projected away.
   */
  AlgElement from_rep(const ComplexMatrix& m,
                      double pattern_tol = defaults::kPatternTol) const;

  /// Block index owning representation row/column g.
  int block_of_index(int g) const { return index_block_[g]; }
  /// Weight attached to representation row/column g.
  double weight_of_index(int g) const { return weights_[index_block_[g]]; }

  bool operator==(const TracialAlgebra& o) const {
    return block_sizes_ == o.block_sizes_ && weights_ == o.weights_;
  }

 private:
  std::vector<int> block_sizes_;
  std::vector<double> weights_;
  std::vector<int> offsets_;
  std::vector<int> index_block_;
  int rep_dim_ = 0;
  int alg_dim_ = 0;
};

}  // namespace orthoentropy
