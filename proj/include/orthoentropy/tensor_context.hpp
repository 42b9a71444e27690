#pragma once

#include <cstdint>
#include <vector>

#include "orthoentropy/complex_matrix.hpp"
#include "orthoentropy/defaults.hpp"
#include "orthoentropy/tracial_algebra.hpp"

namespace orthoentropy {

enum class Leg { N, L };  // M_n (x) 1  vs  1 (x) L

/// A system of matrix units of M_n: e_ij* = e_ji, e_ij e_st = delta_js e_it,
/// sum_i e_ii = I.
struct MatrixUnits {
  int n = 0;
  std::vector<ComplexMatrix> units;  // row-major grid, n*n entries

  const ComplexMatrix& at(int i, int j) const { return units[i * n + j]; }

  static MatrixUnits standard(int n);
  /// Units conjugated by a unitary of M_n: f_ij = v e_ij v*.
  static MatrixUnits conjugated(const ComplexMatrix& v,
                                double tol = defaults::kUnitaryTol);
  /// Max defect over the three defining relations.
  double relation_defect() const;
};

/**
 * @brief The ambient algebra M = M_n(C) (x) L with its trace.
 *
 * Elements of M are (n * rep_dim) x (n * rep_dim) matrices whose n x n
 * grid of L-blocks is block-diagonal per L's structure. tau_M = Tr/n (x)
 * tau_L. Everything here is a pure function of its inputs.
 */
class TensorContext {
 public:
  TensorContext(int n, TracialAlgebra L);

  int n() const { return n_; }
  const TracialAlgebra& L() const { return L_; }
  int total_dim() const { return total_dim_; }

  /// Standard matrix unit e_ij of M_n as an n x n matrix.
  ComplexMatrix matrix_unit(int i, int j) const;
  /// a (x) 1_L for a in M_n.
  ComplexMatrix embed_factor(const ComplexMatrix& a) const;
  /// 1_n (x) y for y in L.
  ComplexMatrix embed_algebra(const AlgElement& y) const;
  /// a (x) y.
  ComplexMatrix tensor(const ComplexMatrix& a, const AlgElement& y) const;

  /// tau_M(x) = (1/n) sum_i tau_L(x_ii).
  Complex tau(const ComplexMatrix& x) const;
  /// tau_M(x y) without forming the product.
  Complex tau_of_product(const ComplexMatrix& x, const ComplexMatrix& y) const;
  /// ||x||_tau = tau(x* x)^{1/2}.
  double tau_norm(const ComplexMatrix& x) const;

  /// Unique decomposition x = sum_ij e_ij (x) x_ij; rejects inputs whose
  /// blocks carry off-pattern mass above pattern_tol.
  std::vector<std::vector<AlgElement>> blocks_of(
      const ComplexMatrix& x, double pattern_tol = defaults::kPatternTol) const;
  /// Decomposition with respect to an arbitrary system of matrix units,
  /// via the partial trace x_ij = Tr_n((f_ji (x) 1) x).
  std::vector<std::vector<AlgElement>> blocks_of_with_units(
      const MatrixUnits& units, const ComplexMatrix& x,
      double pattern_tol = defaults::kPatternTol) const;
  /// Inverse of blocks_of: sum_ij e_ij (x) x_ij.
  ComplexMatrix assemble(const std::vector<std::vector<AlgElement>>& blocks) const;

  /// Row relation sum_j u_ij u_kj* = delta_ik 1_L and column relation
  /// sum_i u_ij* u_ik = delta_jk 1_L, both within tol in Frobenius norm.
  bool unitarity_block_check(const std::vector<std::vector<AlgElement>>& blocks,
                             double tol = defaults::kUnitaryTol) const;

  /// E_N onto M_n (x) 1: sum_ij tau_L(x_ij) e_ij (x) 1.
  ComplexMatrix expect_onto_N(const ComplexMatrix& x) const;
  /// Expectation onto 1 (x) L: 1 (x) (sum_i x_ii / n).
  ComplexMatrix expect_onto_L_leg(const ComplexMatrix& x) const;
  /// E onto the chosen leg.
  ComplexMatrix expect_onto(Leg leg, const ComplexMatrix& x) const;
  /// E_{uAu*}(x) = u E_A(u* x u) u*, A the chosen leg.
  ComplexMatrix expect_onto_conjugate(const ComplexMatrix& u, const ComplexMatrix& x,
                                      Leg leg,
                                      double unitary_tol = defaults::kUnitaryTol) const;

  /// Spanning basis of the chosen leg subalgebra.
  std::vector<ComplexMatrix> leg_basis(Leg leg) const;
  /// Spanning basis of all of M: e_ij (x) f over L's block units.
  std::vector<ComplexMatrix> basis_of_M() const;

  // --- sector structure ---------------------------------------------------
  // M is a direct sum of full matrix algebras, one per L-block, of sizes
  // n * m_s; rows/cols of sector s are the global indices i*rep_dim +
  // offset_s + p. Unitaries of M are exactly the matrices that are unitary
  // sector by sector.

  int sector_count() const { return L_.block_count(); }
  int sector_dim(int s) const { return n_ * L_.block_sizes()[s]; }
  std::vector<int> sector_indices(int s) const;
  bool in_pattern(int row, int col) const;
  /// Off-pattern Frobenius mass of x (zero iff x is in M).
  double pattern_defect(const ComplexMatrix& x) const;
  /// Zero all off-pattern entries.
  ComplexMatrix project_to_pattern(const ComplexMatrix& x) const;
  /// Haar unitary of M: independent Haar draws per sector.
  ComplexMatrix haar_unitary_in_M(std::uint64_t seed) const;
  ComplexMatrix haar_unitary_in_M(Rng& rng) const;

  bool operator==(const TensorContext& o) const { return n_ == o.n_ && L_ == o.L_; }

 private:
  int n_;
  TracialAlgebra L_;
  int total_dim_;
};

}  // namespace orthoentropy
