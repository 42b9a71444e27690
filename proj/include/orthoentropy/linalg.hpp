#pragma once

#include <cstdint>
#include <random>

#include "orthoentropy/complex_matrix.hpp"
#include "orthoentropy/defaults.hpp"

namespace orthoentropy {

/// Kronecker product: entry ((i*b.dim+s),(j*b.dim+t)) = a(i,j)*b(s,t).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/**
 * @brief eta(t) = -t log t on [0,1], with eta(0) = 0 (natural log).
 *
 * Values in [-zero_tol, zero_tol] map to 0; throws NegativeEigenvalue
 * below -zero_tol.
 */
double eta(double t, double zero_tol = defaults::kZeroTol);

/// True iff ||u*u - I||_F <= tol and ||uu* - I||_F <= tol.
bool is_unitary(const ComplexMatrix& u, double tol = defaults::kUnitaryTol);

/// ||u*u - I||_F, the defect actually compared against tol above.
double unitarity_defect(const ComplexMatrix& u);

/**
 * @brief Deterministic random stream: uniforms, Gaussians, seeds.
 *
 * Gaussians come from Box-Muller over raw 53-bit uniforms, so two runs
 * with the same seed produce bit-identical values on any platform.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in (0, 1].
  double uniform() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

  double gaussian() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  Complex complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

  /// Independent child seed for substream `salt` (splitmix64 mix).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

/**
 * @brief Haar-distributed random unitary, deterministic per (dim, seed).
 *
 * QR of a complex Ginibre matrix; the factor is normalized so R has a
 * positive real diagonal, which is exactly the phase convention that
 * makes Q Haar.
 */
ComplexMatrix haar_random_unitary(int dim, std::uint64_t seed);

/// Same construction driven by an existing stream.
ComplexMatrix haar_random_unitary(int dim, Rng& rng);

}  // namespace orthoentropy
