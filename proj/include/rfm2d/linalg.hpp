// Copyright (c) 2026 the rfm2d developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef RFM2D_LINALG_HPP
#define RFM2D_LINALG_HPP

#include "rfm2d/types.hpp"

namespace rfm2d {

// Eigendecomposition of a Hermitian matrix, eigenvalues ascending,
// eigenvectors orthonormal columns.
struct HermitianEig {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

// Singular values (descending, nonnegative) with matched left/right
// singular vectors as orthonormal columns.
struct SpectralData {
  RealVector values;
  ComplexMatrix left_vectors;
  ComplexMatrix right_vectors;
};

struct LeastSquaresResult {
  ComplexVector solution;
  Eigen::Index rank = 0;
  bool rank_deficient = false;
};

// Inputs may be Hermitian only up to rounding; anything whose skew part
// exceeds this relative bound is rejected.
inline constexpr double kHermitianTolerance = 1e-8;

// Eigendecomposition of a (near-)Hermitian matrix. The input is
// symmetrized as (A + A*)/2 before factorization. Eigenvector phases are
// fixed so the largest-modulus component of each column is real positive.
HermitianEig hermitian_eig(const Eigen::Ref<const ComplexMatrix>& A);

// |A| = V diag(|lambda|) V* for Hermitian A.
ComplexMatrix hermitian_abs(const Eigen::Ref<const ComplexMatrix>& A);

// Full SVD with the same deterministic phase convention as hermitian_eig.
SpectralData svd(const Eigen::Ref<const ComplexMatrix>& A);

// Least-squares minimizer of |Ax - b|_2 for m >= n. Rank-deficient
// systems (relative singular-value threshold 1e-12) yield the
// minimum-norm solution and are flagged.
LeastSquaresResult lstsq(const Eigen::Ref<const ComplexMatrix>& A,
                         const Eigen::Ref<const ComplexVector>& b);

// Largest singular value.
double spectral_norm(const Eigen::Ref<const ComplexMatrix>& A);

}  // namespace rfm2d

#endif  // RFM2D_LINALG_HPP
