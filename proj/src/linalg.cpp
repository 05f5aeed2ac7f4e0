// Copyright (c) 2026 the rfm2d developers.
// SPDX-License-Identifier: Apache-2.0

#include "rfm2d/linalg.hpp"

#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace rfm2d {

namespace {

constexpr double kLstsqRankThreshold = 1e-12;

// Rotate each column so its largest-modulus entry is real positive.
// Decompositions are unique only up to per-vector phase; pinning the
// phase makes fixtures reproducible.
void fix_column_phases(ComplexMatrix& U, ComplexMatrix* paired = nullptr) {
  for (Eigen::Index c = 0; c < U.cols(); ++c) {
    Eigen::Index imax = 0;
    U.col(c).cwiseAbs().maxCoeff(&imax);
    const Complex pivot = U(imax, c);
    const double mag = std::abs(pivot);
    if (mag == 0.0) continue;
    const Complex phase = std::conj(pivot) / mag;
    U.col(c) *= phase;
    if (paired != nullptr) paired->col(c) *= phase;
  }
}

ComplexMatrix symmetrized(const Eigen::Ref<const ComplexMatrix>& A, const char* fn) {
  if (A.rows() != A.cols()) {
    throw std::invalid_argument(std::string(fn) + ": matrix must be square");
  }
  const double scale = A.cwiseAbs().maxCoeff();
  const double skew = (A - A.adjoint()).cwiseAbs().maxCoeff();
  if (skew > kHermitianTolerance * scale) {
    throw std::invalid_argument(std::string(fn) + ": matrix is not Hermitian");
  }
  return 0.5 * (A + A.adjoint());
}

}  // namespace

HermitianEig hermitian_eig(const Eigen::Ref<const ComplexMatrix>& A) {
  const ComplexMatrix H = symmetrized(A, "hermitian_eig");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(H);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eig: eigensolver failed to converge");
  }
  HermitianEig out{solver.eigenvalues(), solver.eigenvectors()};
  fix_column_phases(out.eigenvectors);
  return out;
}

ComplexMatrix hermitian_abs(const Eigen::Ref<const ComplexMatrix>& A) {
  const HermitianEig eig = hermitian_eig(A);
  ComplexMatrix B = eig.eigenvectors *
                    eig.eigenvalues.cwiseAbs().asDiagonal() *
                    eig.eigenvectors.adjoint();
  return 0.5 * (B + B.adjoint());
}

SpectralData svd(const Eigen::Ref<const ComplexMatrix>& A) {
  Eigen::JacobiSVD<ComplexMatrix> solver(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SpectralData out{solver.singularValues(), solver.matrixU(), solver.matrixV()};
  // A = U S V* is preserved by rotating matched U and V columns together.
  for (Eigen::Index c = 0; c < out.left_vectors.cols(); ++c) {
    Eigen::Index imax = 0;
    out.left_vectors.col(c).cwiseAbs().maxCoeff(&imax);
    const Complex pivot = out.left_vectors(imax, c);
    const double mag = std::abs(pivot);
    if (mag == 0.0) continue;
    const Complex phase = std::conj(pivot) / mag;
    out.left_vectors.col(c) *= phase;
    out.right_vectors.col(c) *= phase;
  }
  return out;
}

LeastSquaresResult lstsq(const Eigen::Ref<const ComplexMatrix>& A,
                         const Eigen::Ref<const ComplexVector>& b) {
  if (A.rows() < A.cols()) {
    throw std::invalid_argument("lstsq: system must have rows >= cols");
  }
  if (b.size() != A.rows()) {
    throw std::invalid_argument("lstsq: right-hand side length mismatch");
  }
  Eigen::JacobiSVD<ComplexMatrix> solver(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  solver.setThreshold(kLstsqRankThreshold);
  LeastSquaresResult out;
  out.solution = solver.solve(b);
  out.rank = solver.rank();
  out.rank_deficient = out.rank < A.cols();
  return out;
}

double spectral_norm(const Eigen::Ref<const ComplexMatrix>& A) {
  if (A.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> solver(A);
  return solver.singularValues()(0);
}

}  // namespace rfm2d
