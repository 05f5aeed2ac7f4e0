// Copyright (c) 2026 the rfm2d developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef RFM2D_FORWARD_HPP
#define RFM2D_FORWARD_HPP

#include <cstdint>

#include "rfm2d/shapes.hpp"
#include "rfm2d/types.hpp"

namespace rfm2d {

// Constant-contrast penetrable medium.
struct MediumParams {
  double k = 4.0;
  Complex q{1.0, 1.0};
};

// Equispaced directions on the unit circle; for near-field data the same
// angles also index sources/receivers on the circle of given radius.
struct ArrayGeometry {
  int count = 64;
  double radius = 5.0;

  double angle(int i) const { return 2.0 * M_PI * i / count; }
  Point2 direction(int i) const {
    const double t = angle(i);
    return Point2(std::cos(t), std::sin(t));
  }
  Point2 curve_point(int i) const { return radius * direction(i); }
};

// Polar product-midpoint rule over {0 <= r <= r(theta)}.
struct QuadratureSpec {
  int angular = 256;
  int radial = 128;
};

// Relative sup-norm mismatch of the collocated boundary condition,
// per point source. Values above kWarnThreshold usually mean the series
// truncation is too low or k^2 sits near an interior Dirichlet eigenvalue.
struct BoundaryResidualReport {
  static constexpr double kWarnThreshold = 0.05;
  RealVector per_source;
  double max_relative = 0.0;
  bool warning = false;
};

struct NearfieldData {
  ComplexMatrix matrix;
  BoundaryResidualReport residuals;
};

// Boundary parameterization r(theta)(cos theta, sin theta).
Point2 boundary_point(const RadialShape& shape, double theta);

// Born-approximation far-field matrix
//   entry(i,j) = k^2 q  integral_D exp(-i k y . (xhat_i - d_j)) dy.
ComplexMatrix born_farfield_matrix(const RadialShape& shape, const MediumParams& med,
                                   const ArrayGeometry& geom,
                                   const QuadratureSpec& quad = {});

// Series coefficients c_n(y_j) of the sound-soft scattered field for point
// sources y_j on the measurement circle, solved by least-squares collocation
// of u^s = -Phi(., y_j) at count boundary points. Rows n = -trunc .. trunc.
ComplexMatrix soundsoft_series_coefficients(const RadialShape& shape, double k,
                                            const ArrayGeometry& geom, int trunc,
                                            BoundaryResidualReport* report = nullptr);

// Near-field matrix entry(i,j) = u^s(x_i, y_j) evaluated on the measurement
// circle from the collocation series, trunc terms each side of n = 0.
NearfieldData soundsoft_nearfield_matrix(const RadialShape& shape, double k,
                                         const ArrayGeometry& geom, int trunc = 15);

// Far-field matrix of the sound-soft disk of radius a, in the convention
// u^s ~ e^{ikr} r^{-1/2} u^inf:
//   entry(i,j) = -(1-i)/sqrt(pi k) sum_{|n|<=trunc} J_n(ka)/H_n(ka)
//                e^{i n (theta_i - theta_j)}.
ComplexMatrix disk_farfield_matrix(double a, double k, const ArrayGeometry& geom,
                                   int trunc);

// Unit-spectral-norm matrix with iid standard complex Gaussian entries
// before normalization. Entries are generated from mt19937_64 through a
// fixed Box-Muller mapping, so identical seeds give identical matrices on
// every platform.
ComplexMatrix noise_matrix(int n, std::uint64_t seed);

// Entrywise multiplicative noise M_ij (1 + delta E_ij) with |E|_2 = 1.
ComplexMatrix add_noise(const ComplexMatrix& M, double delta, std::uint64_t seed);

}  // namespace rfm2d

#endif  // RFM2D_FORWARD_HPP
