// Copyright (c) 2026 the rfm2d developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef RFM2D_TYPES_HPP
#define RFM2D_TYPES_HPP

#include <complex>

#include <Eigen/Dense>

namespace rfm2d {

using Real = double;
using Complex = std::complex<double>;

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Points and directions in the plane.
using Point2 = Eigen::Vector2d;

}  // namespace rfm2d

#endif  // RFM2D_TYPES_HPP
