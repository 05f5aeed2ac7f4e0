// Copyright (c) 2026 the rfm2d developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef RFM2D_SPECFUN_HPP
#define RFM2D_SPECFUN_HPP

#include <vector>

#include "rfm2d/types.hpp"

namespace rfm2d {

// Largest integer order supported by the cylinder-function routines.
// Kernel and series truncations in this project stay at or below 15,
// so 60 leaves a wide guard band.
inline constexpr int kMaxBesselOrder = 60;

// Arguments of the fundamental solution are floored at this value of
// k|x - y|; evaluation closer to the singularity is a domain error.
inline constexpr double kFundamentalSolutionFloor = 1e-8;

// Bessel function of the first kind J_n(x), integer order n >= 0, x > 0.
double bessel_j(int order, double x);

// Bessel function of the second kind Y_n(x), integer order n >= 0, x > 0.
double bessel_y(int order, double x);

// J_0(x) .. J_max_order(x) in one pass.
std::vector<double> bessel_j_sequence(int max_order, double x);

// Y_0(x) .. Y_max_order(x) in one pass.
std::vector<double> bessel_y_sequence(int max_order, double x);

// Hankel function of the first kind H_n^(1)(x) = J_n(x) + i Y_n(x).
// Negative orders resolve through H_{-n}^(1) = (-1)^n H_n^(1).
Complex hankel1(int order, double x);

// H_0^(1)(x) .. H_max_order^(1)(x).
std::vector<Complex> hankel1_sequence(int max_order, double x);

// Outgoing free-space Green function of the 2-D Helmholtz operator,
// (i/4) H_0^(1)(k|x - y|). Coincident points are a domain error.
Complex fundamental_solution(const Point2& x, const Point2& y, double k);

// 2-D far-field normalization constant e^{i pi/4} / sqrt(8 pi k).
Complex farfield_gamma(double k);

}  // namespace rfm2d

#endif  // RFM2D_SPECFUN_HPP
