// Copyright (c) 2026 the rfm2d developers.
// SPDX-License-Identifier: Apache-2.0

#include "rfm2d/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rfm2d {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240;

void check_arg(double x, const char* fn) {
  if (!(x > 0.0)) {
    throw std::domain_error(std::string(fn) + ": argument must be positive");
  }
}

void check_order(int order, const char* fn) {
  if (order < 0 || order > kMaxBesselOrder) {
    throw std::domain_error(std::string(fn) + ": order " +
                            std::to_string(order) + " outside [0, " +
                            std::to_string(kMaxBesselOrder) + "]");
  }
}

// J_0..J_nmax by Miller's downward recurrence. The recurrence is run from
// a start order high enough that J_start(x) is negligible, then the whole
// sequence is normalized with J_0 + 2 sum_k J_{2k} = 1. Upward recurrence
// would amplify the dominant Y-type solution and is not used for J.
std::vector<double> miller_j(int nmax, double x) {
  const int start_low = std::max(nmax, static_cast<int>(std::ceil(2.0 * x)));
  int start = start_low + 32;
  if (start % 2 != 0) ++start;

  std::vector<double> j(static_cast<std::size_t>(start) + 1, 0.0);
  double above = 0.0;
  double current = 1e-300;
  j[static_cast<std::size_t>(start)] = current;
  for (int m = start; m >= 1; --m) {
    double below = (2.0 * m / x) * current - above;
    above = current;
    current = below;
    j[static_cast<std::size_t>(m - 1)] = current;
    if (std::abs(current) > 1e250) {
      // Rescale before the unnormalized recurrence overflows.
      above *= 1e-250;
      current *= 1e-250;
      for (int i = m - 1; i <= start; ++i) j[static_cast<std::size_t>(i)] *= 1e-250;
    }
  }

  double norm = j[0];
  for (int m = 2; m <= start; m += 2) norm += 2.0 * j[static_cast<std::size_t>(m)];
  for (double& v : j) v /= norm;
  j.resize(static_cast<std::size_t>(nmax) + 1);
  return j;
}

// Y_0 and Y_1 from the Bessel-coefficient (Neumann) series
//   Y_0(x) = (2/pi)(ln(x/2) + gamma) J_0(x)
//            + (4/pi) sum_{k>=1} (-1)^{k+1} J_{2k}(x)/k
// and its term-by-term derivative, Y_1 = -Y_0'. Every term is a bounded
// J value, so the evaluation stays stable for large x where the ascending
// power series would cancel catastrophically.
void y0_y1(double x, double* y0, double* y1) {
  const int kmax = static_cast<int>(std::ceil(x / 2.0)) + 26;
  const std::vector<double> j = miller_j(2 * kmax + 1, x);

  double s0 = 0.0;  // sum (-1)^{k+1} J_{2k}/k
  double s1 = 0.0;  // sum (-1)^{k+1} J_{2k}'/k, with J' = (J_{n-1} - J_{n+1})/2
  double sign = 1.0;
  for (int k = 1; k <= kmax; ++k) {
    const std::size_t n = static_cast<std::size_t>(2 * k);
    s0 += sign * j[n] / k;
    s1 += sign * 0.5 * (j[n - 1] - j[n + 1]) / k;
    sign = -sign;
  }

  const double log_term = std::log(0.5 * x) + kEulerGamma;
  const double two_over_pi = 2.0 / M_PI;
  *y0 = two_over_pi * log_term * j[0] + 2.0 * two_over_pi * s0;
  // Y_0' includes the differentiated log factor; J_0' = -J_1.
  const double y0_prime =
      two_over_pi * (j[0] / x - log_term * j[1]) + 2.0 * two_over_pi * s1;
  *y1 = -y0_prime;
}

}  // namespace

double bessel_j(int order, double x) {
  check_order(order, "bessel_j");
  check_arg(x, "bessel_j");
  return miller_j(order, x)[static_cast<std::size_t>(order)];
}

std::vector<double> bessel_j_sequence(int max_order, double x) {
  check_order(max_order, "bessel_j_sequence");
  check_arg(x, "bessel_j_sequence");
  return miller_j(max_order, x);
}

std::vector<double> bessel_y_sequence(int max_order, double x) {
  check_order(max_order, "bessel_y_sequence");
  check_arg(x, "bessel_y_sequence");
  std::vector<double> y(static_cast<std::size_t>(max_order) + 1);
  double y0 = 0.0;
  double y1 = 0.0;
  y0_y1(x, &y0, &y1);
  y[0] = y0;
  if (max_order >= 1) y[1] = y1;
  // Upward recurrence is stable for Y, the dominant solution.
  for (int n = 1; n < max_order; ++n) {
    y[static_cast<std::size_t>(n) + 1] =
        (2.0 * n / x) * y[static_cast<std::size_t>(n)] -
        y[static_cast<std::size_t>(n) - 1];
  }
  return y;
}

double bessel_y(int order, double x) {
  check_order(order, "bessel_y");
  check_arg(x, "bessel_y");
  return bessel_y_sequence(order, x)[static_cast<std::size_t>(order)];
}

Complex hankel1(int order, double x) {
  const int n = std::abs(order);
  check_order(n, "hankel1");
  check_arg(x, "hankel1");
  Complex h(bessel_j(n, x), bessel_y(n, x));
  return (order < 0 && n % 2 != 0) ? -h : h;
}

std::vector<Complex> hankel1_sequence(int max_order, double x) {
  const std::vector<double> j = bessel_j_sequence(max_order, x);
  const std::vector<double> y = bessel_y_sequence(max_order, x);
  std::vector<Complex> h(j.size());
  for (std::size_t n = 0; n < j.size(); ++n) h[n] = Complex(j[n], y[n]);
  return h;
}

Complex fundamental_solution(const Point2& x, const Point2& y, double k) {
  if (!(k > 0.0)) throw std::domain_error("fundamental_solution: k must be positive");
  const double kr = k * (x - y).norm();
  if (kr < kFundamentalSolutionFloor) {
    throw std::domain_error("fundamental_solution: evaluation at the singularity");
  }
  return Complex(0.0, 0.25) * hankel1(0, kr);
}

Complex farfield_gamma(double k) {
  if (!(k > 0.0)) throw std::domain_error("farfield_gamma: k must be positive");
  return std::polar(1.0 / std::sqrt(8.0 * M_PI * k), M_PI / 4.0);
}

}  // namespace rfm2d
