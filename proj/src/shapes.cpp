// Copyright (c) 2026 the rfm2d developers.
// SPDX-License-Identifier: Apache-2.0

#include "rfm2d/shapes.hpp"

#include <cmath>
#include <stdexcept>

namespace rfm2d {

RadialShape RadialShape::disk(double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("RadialShape::disk: radius must be positive");
  return RadialShape(ShapeKind::Disk, radius);
}

RadialShape RadialShape::from_name(std::string_view name, double disk_radius) {
  if (name == "rounded-square" || name == "rounded_square") return rounded_square();
  if (name == "star") return star();
  if (name == "acorn") return acorn();
  if (name == "peanut") return peanut();
  if (name == "disk") return disk(disk_radius);
  throw std::invalid_argument("unknown shape name: " + std::string(name));
}

std::string RadialShape::name() const {
  switch (kind_) {
    case ShapeKind::RoundedSquare: return "rounded-square";
    case ShapeKind::Star: return "star";
    case ShapeKind::Acorn: return "acorn";
    case ShapeKind::Peanut: return "peanut";
    case ShapeKind::Disk: return "disk";
  }
  return "unknown";
}

double RadialShape::radius(double theta) const {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  switch (kind_) {
    case ShapeKind::RoundedSquare:
      return 0.5 * std::pow(std::pow(std::abs(s), 10.0) + 0.1 * std::pow(std::abs(c), 10.0), -0.1);
    case ShapeKind::Star:
      return 0.5 * (1.0 - 0.25 * std::sin(4.0 * theta));
    case ShapeKind::Acorn:
      return 0.25 * (2.0 + 0.5 * std::cos(3.0 * theta));
    case ShapeKind::Peanut:
      return 0.75 * std::sqrt(0.75 * c * c + 0.07 * s * s);
    case ShapeKind::Disk:
      return disk_radius_;
  }
  return 0.0;
}

Point2 RadialShape::boundary_point(double theta) const {
  const double r = radius(theta);
  return Point2(r * std::cos(theta), r * std::sin(theta));
}

bool RadialShape::contains(const Point2& z) const {
  const double r = z.norm();
  if (r == 0.0) return true;
  return r < radius(std::atan2(z.y(), z.x()));
}

}  // namespace rfm2d
