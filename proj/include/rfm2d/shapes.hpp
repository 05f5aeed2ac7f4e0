// Copyright (c) 2026 the rfm2d developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef RFM2D_SHAPES_HPP
#define RFM2D_SHAPES_HPP

#include <string>
#include <string_view>

#include "rfm2d/types.hpp"

namespace rfm2d {

enum class ShapeKind { RoundedSquare, Star, Acorn, Peanut, Disk };

// Star-shaped boundary r(theta)(cos theta, sin theta) with one of four
// fixed radial laws, plus the disk used as an analytic reference.
class RadialShape {
 public:
  static RadialShape rounded_square() { return RadialShape(ShapeKind::RoundedSquare); }
  static RadialShape star() { return RadialShape(ShapeKind::Star); }
  static RadialShape acorn() { return RadialShape(ShapeKind::Acorn); }
  static RadialShape peanut() { return RadialShape(ShapeKind::Peanut); }
  static RadialShape disk(double radius);

  // Parses "rounded-square", "star", "acorn", "peanut" or "disk".
  static RadialShape from_name(std::string_view name, double disk_radius = 0.5);

  ShapeKind kind() const { return kind_; }
  double disk_radius() const { return disk_radius_; }
  std::string name() const;

  double radius(double theta) const;
  Point2 boundary_point(double theta) const;
  bool contains(const Point2& z) const;

 private:
  explicit RadialShape(ShapeKind kind, double disk_radius = 0.5)
      : kind_(kind), disk_radius_(disk_radius) {}

  ShapeKind kind_;
  double disk_radius_;
};

}  // namespace rfm2d

#endif  // RFM2D_SHAPES_HPP
