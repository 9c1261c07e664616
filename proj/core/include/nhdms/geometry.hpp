// Copyright (c) 2026 the nhdms authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>

#include "nhdms/types.hpp"

namespace nhdms {

/// Reference cell Y = (0,l1)x(0,l2)x(0,l3) with a single metallic inclusion.
/// Coordinates of the inclusion are in cell units.
struct CellGeometry {
  enum class Inclusion { Sphere, Box };

  Vec3 lengths = Vec3::Ones();
  Inclusion kind = Inclusion::Sphere;
  Vec3 center = Vec3::Constant(0.5);
  double radius = 0.25;              ///< sphere radius
  Vec3 half_widths = Vec3::Zero();   ///< box inclusion half-widths

  void validate() const;

  /// Closed-set membership test (points on the inclusion surface count as metal).
  bool inside_inclusion(const Vec3& y) const;

  double inclusion_volume() const;
  double cell_volume() const { return lengths.prod(); }
  double metal_volume_fraction() const { return inclusion_volume() / cell_volume(); }
};

/// The macroscopic array: counts x counts x counts translated copies of the
/// scaled cell eta*Y tile the scatterer box omega_s, which sits inside the
/// truncated computational domain omega. The lattice is anchored at omega_s.lo,
/// i.e. the periodic map is y = ((x - omega_s.lo)/eta) mod lengths.
struct ArrayGeometry {
  CellGeometry cell;
  std::array<int, 3> counts = {1, 1, 1};
  double eta = 1.0;
  Box omega_s;
  Box omega;

  void validate() const;

  int num_particles() const { return counts[0] * counts[1] * counts[2]; }
  Vec3 pitch() const { return eta * cell.lengths; }
  int particle_index(const std::array<int, 3>& c) const {
    return c[0] + counts[0] * (c[1] + counts[1] * c[2]);
  }

  /// Convenience builder: omega_s spans the array exactly; omega pads it by
  /// `pad` scaled length units on every side.
  static ArrayGeometry regular(const CellGeometry& cell, std::array<int, 3> counts,
                               double eta, double pad);
};

}  // namespace nhdms
