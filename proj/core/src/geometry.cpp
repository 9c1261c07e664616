// Copyright (c) 2026 the nhdms authors
// SPDX-License-Identifier: Apache-2.0

#include "nhdms/geometry.hpp"

#include <numbers>

namespace nhdms {

void CellGeometry::validate() const {
  NHDMS_REQUIRE((lengths.array() > 0.0).all(), "CellGeometry: cell lengths must be > 0");
  if (kind == Inclusion::Sphere) {
    NHDMS_REQUIRE(radius > 0.0, "CellGeometry: inclusion radius must be > 0");
    for (int d = 0; d < 3; ++d) {
      const double gap = std::min(center[d], lengths[d] - center[d]) - radius;
      NHDMS_REQUIRE(gap > 0.0, "CellGeometry: inclusion must be strictly interior to Y");
    }
  } else {
    NHDMS_REQUIRE((half_widths.array() > 0.0).all(), "CellGeometry: box half-widths must be > 0");
    for (int d = 0; d < 3; ++d) {
      const double gap = std::min(center[d], lengths[d] - center[d]) - half_widths[d];
      NHDMS_REQUIRE(gap > 0.0, "CellGeometry: inclusion must be strictly interior to Y");
    }
  }
}

bool CellGeometry::inside_inclusion(const Vec3& y) const {
  if (kind == Inclusion::Sphere) {
    return (y - center).squaredNorm() <= radius * radius;
  }
  return ((y - center).cwiseAbs().array() <= half_widths.array()).all();
}

double CellGeometry::inclusion_volume() const {
  if (kind == Inclusion::Sphere) {
    return 4.0 / 3.0 * std::numbers::pi * radius * radius * radius;
  }
  return 8.0 * half_widths.prod();
}

void ArrayGeometry::validate() const {
  cell.validate();
  NHDMS_REQUIRE(counts[0] >= 1 && counts[1] >= 1 && counts[2] >= 1,
                "ArrayGeometry: array counts must be >= 1");
  NHDMS_REQUIRE(eta > 0.0, "ArrayGeometry: eta must be > 0");
  const Vec3 span = pitch().cwiseProduct(
      Vec3(double(counts[0]), double(counts[1]), double(counts[2])));
  for (int d = 0; d < 3; ++d) {
    NHDMS_REQUIRE(std::abs(omega_s.extent()[d] - span[d]) <= 1e-12 * span[d],
                  "ArrayGeometry: omega_s must span the particle lattice exactly");
    NHDMS_REQUIRE(omega.lo[d] < omega_s.lo[d] && omega.hi[d] > omega_s.hi[d],
                  "ArrayGeometry: closure of omega_s must be inside omega");
  }
}

ArrayGeometry ArrayGeometry::regular(const CellGeometry& cell, std::array<int, 3> counts,
                                     double eta, double pad) {
  NHDMS_REQUIRE(pad > 0.0, "ArrayGeometry: padding must be > 0");
  ArrayGeometry g;
  g.cell = cell;
  g.counts = counts;
  g.eta = eta;
  const Vec3 span = eta * cell.lengths.cwiseProduct(
      Vec3(double(counts[0]), double(counts[1]), double(counts[2])));
  g.omega_s.lo = Vec3::Zero();
  g.omega_s.hi = span;
  g.omega.lo = Vec3::Constant(-pad);
  g.omega.hi = span + Vec3::Constant(pad);
  g.validate();
  return g;
}

}  // namespace nhdms
