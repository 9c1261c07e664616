// Copyright (c) 2026 the nhdms authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "nhdms/geometry.hpp"
#include "nhdms/types.hpp"

namespace nhdms {

/// Element subdomain tags. Metal elements carry the particle index k >= 0.
inline constexpr int kTagVacuum = -2;
inline constexpr int kTagHost = -1;
inline bool is_metal(int tag) { return tag >= 0; }

/// Present when the mesh came from build_box_mesh: a uniform voxel grid, each
/// voxel split into the same 6 Kuhn tetrahedra (tet id = 6*voxel + pattern).
struct StructuredInfo {
  Box box;
  std::array<int, 3> res = {0, 0, 0};

  Vec3 spacing() const {
    return Vec3(box.extent()[0] / res[0], box.extent()[1] / res[1], box.extent()[2] / res[2]);
  }
  int voxel_index(const std::array<int, 3>& v) const {
    return v[0] + res[0] * (v[1] + res[1] * v[2]);
  }
  int vertex_index(const std::array<int, 3>& v) const {
    return v[0] + (res[0] + 1) * (v[1] + (res[1] + 1) * v[2]);
  }
  std::array<int, 3> vertex_coords(int vid) const {
    const int nx = res[0] + 1, ny = res[1] + 1;
    return {vid % nx, (vid / nx) % ny, vid / (nx * ny)};
  }
};

/// Conforming tetrahedral mesh with globally numbered edges and faces.
/// Orientation conventions: an edge is the sorted vertex pair (tangent from
/// lower to higher id); a face is the sorted vertex triple (normal by the
/// right-hand rule on ascending ids). Entity ids are lexicographic in the
/// sorted vertex tuples, which makes local numbering translation-congruent.
struct TetMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 4>> tets;  // positive-volume vertex order
  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 3>> faces;
  std::vector<std::array<int, 6>> tet_edges;
  std::vector<std::array<int, 4>> tet_faces;
  std::vector<std::array<int, 2>> face_tets;  // adjacent tets, -1 if none
  std::vector<int> tags;                      // per element; empty before tagging
  std::optional<StructuredInfo> structured;

  int n_vertices() const { return int(vertices.size()); }
  int n_tets() const { return int(tets.size()); }
  int n_edges() const { return int(edges.size()); }
  int n_faces() const { return int(faces.size()); }

  double tet_volume(int t) const;
  Vec3 tet_barycenter(int t) const;
  bool is_boundary_face(int f) const { return face_tets[f][1] < 0; }

  std::vector<int> boundary_faces() const;

  /// 64-bit content hash of coordinates and connectivity (for manifests).
  std::uint64_t content_hash() const;
};

/// Kuhn subdivision of a uniform voxel grid into 6 tets per voxel with a
/// globally consistent diagonal. Throws on empty boxes or resolution < 1.
TetMesh build_box_mesh(const Box& box, const std::array<int, 3>& res);

/// Locate the tet containing a point of a structured mesh (closed lower
/// boundary). Throws if the mesh is unstructured or the point is outside.
int locate_tet(const TetMesh& mesh, const Vec3& p);

/// Tags every element vacuum / host / (metal,k) by an integer-exact barycenter
/// test, so per-particle voxel patterns are congruent across the lattice.
/// Requires a structured mesh whose grid is aligned with omega_s and with the
/// eta-lattice. Throws if a particle is not resolved by at least one element.
void tag_subdomains(TetMesh& mesh, const ArrayGeometry& geom);

/// Slave -> master identification of boundary entities of the periodic cell.
struct PeriodicPairs {
  std::vector<std::array<int, 2>> nodes;  // {slave, master}
  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 2>> faces;
};

/// Matches every entity on a max-coordinate face of a structured cell mesh to
/// its translate on the min-coordinate face.
PeriodicPairs build_periodic_pairs(const TetMesh& cell_mesh);

/// Particle submesh in local coordinates (anchored at the particle's cell
/// corner), with maps back to parent entities. Local coordinate arrays are
/// bitwise identical across particles, which is what makes the per-particle
/// system matrices identical.
struct ParticleSubmesh {
  TetMesh mesh;
  Vec3 origin;  // parent-space position of the local origin
  int particle = -1;
  std::vector<int> parent_vertex;
  std::vector<int> parent_edge;
  std::vector<int> parent_face;
  std::vector<int> parent_tet;
};

ParticleSubmesh extract_particle_submesh(const TetMesh& mesh, const ArrayGeometry& geom, int k);

}  // namespace nhdms
