// Copyright (c) 2026 the nhdms authors
// SPDX-License-Identifier: Apache-2.0

#include "nhdms/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <unordered_map>

#include "nhdms/util.hpp"

namespace nhdms {

namespace {

// The 6 Kuhn tets of a voxel, one per axis permutation, as paths
// (0,0,0) -> +e_{p0} -> +e_{p1} -> (1,1,1). Corner bit d is the offset along
// axis d. The permutation order is fixed so tet ids are reproducible.
constexpr std::array<std::array<int, 3>, 6> kAxisPerms = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

std::array<std::array<int, 3>, 4> kuhn_corners(int pattern) {
  const auto& perm = kAxisPerms[pattern];
  std::array<std::array<int, 3>, 4> c{};
  c[0] = {0, 0, 0};
  c[1] = c[0];
  c[1][perm[0]] = 1;
  c[2] = c[1];
  c[2][perm[1]] = 1;
  c[3] = {1, 1, 1};
  return c;
}

// Barycenter of Kuhn tet `pattern` in voxel units (components are quarters,
// exact in binary floating point).
Vec3 kuhn_barycenter(int pattern) {
  const auto c = kuhn_corners(pattern);
  Vec3 b = Vec3::Zero();
  for (const auto& corner : c)
    b += Vec3(double(corner[0]), double(corner[1]), double(corner[2]));
  return 0.25 * b;
}

// Pattern containing a point with voxel-local fractions f: the Kuhn tet for
// permutation p is { f_{p0} >= f_{p1} >= f_{p2} }.
int kuhn_pattern_of(const Vec3& f) {
  std::array<int, 3> order = {0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return f[a] > f[b]; });
  for (int p = 0; p < 6; ++p)
    if (kAxisPerms[p] == order) return p;
  return 0;  // unreachable
}

double signed_volume(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  return (b - a).cross(c - a).dot(d - a) / 6.0;
}

void build_connectivity(TetMesh& m) {
  const int nt = m.n_tets();
  // Unique sorted edges and faces, numbered lexicographically.
  std::vector<std::array<int, 2>> all_edges;
  std::vector<std::array<int, 3>> all_faces;
  all_edges.reserve(std::size_t(nt) * 6);
  all_faces.reserve(std::size_t(nt) * 4);
  constexpr std::array<std::array<int, 2>, 6> le = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  for (const auto& t : m.tets) {
    for (const auto& e : le) {
      int a = t[e[0]], b = t[e[1]];
      if (a > b) std::swap(a, b);
      all_edges.push_back({a, b});
    }
    for (int j = 0; j < 4; ++j) {
      std::array<int, 3> f{};
      int w = 0;
      for (int v = 0; v < 4; ++v)
        if (v != j) f[w++] = t[v];
      std::sort(f.begin(), f.end());
      all_faces.push_back(f);
    }
  }
  std::sort(all_edges.begin(), all_edges.end());
  all_edges.erase(std::unique(all_edges.begin(), all_edges.end()), all_edges.end());
  std::sort(all_faces.begin(), all_faces.end());
  all_faces.erase(std::unique(all_faces.begin(), all_faces.end()), all_faces.end());
  m.edges = std::move(all_edges);
  m.faces = std::move(all_faces);

  std::map<std::array<int, 2>, int> edge_id;
  for (int i = 0; i < m.n_edges(); ++i) edge_id[m.edges[i]] = i;
  std::map<std::array<int, 3>, int> face_id;
  for (int i = 0; i < m.n_faces(); ++i) face_id[m.faces[i]] = i;

  m.tet_edges.resize(nt);
  m.tet_faces.resize(nt);
  m.face_tets.assign(m.n_faces(), {-1, -1});
  for (int t = 0; t < nt; ++t) {
    const auto& v = m.tets[t];
    for (int k = 0; k < 6; ++k) {
      int a = v[le[k][0]], b = v[le[k][1]];
      if (a > b) std::swap(a, b);
      m.tet_edges[t][k] = edge_id.at({a, b});
    }
    for (int j = 0; j < 4; ++j) {
      std::array<int, 3> f{};
      int w = 0;
      for (int u = 0; u < 4; ++u)
        if (u != j) f[w++] = v[u];
      std::sort(f.begin(), f.end());
      const int fid = face_id.at(f);
      m.tet_faces[t][j] = fid;
      auto& adj = m.face_tets[fid];
      if (adj[0] < 0)
        adj[0] = t;
      else if (adj[1] < 0)
        adj[1] = t;
      else
        throw InvalidArgument("TetMesh: face shared by more than two tets");
    }
  }
}

}  // namespace

double TetMesh::tet_volume(int t) const {
  const auto& v = tets[t];
  return signed_volume(vertices[v[0]], vertices[v[1]], vertices[v[2]], vertices[v[3]]);
}

Vec3 TetMesh::tet_barycenter(int t) const {
  const auto& v = tets[t];
  return 0.25 * (vertices[v[0]] + vertices[v[1]] + vertices[v[2]] + vertices[v[3]]);
}

std::vector<int> TetMesh::boundary_faces() const {
  std::vector<int> out;
  for (int f = 0; f < n_faces(); ++f)
    if (is_boundary_face(f)) out.push_back(f);
  return out;
}

std::uint64_t TetMesh::content_hash() const {
  Fnv1a h;
  for (const auto& v : vertices) {
    h.update_pod(v[0]);
    h.update_pod(v[1]);
    h.update_pod(v[2]);
  }
  for (const auto& t : tets)
    for (int v : t) h.update_pod(v);
  for (int tag : tags) h.update_pod(tag);
  return h.digest();
}

TetMesh build_box_mesh(const Box& box, const std::array<int, 3>& res) {
  NHDMS_REQUIRE(res[0] >= 1 && res[1] >= 1 && res[2] >= 1,
                "build_box_mesh: resolution must be >= 1 per axis");
  NHDMS_REQUIRE((box.extent().array() > 0.0).all(),
                "build_box_mesh: box extents must be positive");

  TetMesh m;
  StructuredInfo info;
  info.box = box;
  info.res = res;
  const Vec3 h = info.spacing();

  const int nx = res[0] + 1, ny = res[1] + 1, nz = res[2] + 1;
  m.vertices.reserve(std::size_t(nx) * ny * nz);
  for (int iz = 0; iz < nz; ++iz)
    for (int iy = 0; iy < ny; ++iy)
      for (int ix = 0; ix < nx; ++ix)
        m.vertices.emplace_back(box.lo[0] + ix * h[0], box.lo[1] + iy * h[1],
                                box.lo[2] + iz * h[2]);

  m.tets.reserve(std::size_t(res[0]) * res[1] * res[2] * 6);
  for (int iz = 0; iz < res[2]; ++iz)
    for (int iy = 0; iy < res[1]; ++iy)
      for (int ix = 0; ix < res[0]; ++ix)
        for (int p = 0; p < 6; ++p) {
          const auto corners = kuhn_corners(p);
          std::array<int, 4> t{};
          for (int v = 0; v < 4; ++v)
            t[v] = info.vertex_index({ix + corners[v][0], iy + corners[v][1], iz + corners[v][2]});
          std::array<int, 4> ordered = t;
          if (signed_volume(m.vertices[t[0]], m.vertices[t[1]], m.vertices[t[2]],
                            m.vertices[t[3]]) < 0.0)
            std::swap(ordered[2], ordered[3]);
          m.tets.push_back(ordered);
        }

  build_connectivity(m);
  m.structured = info;
  return m;
}

int locate_tet(const TetMesh& mesh, const Vec3& p) {
  NHDMS_REQUIRE(mesh.structured.has_value(), "locate_tet: mesh is not structured");
  const auto& info = *mesh.structured;
  NHDMS_REQUIRE(info.box.contains(p), "locate_tet: point outside the mesh box");
  const Vec3 h = info.spacing();
  std::array<int, 3> v{};
  Vec3 f;
  for (int d = 0; d < 3; ++d) {
    double s = (p[d] - info.box.lo[d]) / h[d];
    int i = int(std::floor(s));
    i = std::clamp(i, 0, info.res[d] - 1);
    v[d] = i;
    f[d] = s - i;
  }
  return 6 * info.voxel_index(v) + kuhn_pattern_of(f);
}

namespace {

int exact_grid_multiple(double value, double unit, const char* what) {
  const double s = value / unit;
  const double r = std::round(s);
  if (std::abs(s - r) > 1e-9 * std::max(1.0, std::abs(s)))
    throw InvalidArgument(std::string("tag_subdomains: ") + what +
                          " is not aligned with the mesh grid");
  return int(r);
}

}  // namespace

void tag_subdomains(TetMesh& mesh, const ArrayGeometry& geom) {
  geom.validate();
  NHDMS_REQUIRE(mesh.structured.has_value(), "tag_subdomains: mesh is not structured");
  const auto& info = *mesh.structured;
  NHDMS_REQUIRE(info.box.contains(geom.omega_s.lo) && info.box.contains(geom.omega_s.hi),
                "tag_subdomains: mesh does not cover omega_s");
  const Vec3 h = info.spacing();
  const Vec3 pitch = geom.pitch();

  std::array<int, 3> s_lo{}, vox_per_cell{};
  for (int d = 0; d < 3; ++d) {
    s_lo[d] = exact_grid_multiple(geom.omega_s.lo[d] - info.box.lo[d], h[d], "omega_s corner");
    vox_per_cell[d] = exact_grid_multiple(pitch[d], h[d], "lattice pitch");
    NHDMS_REQUIRE(vox_per_cell[d] >= 1, "tag_subdomains: lattice pitch below mesh spacing");
  }

  mesh.tags.assign(mesh.n_tets(), kTagVacuum);
  std::vector<int> particle_elems(geom.num_particles(), 0);

  const Vec3 cell_h(geom.cell.lengths[0] / vox_per_cell[0], geom.cell.lengths[1] / vox_per_cell[1],
                    geom.cell.lengths[2] / vox_per_cell[2]);
  for (int t = 0; t < mesh.n_tets(); ++t) {
    const int voxel = t / 6, pattern = t % 6;
    std::array<int, 3> vi = {voxel % info.res[0], (voxel / info.res[0]) % info.res[1],
                             voxel / (info.res[0] * info.res[1])};
    std::array<int, 3> rel{}, cell_idx{}, rvox{};
    bool inside = true;
    for (int d = 0; d < 3; ++d) {
      rel[d] = vi[d] - s_lo[d];
      if (rel[d] < 0 || rel[d] >= geom.counts[d] * vox_per_cell[d]) {
        inside = false;
        break;
      }
      cell_idx[d] = rel[d] / vox_per_cell[d];
      rvox[d] = rel[d] % vox_per_cell[d];
    }
    if (!inside) continue;
    // Barycenter in cell coordinates, from integers and quarter fractions, so
    // the test result is identical in every cell of the lattice.
    const Vec3 frac = kuhn_barycenter(pattern);
    Vec3 y;
    for (int d = 0; d < 3; ++d) y[d] = (double(rvox[d]) + frac[d]) * cell_h[d];
    if (geom.cell.inside_inclusion(y)) {
      const int k = geom.particle_index(cell_idx);
      mesh.tags[t] = k;
      ++particle_elems[k];
    } else {
      mesh.tags[t] = kTagHost;
    }
  }

  for (int k = 0; k < geom.num_particles(); ++k)
    if (particle_elems[k] == 0)
      throw InvalidArgument("tag_subdomains: particle " + std::to_string(k) +
                            " is not resolved by any element; refine the mesh");
}

PeriodicPairs build_periodic_pairs(const TetMesh& cell_mesh) {
  NHDMS_REQUIRE(cell_mesh.structured.has_value(), "build_periodic_pairs: mesh is not structured");
  const auto& info = *cell_mesh.structured;
  const auto& res = info.res;

  auto wrap_vertex = [&](int vid) {
    auto c = info.vertex_coords(vid);
    for (int d = 0; d < 3; ++d)
      if (c[d] == res[d]) c[d] = 0;
    return info.vertex_index(c);
  };
  auto on_max_face = [&](int vid, int d) { return info.vertex_coords(vid)[d] == res[d]; };

  PeriodicPairs pairs;
  for (int v = 0; v < cell_mesh.n_vertices(); ++v) {
    const int w = wrap_vertex(v);
    if (w != v) pairs.nodes.push_back({v, w});
  }

  std::map<std::array<int, 2>, int> edge_id;
  for (int i = 0; i < cell_mesh.n_edges(); ++i) edge_id[cell_mesh.edges[i]] = i;
  for (int e = 0; e < cell_mesh.n_edges(); ++e) {
    const auto& ev = cell_mesh.edges[e];
    auto a = info.vertex_coords(ev[0]);
    auto b = info.vertex_coords(ev[1]);
    bool slave = false;
    for (int d = 0; d < 3; ++d)
      if (a[d] == res[d] && b[d] == res[d]) {
        a[d] = 0;
        b[d] = 0;
        slave = true;
      }
    if (!slave) continue;
    std::array<int, 2> master = {info.vertex_index(a), info.vertex_index(b)};
    if (master[0] > master[1]) std::swap(master[0], master[1]);
    auto it = edge_id.find(master);
    if (it == edge_id.end())
      throw InvalidArgument("build_periodic_pairs: opposite boundary discretizations do not match");
    pairs.edges.push_back({e, it->second});
  }

  std::map<std::array<int, 3>, int> face_id;
  for (int i = 0; i < cell_mesh.n_faces(); ++i) face_id[cell_mesh.faces[i]] = i;
  for (int f = 0; f < cell_mesh.n_faces(); ++f) {
    const auto& fv = cell_mesh.faces[f];
    std::array<std::array<int, 3>, 3> c = {info.vertex_coords(fv[0]), info.vertex_coords(fv[1]),
                                           info.vertex_coords(fv[2])};
    bool slave = false;
    for (int d = 0; d < 3; ++d)
      if (c[0][d] == res[d] && c[1][d] == res[d] && c[2][d] == res[d]) {
        c[0][d] = c[1][d] = c[2][d] = 0;
        slave = true;
      }
    if (!slave) continue;
    std::array<int, 3> master = {info.vertex_index(c[0]), info.vertex_index(c[1]),
                                 info.vertex_index(c[2])};
    std::sort(master.begin(), master.end());
    auto it = face_id.find(master);
    if (it == face_id.end())
      throw InvalidArgument("build_periodic_pairs: opposite boundary discretizations do not match");
    pairs.faces.push_back({f, it->second});
  }

  // Vertex ids are linear in grid coordinates, so a uniform translation keeps
  // the sorted order of entity tuples; DOF identification needs no sign flips.
  (void)on_max_face;
  return pairs;
}

ParticleSubmesh extract_particle_submesh(const TetMesh& mesh, const ArrayGeometry& geom, int k) {
  NHDMS_REQUIRE(!mesh.tags.empty(), "extract_particle_submesh: mesh has no subdomain tags");
  NHDMS_REQUIRE(mesh.structured.has_value(), "extract_particle_submesh: mesh is not structured");
  NHDMS_REQUIRE(k >= 0 && k < geom.num_particles(), "extract_particle_submesh: bad particle index");
  const auto& info = *mesh.structured;
  const Vec3 h = info.spacing();

  ParticleSubmesh sub;
  sub.particle = k;
  for (int t = 0; t < mesh.n_tets(); ++t)
    if (mesh.tags[t] == k) sub.parent_tet.push_back(t);
  if (sub.parent_tet.empty())
    throw InvalidArgument("extract_particle_submesh: particle " + std::to_string(k) + " is empty");

  // Anchor: lower corner of the particle's lattice cell, in integer grid units.
  const std::array<int, 3> cell_idx = {k % geom.counts[0], (k / geom.counts[0]) % geom.counts[1],
                                       k / (geom.counts[0] * geom.counts[1])};
  const Vec3 pitch = geom.pitch();
  std::array<int, 3> anchor{};
  for (int d = 0; d < 3; ++d) {
    const int s_lo = exact_grid_multiple(geom.omega_s.lo[d] - info.box.lo[d], h[d], "omega_s corner");
    const int per_cell = exact_grid_multiple(pitch[d], h[d], "lattice pitch");
    anchor[d] = s_lo + cell_idx[d] * per_cell;
  }
  sub.origin = Vec3(info.box.lo[0] + anchor[0] * h[0], info.box.lo[1] + anchor[1] * h[1],
                    info.box.lo[2] + anchor[2] * h[2]);

  // Parent entities in ascending id order; ids are lexicographic in vertex
  // tuples, so this ordering is the same relative order for every particle.
  std::vector<int> vmap(mesh.n_vertices(), -1);
  for (int t : sub.parent_tet)
    for (int v : mesh.tets[t]) vmap[v] = 0;
  for (int v = 0; v < mesh.n_vertices(); ++v)
    if (vmap[v] == 0) {
      vmap[v] = int(sub.parent_vertex.size());
      sub.parent_vertex.push_back(v);
    }

  sub.mesh.vertices.reserve(sub.parent_vertex.size());
  for (int v : sub.parent_vertex) {
    // Local coordinates from integer offsets: bitwise identical across particles.
    const auto c = info.vertex_coords(v);
    sub.mesh.vertices.emplace_back((c[0] - anchor[0]) * h[0], (c[1] - anchor[1]) * h[1],
                                   (c[2] - anchor[2]) * h[2]);
  }
  sub.mesh.tets.reserve(sub.parent_tet.size());
  for (int t : sub.parent_tet) {
    std::array<int, 4> tv{};
    for (int v = 0; v < 4; ++v) tv[v] = vmap[mesh.tets[t][v]];
    sub.mesh.tets.push_back(tv);
  }
  build_connectivity(sub.mesh);
  sub.mesh.tags.assign(sub.mesh.n_tets(), k);

  // Map local edges/faces back to parent ids via vertex tuples.
  std::map<std::array<int, 2>, int> parent_edge_id;
  for (int i = 0; i < mesh.n_edges(); ++i) parent_edge_id[mesh.edges[i]] = i;
  sub.parent_edge.reserve(sub.mesh.n_edges());
  for (const auto& e : sub.mesh.edges) {
    std::array<int, 2> g = {sub.parent_vertex[e[0]], sub.parent_vertex[e[1]]};
    if (g[0] > g[1]) std::swap(g[0], g[1]);
    sub.parent_edge.push_back(parent_edge_id.at(g));
  }
  std::map<std::array<int, 3>, int> parent_face_id;
  for (int i = 0; i < mesh.n_faces(); ++i) parent_face_id[mesh.faces[i]] = i;
  sub.parent_face.reserve(sub.mesh.n_faces());
  for (const auto& f : sub.mesh.faces) {
    std::array<int, 3> g = {sub.parent_vertex[f[0]], sub.parent_vertex[f[1]],
                            sub.parent_vertex[f[2]]};
    std::sort(g.begin(), g.end());
    sub.parent_face.push_back(parent_face_id.at(g));
  }
  return sub;
}

}  // namespace nhdms
