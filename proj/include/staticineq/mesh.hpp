#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "staticineq/spaceform.hpp"

namespace staticineq {

struct MeshScale {
  double h = 0.0;  // max (geodesic) edge length
  int n_vertices = 0;
  int n_cells = 0;  // triangles or tets
};

// Star-shaped radial graph rho(omega) over the unit direction sphere.
struct RadialProfile {
  std::string spec;  // textual form, e.g. "sphere:1.0"; kept for provenance
  std::function<double(const Eigen::Vector3d&)> rho;

  static RadialProfile sphere(double r);
  static RadialProfile ellipsoid(double a, double b, double c);
  // rho = r0 (1 + amplitude * omega[axis])
  static RadialProfile perturbed_sphere(double r0, double amplitude, int axis);
  // rho = r0 (1 + amplitude * cos(freq * acos(omega_3))); nonconvex for larger amplitudes
  static RadialProfile bumpy_sphere(double r0, double amplitude, int freq);
  // Parse "sphere:R", "ellipsoid:a,b,c", "perturbed:r,amp,axis", "bumpy:r,amp,freq".
  static RadialProfile parse(const std::string& spec);
};

// Closed oriented triangle mesh of a surface embedded in a space form.
// Generated meshes remember the direction sphere and radial profile; imported
// ones do not (which restricts curvature estimation, see surface geometry).
struct SurfaceMesh {
  SpaceForm space_form = SpaceForm::euclidean();
  std::vector<AmbientPoint> vertices;
  std::vector<std::array<int, 3>> triangles;  // outward via right-hand rule
  std::optional<RadialProfile> radial_profile;
  std::vector<Eigen::Vector3d> directions;  // unit direction per vertex; empty if imported
  int level = -1;                           // subdivision depth; -1 if imported

  int n_vertices() const { return static_cast<int>(vertices.size()); }
  int n_triangles() const { return static_cast<int>(triangles.size()); }
  double max_edge_length() const;  // geodesic
  MeshScale scale() const;
  double total_chordal_area() const;  // flat-embedding triangle area sum
  // Closed + edge-manifold + consistently outward + vertices on model + sphere topology.
  void validate() const;
};

// Tetrahedral mesh of a Euclidean ball with its boundary surface attached.
struct VolumeMesh {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<std::array<int, 4>> tets;  // positively oriented
  SurfaceMesh boundary;                  // icosphere at the same level
  std::vector<int> boundary_to_volume;   // boundary vertex i -> volume vertex id
  int level = 0;
  double radius = 1.0;

  int n_vertices() const { return static_cast<int>(vertices.size()); }
  int n_tets() const { return static_cast<int>(tets.size()); }
  double total_volume() const;
  double max_edge_length() const;
  MeshScale scale() const;
  void validate() const;
};

SurfaceMesh gen_radial_surface(const SpaceForm& sf, const RadialProfile& profile, int level);
SurfaceMesh refine(const SurfaceMesh& mesh);

VolumeMesh gen_ball_volume(double radius, int level);
VolumeMesh refine(const VolumeMesh& mesh);

// Text mesh format (see README): SPACEFORM/BASE header, V/T or V/TET blocks,
// 17 significant digits, 0-based indices.
void save_mesh(const std::string& path, const SurfaceMesh& mesh);
void save_mesh(const std::string& path, const VolumeMesh& mesh);
SurfaceMesh load_surface_mesh(const std::string& path);
VolumeMesh load_volume_mesh(const std::string& path);
bool mesh_file_is_volume(const std::string& path);

}  // namespace staticineq
