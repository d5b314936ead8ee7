#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <array>
#include <vector>

#include "staticineq/mesh.hpp"

namespace staticineq {

// Intrinsic angles below this are treated as degenerate (cotangent blow-up guard).
inline constexpr double kDegenerateAngle = 1e-6;

// P1 shape-function gradients of a triangle unfolded to the plane from its
// (geodesic) side lengths la = |bc|, lb = |ca|, lc = |ab|. Column i is the
// 2D gradient of the hat function of corner i.
Eigen::Matrix<double, 2, 3> p1_gradients_2d(double la, double lb, double lc);

// Discrete operators and pointwise geometric data of a closed surface.
//
// Conventions: the stiffness matrix is the positive semidefinite cotangent
// matrix assembled from intrinsic (geodesic) edge lengths, so the discrete
// Laplace-Beltrami operator is -M^{-1} L (geometer's sign). The second
// fundamental form is taken with respect to the outward normal with the sign
// that makes the unit sphere positive: II(X,Y) = <D_X nu, Y>, H = trace(II).
struct SurfaceGeometry {
  SurfaceMesh mesh;
  Eigen::VectorXd vertex_areas;  // lumped barycentric duals (houses dsigma)
  Eigen::SparseMatrix<double> stiffness;
  std::vector<AmbientVector> normals;                 // outward, tangent to the model
  std::vector<std::array<AmbientVector, 2>> frames;   // orthonormal vertex tangent frames
  Eigen::VectorXd mean_curvature;                     // H = trace(II)
  std::vector<Eigen::Matrix2d> second_fundamental;    // in the vertex frame
  std::vector<double> triangle_areas;                 // intrinsic
  std::vector<Eigen::Matrix<double, 2, 3>> triangle_grads;  // unfolded shape gradients
  double total_area = 0.0;
  double h = 0.0;

  int n_vertices() const { return mesh.n_vertices(); }
  const Eigen::VectorXd& lumped_mass() const { return vertex_areas; }
};

SurfaceGeometry build_geometry(const SurfaceMesh& mesh);

// Delta_Sigma field = -M^{-1} L field.
Eigen::VectorXd laplace_beltrami(const SurfaceGeometry& geom, const Eigen::VectorXd& field);

// Per-vertex |grad_Sigma field|^2, area-averaged from the unfolded triangles
// (the exact per-triangle quantity whose assembly equals field^T L field).
Eigen::VectorXd tangential_gradient_sq(const SurfaceGeometry& geom, const Eigen::VectorXd& field);

// Per-vertex tangential gradient in vertex frame coordinates (chordal P1
// gradients area-averaged, then projected to the vertex tangent plane).
std::vector<Eigen::Vector2d> tangential_gradient_frame(const SurfaceGeometry& geom,
                                                       const Eigen::VectorXd& field);

// Per-vertex II(grad_Sigma field, grad_Sigma field).
Eigen::VectorXd ii_quadratic_form(const SurfaceGeometry& geom, const Eigen::VectorXd& field);

// Per-vertex dV/dnu for the model's distinguished static potential.
Eigen::VectorXd normal_derivative_V(const SurfaceGeometry& geom, const SpaceForm& sf);

}  // namespace staticineq
