#pragma once

#include <Eigen/Sparse>
#include <json.hpp>

#include "staticineq/fields.hpp"
#include "staticineq/surface_geometry.hpp"

namespace staticineq {

// P1 tetrahedral system on a Euclidean volume mesh.
struct FemSystem {
  VolumeMesh vol;
  SurfaceGeometry boundary_geom;
  Eigen::SparseMatrix<double> stiffness;  // PSD, row sums zero
  Eigen::VectorXd lumped_mass;            // sums to the mesh volume
  std::vector<char> is_boundary;          // per volume vertex
};

FemSystem assemble_fem(const VolumeMesh& vol);

struct SolveInfo {
  long iterations = 0;
  double residual = 0.0;
};

// Dirichlet extension: discrete solution of  lap u + n k u = 0, u = eta on the
// boundary; the reduced system (L - n k M) is SPD for k <= 0 and solved by
// diagonally preconditioned CG (relative residual 1e-10, cap 20 sqrt(dof)).
// k > 0 is refused: with positive k the operator can hit hemisphere-type
// resonances that this Euclidean-only scope cannot rule out.
Eigen::VectorXd solve_extension(const FemSystem& sys, double k, const ScalarField& eta_boundary,
                                SolveInfo* info = nullptr);

// Volume-weighted recovery of the P1 gradient at vertices (one Vector3d each).
std::vector<Eigen::Vector3d> recover_gradient(const FemSystem& sys, const Eigen::VectorXd& u);

// Term-by-term quadrature of the weighted integral identity
//   int V [ (lap f + K n f)^2 - |hess f + K f g|^2 ]
//     = int [hess V - (lap V) g - 2(n-1) K V g + V Ric](grad f, grad f)
//     + (n-1) K int (lap V + n K V) f^2
//     + int_bdry dV/dnu [ |grad_S f|^2 - (n-1) K f^2 ]
//     + int_bdry V [ 2 f_nu lap_S f + H f_nu^2 + II(grad_S f, grad_S f) + 2(n-1) K f_nu f ].
// Euclidean, so the Ricci term is identically zero (stored as such). The 4-way
// boundary split is bookkeeping; the identity constrains only the sum.
struct ReillyReport {
  double K = 0.0;
  double lhs_vol = 0.0;
  double hess_V_term = 0.0;
  double ricci_term = 0.0;
  double f_sq_term = 0.0;
  double dVdnu_bdry = 0.0;
  double mixed_bdry = 0.0;
  double H_bdry = 0.0;
  double II_bdry = 0.0;
  double residual = 0.0;
  double h = 0.0;
  std::string mesh_id;
  std::string f_name;
  std::string V_name;
  nlohmann::json to_json() const;
};

ReillyReport verify_reilly(const FemSystem& sys, const AnalyticField& f, const AnalyticField& V,
                           double K);

// The three nonnegative quantities discarded in passing from the identity to
// the boundary inequality (Euclidean, k = 0): the weighted Hessian integral,
// the Ricci excess (identically zero here) and the boundary square term. Their
// sum matches the deficit up to discretization (reported as `slack`).
struct ProofDecomposition {
  double hessian_term = 0.0;
  double ricci_excess_term = 0.0;
  double boundary_square_term = 0.0;
  double deficit = 0.0;
  double slack = 0.0;
  double h = 0.0;
  long solver_iterations = 0;
  nlohmann::json to_json() const;
};

ProofDecomposition proof_decomposition(const FemSystem& sys, const SpaceForm& sf, double k,
                                       const ScalarField& eta);

}  // namespace staticineq
