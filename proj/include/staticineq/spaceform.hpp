#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "staticineq/errors.hpp"

namespace staticineq {

enum class ModelKind { Euclidean, Hyperbolic, SphericalHemisphere };

std::string to_string(ModelKind kind);
ModelKind model_kind_from_tag(const std::string& tag);  // "euclidean"|"hyperbolic"|"spherical"

// Points and vectors live in the flat embedding: R^n for the Euclidean model,
// Minkowski R^{n,1} with signature (-,+,...,+) and coords (t, x_1..x_n) for the
// hyperboloid, R^{n+1} with coords (x_0, x_1..x_n) for the hemisphere.
using AmbientPoint = Eigen::VectorXd;
using AmbientVector = Eigen::VectorXd;

// Relative tolerance for membership in the model quadric.
inline constexpr double kModelTol = 1e-12;
// Hemisphere safety margin, in units of 1/sqrt(kappa): generated data must stay
// at geodesic radius <= pi/(2 sqrt(kappa)) - margin so the potential stays positive.
inline constexpr double kHemisphereMargin = 0.05;

struct PotentialEval {
  double value = 0.0;
  AmbientVector gradient;   // tangent to the model at the evaluation point
  Eigen::MatrixXd hessian;  // bilinear form: H(X,Y) = X^T * hessian * Y for tangent X,Y
};

struct StaticResidual {
  double operator_norm = 0.0;  // max_p |-(lap f) g + hess f - f Ric|_op
  double trace = 0.0;          // max_p |lap f + R/(n-1) f|
};

// Analytic geometry of one of the three simply connected space forms, fixed
// curvature magnitude kappa and base point p. All computations stay in the
// flat embedding; there are no intrinsic charts anywhere.
class SpaceForm {
public:
  static SpaceForm euclidean(int n = 3);
  static SpaceForm hyperbolic(double kappa, int n = 3);  // base point = hyperboloid apex
  static SpaceForm spherical(double kappa, int n = 3);   // base point = hemisphere pole
  static SpaceForm with_base(ModelKind kind, double kappa, const AmbientPoint& base, int n = 3);

  ModelKind kind() const { return kind_; }
  int dim() const { return n_; }        // manifold dimension
  int embed_dim() const { return static_cast<int>(base_.size()); }
  double kappa() const { return kappa_; }
  double k() const;                     // signed sectional curvature: 0, -kappa, +kappa
  double scalar_curvature() const { return n_ * (n_ - 1) * k(); }  // R = n(n-1)k
  double ricci_factor() const { return (n_ - 1) * k(); }           // Ric = (n-1)k g
  const AmbientPoint& base_point() const { return base_; }

  // Ambient flat metric (Minkowski for the hyperboloid).
  double bilinear(const AmbientVector& u, const AmbientVector& v) const;
  double constraint_residual(const AmbientPoint& x) const;  // relative
  bool on_model(const AmbientPoint& x, double tol = kModelTol) const;
  void check_point(const AmbientPoint& x) const;            // InvalidPointError
  AmbientPoint project_to_model(const AmbientPoint& x) const;
  AmbientVector tangent_project(const AmbientPoint& x, const AmbientVector& v) const;

  double geodesic_distance(const AmbientPoint& x, const AmbientPoint& y) const;

  // Deterministic orthonormal basis of the tangent space at x (model metric).
  std::vector<AmbientVector> tangent_frame(const AmbientPoint& x) const;

  // exp_p: point at geodesic distance rho from the base point along the unit
  // direction omega, given in coordinates of the base tangent frame.
  AmbientPoint radial_chart(const Eigen::VectorXd& omega, double rho) const;
  // Unit tangent of the radial geodesic at radial_chart(omega, rho).
  AmbientVector radial_tangent(const Eigen::VectorXd& omega, double rho) const;
  // Inverse of the direction part: unit frame coordinates of the geodesic p -> x.
  Eigen::VectorXd direction_from_base(const AmbientPoint& x) const;
  // Largest admissible geodesic radius (hemisphere margin; +inf otherwise).
  double max_radius() const;

  // Static potential basis: n+1 coefficients a_0..a_n. Euclidean combinations
  // are a_0 + sum a_i x_i; curved ones are linear in the embedding coordinates.
  int basis_size() const { return n_ + 1; }
  PotentialEval potential_eval(const Eigen::VectorXd& coeffs, const AmbientPoint& x) const;
  // Coefficients of the distinguished potential V (= 1, cosh sqrt(k)r, cos sqrt(k)r
  // from the given center; defaults to the base point).
  Eigen::VectorXd distinguished_potential_coeffs() const;
  Eigen::VectorXd distinguished_potential_coeffs(const AmbientPoint& center) const;
  // V evaluated through the distance function (the definitional route).
  double potential_from_distance(const AmbientPoint& x) const;
  double potential_from_distance(const AmbientPoint& center, const AmbientPoint& x) const;

  StaticResidual static_residual(const Eigen::VectorXd& coeffs,
                                 const std::vector<AmbientPoint>& samples) const;

  bool operator==(const SpaceForm& other) const;

private:
  SpaceForm(ModelKind kind, double kappa, AmbientPoint base, int n);
  Eigen::MatrixXd metric_matrix() const;  // ambient flat metric as a matrix

  ModelKind kind_;
  int n_;
  double kappa_;
  AmbientPoint base_;
  std::vector<AmbientVector> base_frame_;
};

}  // namespace staticineq
