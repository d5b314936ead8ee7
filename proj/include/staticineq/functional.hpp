#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "staticineq/fields.hpp"
#include "staticineq/surface_geometry.hpp"

namespace staticineq {

// Default first-order discretization allowance for nonnegativity sweeps:
// a deficit is flagged only below -tol_factor * h * (lhs magnitude integral).
inline constexpr double kSweepTolFactor = 0.5;

enum class InequalityVariant {
  SpaceFormStatic,      // V = distinguished static potential, k = model curvature
  SectionalComparison,  // V = cosh(sqrt(kappa) r) to an interior point, kappa > 0
};

std::string to_string(InequalityVariant v);

struct InequalityForm {
  InequalityVariant variant = InequalityVariant::SpaceFormStatic;
  double kappa = 0.0;                      // SectionalComparison only
  std::optional<AmbientPoint> base_point;  // override for V's center

  static InequalityForm space_form_static();
  static InequalityForm sectional(double kappa);
};

// Both sides of the boundary inequality.
//   lhs = int V [ (lap eta + (n-1) k eta)^2 / H - II(grad eta, grad eta) ]
//   rhs = int dV/dnu [ |grad eta|^2 - (n-1) k eta^2 ]
// (SectionalComparison uses lap - (n-1) kappa eta and + (n-1) kappa eta^2.)
// Stored so that lhs = lap_term - ii_term and rhs = grad_term - eta_sq_term.
struct DeficitReport {
  std::string variant;
  double k = 0.0;
  double kappa = 0.0;
  double h = 0.0;
  int n_vertices = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double deficit = 0.0;
  double lap_term = 0.0;
  double ii_term = 0.0;
  double grad_term = 0.0;
  double eta_sq_term = 0.0;
  double scale = 0.0;          // sum of the four absolute-integrand integrals
  double lhs_magnitude = 0.0;  // lhs part of `scale`; tolerance bands use this
  double min_H = 0.0;
  bool admissible = true;
  std::string field_id;
  std::string v_normalization;
  std::optional<std::uint64_t> seed;

  double relative_deficit() const { return scale > 0.0 ? std::abs(deficit) / scale : 0.0; }
  nlohmann::json to_json() const;
};

DeficitReport evaluate_deficit(const SurfaceGeometry& geom, const SpaceForm& sf,
                               const InequalityForm& form, const ScalarField& eta);

// Deficits of restrictions of static-basis combinations (equality cases).
std::vector<DeficitReport> equality_case_suite(const SurfaceGeometry& geom, const SpaceForm& sf,
                                               const std::vector<Eigen::VectorXd>& coeff_sets);

struct SweepSummary {
  int count = 0;
  std::uint64_t seed = 0;
  int max_degree = 3;
  double tol_factor = kSweepTolFactor;
  double min_deficit = 0.0;
  double median_deficit = 0.0;
  double max_deficit = 0.0;
  int n_strictly_positive = 0;
  std::vector<int> flagged;  // fields with deficit < -tol_factor * h * lhs_magnitude
  std::vector<DeficitReport> reports;
  nlohmann::json to_json(bool include_reports = false) const;
};

// Random bandlimited probes of the inequality: seeded polynomial restrictions
// of degree <= max_degree, reports assembled in generation order.
SweepSummary ensemble_sweep(const SurfaceGeometry& geom, const SpaceForm& sf,
                            const InequalityForm& form, int max_degree, int count,
                            std::uint64_t seed, double tol_factor = kSweepTolFactor);

// On the hyperbolic model the SectionalComparison form with kappa equal to the
// model curvature coincides with the static form; evaluates both code paths on
// a fixed test battery and returns the max relative (lhs, rhs) discrepancy.
double thm4_cross_check(const SurfaceGeometry& geom, const SpaceForm& sf);

}  // namespace staticineq
