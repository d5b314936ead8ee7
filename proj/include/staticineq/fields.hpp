#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "staticineq/mesh.hpp"

namespace staticineq {

// Per-vertex scalar data on a surface mesh.
struct ScalarField {
  Eigen::VectorXd values;
  std::string id;
};

// Closed-form field on the Euclidean ambient space with exact derivatives.
struct AnalyticField {
  std::string name;
  std::function<double(const Eigen::Vector3d&)> value;
  std::function<Eigen::Vector3d(const Eigen::Vector3d&)> gradient;
  std::function<Eigen::Matrix3d(const Eigen::Vector3d&)> hessian;
};

// Named closed forms: one, x1, x2, x3, r2 (=|x|^2), x1sq (=x1^2),
// linx2 (=x2+2), harmx1sq (= x1^2 - (|x|^2 - 1)/3, the harmonic extension of
// the x1^2 boundary data on the unit sphere).
AnalyticField analytic_catalog(const std::string& name);
std::vector<std::string> analytic_catalog_names();

// 4th-order finite-difference consistency of gradient (and hessian if present)
// against value at seeded random points; returns the max abs mismatch.
double analytic_consistency(const AnalyticField& f, std::uint64_t seed, int n_points = 32);

// Polynomial in the embedding coordinates, as a fixed list of monomials.
struct PolynomialField {
  int dim = 3;  // number of ambient coordinates
  std::vector<std::vector<int>> exponents;
  Eigen::VectorXd coefficients;
  double eval(const AmbientPoint& x) const;
  std::string describe() const;
};

// Graded-lex monomial basis of total degree <= max_degree in `dim` variables.
std::vector<std::vector<int>> monomial_basis(int dim, int max_degree);

// Platform-stable uniform double in [-1, 1) from a 64-bit generator.
double uniform_pm1(std::mt19937_64& rng);

PolynomialField random_polynomial(int dim, int max_degree, std::mt19937_64& rng);

// eta = restriction to the mesh vertices.
ScalarField restrict_potential(const SpaceForm& sf, const Eigen::VectorXd& coeffs,
                               const SurfaceMesh& mesh);
ScalarField restrict_polynomial(const PolynomialField& poly, const SurfaceMesh& mesh);
ScalarField restrict_analytic(const AnalyticField& f, const SurfaceMesh& mesh);
ScalarField constant_field(const SurfaceMesh& mesh, double c);

// Plain text field file: "FIELD <count>" then one value per line.
void save_field(const std::string& path, const ScalarField& field);
ScalarField load_field(const std::string& path);

}  // namespace staticineq
