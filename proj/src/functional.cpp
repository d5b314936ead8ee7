#include "staticineq/functional.hpp"

#include <algorithm>
#include <cmath>

namespace staticineq {

std::string to_string(InequalityVariant v) {
  switch (v) {
    case InequalityVariant::SpaceFormStatic: return "static";
    case InequalityVariant::SectionalComparison: return "thm4";
  }
  return "unknown";
}

InequalityForm InequalityForm::space_form_static() { return {}; }

InequalityForm InequalityForm::sectional(double kappa) {
  InequalityForm f;
  f.variant = InequalityVariant::SectionalComparison;
  f.kappa = kappa;
  return f;
}

nlohmann::json DeficitReport::to_json() const {
  nlohmann::json j{
      {"variant", variant},
      {"k", k},
      {"kappa", kappa},
      {"h", h},
      {"n_vertices", n_vertices},
      {"lhs", lhs},
      {"rhs", rhs},
      {"deficit", deficit},
      {"terms",
       {{"lap_term", lap_term},
        {"ii_term", ii_term},
        {"grad_term", grad_term},
        {"eta_sq_term", eta_sq_term}}},
      {"scale", scale},
      {"lhs_magnitude", lhs_magnitude},
      {"min_H", min_H},
      {"admissible", admissible},
      {"field_id", field_id},
      {"v_normalization", v_normalization},
  };
  if (seed) j["seed"] = *seed;
  return j;
}

namespace {

void check_hypotheses(const SurfaceGeometry& geom, const ScalarField& eta) {
  if (eta.values.size() != geom.vertex_areas.size())
    throw UsageError("field '" + eta.id + "' does not match the mesh vertex count");
  int argmin = 0;
  const double min_h = geom.mean_curvature.minCoeff(&argmin);
  if (!(min_h > 0.0))
    throw HypothesisViolationError("mean curvature hypothesis H > 0 fails at vertex " +
                                       std::to_string(argmin) + " (H = " +
                                       std::to_string(min_h) + ")",
                                   argmin);
}

// V and dV/dnu for the Theorem 4 comparison potential cosh(sqrt(kappa) r):
// computed through the distance function and the radial direction, not through
// the static basis, so the hyperbolic coincidence check compares two routes.
void sectional_potential(const SurfaceGeometry& geom, const SpaceForm& sf, double kappa,
                         const AmbientPoint& center, Eigen::VectorXd& V, Eigen::VectorXd& Vnu) {
  const int nv = geom.n_vertices();
  V.resize(nv);
  Vnu.resize(nv);
  const double sk = std::sqrt(kappa);
  for (int v = 0; v < nv; ++v) {
    const AmbientPoint& x = geom.mesh.vertices[v];
    const double r = sf.geodesic_distance(center, x);
    V[v] = std::cosh(sk * r);
    if (r < 1e-14) {
      Vnu[v] = 0.0;
      continue;
    }
    // grad V = sqrt(kappa) sinh(sqrt(kappa) r) * (radial unit tangent at x).
    AmbientVector radial;
    const double skm = std::sqrt(sf.kappa() > 0 ? sf.kappa() : 1.0);
    switch (sf.kind()) {
      case ModelKind::Euclidean:
        radial = (x - center) / r;
        break;
      case ModelKind::Hyperbolic: {
        const AmbientVector dir = (x - std::cosh(skm * r) * center) * skm / std::sinh(skm * r);
        radial = skm * std::sinh(skm * r) * center + std::cosh(skm * r) * dir;
        break;
      }
      case ModelKind::SphericalHemisphere: {
        const AmbientVector dir = (x - std::cos(skm * r) * center) * skm / std::sin(skm * r);
        radial = -skm * std::sin(skm * r) * center + std::cos(skm * r) * dir;
        break;
      }
    }
    Vnu[v] = sk * std::sinh(sk * r) * sf.bilinear(radial, geom.normals[v]);
  }
}

}  // namespace

DeficitReport evaluate_deficit(const SurfaceGeometry& geom, const SpaceForm& sf,
                               const InequalityForm& form, const ScalarField& eta) {
  if (!(sf == geom.mesh.space_form))
    throw UsageError("space form does not match the mesh it was built on");
  check_hypotheses(geom, eta);
  const int nv = geom.n_vertices();
  const int n = sf.dim();

  const Eigen::VectorXd lap = laplace_beltrami(geom, eta.values);
  const Eigen::VectorXd gsq = tangential_gradient_sq(geom, eta.values);
  const Eigen::VectorXd iiq = ii_quadratic_form(geom, eta.values);

  DeficitReport rep;
  rep.variant = to_string(form.variant);
  rep.h = geom.h;
  rep.n_vertices = nv;
  rep.min_H = geom.mean_curvature.minCoeff();
  rep.field_id = eta.id;

  Eigen::VectorXd V(nv), Vnu(nv);
  double lap_term = 0, ii_term = 0, grad_term = 0, eta_sq_term = 0;
  double s_lap = 0, s_ii = 0, s_grad = 0, s_eta = 0;

  if (form.variant == InequalityVariant::SpaceFormStatic) {
    const double k = sf.k();
    rep.k = k;
    rep.kappa = sf.kappa();
    const AmbientPoint center = form.base_point ? *form.base_point : sf.base_point();
    const Eigen::VectorXd coeffs = sf.distinguished_potential_coeffs(center);
    rep.v_normalization = sf.kind() == ModelKind::Euclidean
                              ? "V=1"
                              : (sf.kind() == ModelKind::Hyperbolic ? "V=sqrt(kappa)*t"
                                                                    : "V=sqrt(kappa)*x0");
    for (int v = 0; v < nv; ++v) {
      const PotentialEval ev = sf.potential_eval(coeffs, geom.mesh.vertices[v]);
      V[v] = ev.value;
      Vnu[v] = sf.kind() == ModelKind::Euclidean ? 0.0
                                                 : sf.bilinear(ev.gradient, geom.normals[v]);
    }
    for (int v = 0; v < nv; ++v) {
      const double a = geom.vertex_areas[v];
      const double combo = lap[v] + (n - 1) * k * eta.values[v];
      const double t_lap = a * V[v] * combo * combo / geom.mean_curvature[v];
      const double t_ii = a * V[v] * iiq[v];
      const double t_grad = a * Vnu[v] * gsq[v];
      const double t_eta = a * Vnu[v] * (n - 1) * k * eta.values[v] * eta.values[v];
      lap_term += t_lap;
      ii_term += t_ii;
      grad_term += t_grad;
      eta_sq_term += t_eta;
      s_lap += std::abs(t_lap);
      s_ii += std::abs(t_ii);
      s_grad += std::abs(t_grad);
      s_eta += std::abs(t_eta);
    }
  } else {
    const double kappa = form.kappa;
    if (!(kappa > 0.0)) throw UsageError("SectionalComparison requires kappa > 0");
    rep.k = sf.k();
    rep.kappa = kappa;
    rep.v_normalization = "V=cosh(sqrt(kappa)*r)";
    const AmbientPoint center = form.base_point ? *form.base_point : sf.base_point();
    sectional_potential(geom, sf, kappa, center, V, Vnu);
    for (int v = 0; v < nv; ++v) {
      const double a = geom.vertex_areas[v];
      const double combo = lap[v] - (n - 1) * kappa * eta.values[v];
      const double t_lap = a * V[v] * combo * combo / geom.mean_curvature[v];
      const double t_ii = a * V[v] * iiq[v];
      const double t_grad = a * Vnu[v] * gsq[v];
      // rhs carries + (n-1) kappa eta^2; stored negated so rhs = grad - eta_sq.
      const double t_eta = -a * Vnu[v] * (n - 1) * kappa * eta.values[v] * eta.values[v];
      lap_term += t_lap;
      ii_term += t_ii;
      grad_term += t_grad;
      eta_sq_term += t_eta;
      s_lap += std::abs(t_lap);
      s_ii += std::abs(t_ii);
      s_grad += std::abs(t_grad);
      s_eta += std::abs(t_eta);
    }
  }

  rep.lap_term = lap_term;
  rep.ii_term = ii_term;
  rep.grad_term = grad_term;
  rep.eta_sq_term = eta_sq_term;
  rep.lhs = lap_term - ii_term;
  rep.rhs = grad_term - eta_sq_term;
  rep.deficit = rep.lhs - rep.rhs;
  rep.lhs_magnitude = s_lap + s_ii;
  rep.scale = s_lap + s_ii + s_grad + s_eta;
  return rep;
}

std::vector<DeficitReport> equality_case_suite(const SurfaceGeometry& geom, const SpaceForm& sf,
                                               const std::vector<Eigen::VectorXd>& coeff_sets) {
  std::vector<DeficitReport> out;
  out.reserve(coeff_sets.size());
  const InequalityForm form = InequalityForm::space_form_static();
  for (const auto& coeffs : coeff_sets) {
    ScalarField eta = restrict_potential(sf, coeffs, geom.mesh);
    DeficitReport rep = evaluate_deficit(geom, sf, form, eta);
    rep.field_id += " [equality-expected]";
    out.push_back(std::move(rep));
  }
  return out;
}

nlohmann::json SweepSummary::to_json(bool include_reports) const {
  nlohmann::json j{
      {"count", count},
      {"seed", seed},
      {"max_degree", max_degree},
      {"tol_factor", tol_factor},
      {"min_deficit", min_deficit},
      {"median_deficit", median_deficit},
      {"max_deficit", max_deficit},
      {"n_strictly_positive", n_strictly_positive},
      {"fraction_strictly_positive", count > 0 ? static_cast<double>(n_strictly_positive) / count : 0.0},
      {"flagged", flagged},
  };
  if (include_reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    j["reports"] = arr;
  }
  return j;
}

SweepSummary ensemble_sweep(const SurfaceGeometry& geom, const SpaceForm& sf,
                            const InequalityForm& form, int max_degree, int count,
                            std::uint64_t seed, double tol_factor) {
  if (count <= 0) throw UsageError("ensemble sweep needs count > 0");
  SweepSummary sum;
  sum.count = count;
  sum.seed = seed;
  sum.max_degree = max_degree;
  sum.tol_factor = tol_factor;
  sum.reports.reserve(count);

  std::mt19937_64 rng(seed);
  std::vector<double> deficits;
  deficits.reserve(count);
  for (int i = 0; i < count; ++i) {
    const PolynomialField poly = random_polynomial(sf.embed_dim(), max_degree, rng);
    ScalarField eta = restrict_polynomial(poly, geom.mesh);
    eta.id += ":#" + std::to_string(i);
    DeficitReport rep = evaluate_deficit(geom, sf, form, eta);
    rep.seed = seed;
    if (rep.deficit < -tol_factor * geom.h * rep.lhs_magnitude) sum.flagged.push_back(i);
    if (rep.deficit > 0.0) ++sum.n_strictly_positive;
    deficits.push_back(rep.deficit);
    sum.reports.push_back(std::move(rep));
  }
  std::vector<double> sorted = deficits;
  std::sort(sorted.begin(), sorted.end());
  sum.min_deficit = sorted.front();
  sum.max_deficit = sorted.back();
  sum.median_deficit = sorted[sorted.size() / 2];
  return sum;
}

double thm4_cross_check(const SurfaceGeometry& geom, const SpaceForm& sf) {
  if (sf.kind() != ModelKind::Hyperbolic)
    throw UsageError("the Theorem 4 coincidence check requires the hyperbolic model");
  // Fixed battery: coordinate restrictions plus seeded cubics.
  std::vector<ScalarField> etas;
  for (int j = 0; j < sf.basis_size(); ++j)
    etas.push_back(restrict_potential(sf, Eigen::VectorXd::Unit(sf.basis_size(), j), geom.mesh));
  for (std::uint64_t s : {7ull, 8ull, 9ull}) {
    std::mt19937_64 rng(s);
    etas.push_back(restrict_polynomial(random_polynomial(sf.embed_dim(), 3, rng), geom.mesh));
  }

  const InequalityForm stat = InequalityForm::space_form_static();
  const InequalityForm sect = InequalityForm::sectional(sf.kappa());
  double worst = 0.0;
  for (const auto& eta : etas) {
    const DeficitReport a = evaluate_deficit(geom, sf, stat, eta);
    const DeficitReport b = evaluate_deficit(geom, sf, sect, eta);
    // Quantities that vanish to machine precision relative to the functional's
    // magnitude count as coincident.
    auto rel = [&](double x, double y) {
      const double denom = std::max(std::abs(x), std::abs(y));
      if (denom <= 1e-14 * std::max(a.scale, 1.0)) return 0.0;
      return std::abs(x - y) / denom;
    };
    worst = std::max({worst, rel(a.lhs, b.lhs), rel(a.rhs, b.rhs)});
  }
  return worst;
}

}  // namespace staticineq
