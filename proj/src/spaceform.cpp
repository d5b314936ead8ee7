#include "staticineq/spaceform.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace staticineq {

namespace {

// Roundoff allowance when clamping inverse-trig arguments for points that
// already passed the model-constraint check.
constexpr double kClampTol = 1e-9;

std::string point_str(const AmbientPoint& x) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  os << ")";
  return os.str();
}

}  // namespace

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Euclidean: return "euclidean";
    case ModelKind::Hyperbolic: return "hyperbolic";
    case ModelKind::SphericalHemisphere: return "spherical";
  }
  return "unknown";
}

ModelKind model_kind_from_tag(const std::string& tag) {
  if (tag == "euclidean") return ModelKind::Euclidean;
  if (tag == "hyperbolic") return ModelKind::Hyperbolic;
  if (tag == "spherical") return ModelKind::SphericalHemisphere;
  throw UsageError("unknown space form kind '" + tag + "'");
}

SpaceForm::SpaceForm(ModelKind kind, double kappa, AmbientPoint base, int n)
    : kind_(kind), n_(n), kappa_(kappa), base_(std::move(base)) {
  if (n_ < 2) throw UsageError("space form dimension must be >= 2");
  if (kind_ != ModelKind::Euclidean && kappa_ <= 0.0)
    throw UsageError("curved space forms need kappa > 0");
  check_point(base_);
  base_frame_ = tangent_frame(base_);
}

SpaceForm SpaceForm::euclidean(int n) {
  return SpaceForm(ModelKind::Euclidean, 0.0, AmbientPoint::Zero(n), n);
}

SpaceForm SpaceForm::hyperbolic(double kappa, int n) {
  AmbientPoint apex = AmbientPoint::Zero(n + 1);
  apex[0] = 1.0 / std::sqrt(kappa);
  return SpaceForm(ModelKind::Hyperbolic, kappa, apex, n);
}

SpaceForm SpaceForm::spherical(double kappa, int n) {
  AmbientPoint pole = AmbientPoint::Zero(n + 1);
  pole[0] = 1.0 / std::sqrt(kappa);
  return SpaceForm(ModelKind::SphericalHemisphere, kappa, pole, n);
}

SpaceForm SpaceForm::with_base(ModelKind kind, double kappa, const AmbientPoint& base, int n) {
  return SpaceForm(kind, kind == ModelKind::Euclidean ? 0.0 : kappa, base, n);
}

double SpaceForm::k() const {
  switch (kind_) {
    case ModelKind::Euclidean: return 0.0;
    case ModelKind::Hyperbolic: return -kappa_;
    case ModelKind::SphericalHemisphere: return kappa_;
  }
  return 0.0;
}

double SpaceForm::bilinear(const AmbientVector& u, const AmbientVector& v) const {
  if (kind_ == ModelKind::Hyperbolic)
    return -u[0] * v[0] + u.tail(u.size() - 1).dot(v.tail(v.size() - 1));
  return u.dot(v);
}

double SpaceForm::constraint_residual(const AmbientPoint& x) const {
  if (static_cast<int>(x.size()) != embed_dim()) return std::numeric_limits<double>::infinity();
  switch (kind_) {
    case ModelKind::Euclidean:
      return 0.0;
    case ModelKind::Hyperbolic: {
      const double q = bilinear(x, x);  // must be -1/kappa, t > 0
      if (x[0] <= 0.0) return std::numeric_limits<double>::infinity();
      return std::abs(q * kappa_ + 1.0);
    }
    case ModelKind::SphericalHemisphere: {
      const double q = x.squaredNorm();  // must be 1/kappa, x0 > 0
      if (x[0] <= 0.0) return std::numeric_limits<double>::infinity();
      return std::abs(q * kappa_ - 1.0);
    }
  }
  return std::numeric_limits<double>::infinity();
}

bool SpaceForm::on_model(const AmbientPoint& x, double tol) const {
  return constraint_residual(x) <= tol * 8.0;  // small headroom over strict ulp noise
}

void SpaceForm::check_point(const AmbientPoint& x) const {
  if (static_cast<int>(x.size()) != embed_dim())
    throw InvalidPointError("point has dimension " + std::to_string(x.size()) +
                            ", expected " + std::to_string(embed_dim()));
  if (!on_model(x))
    throw InvalidPointError("point " + point_str(x) + " violates the " + to_string(kind_) +
                            " model constraint (residual " +
                            std::to_string(constraint_residual(x)) + ")");
}

AmbientPoint SpaceForm::project_to_model(const AmbientPoint& x) const {
  switch (kind_) {
    case ModelKind::Euclidean:
      return x;
    case ModelKind::Hyperbolic: {
      const double q = -bilinear(x, x);  // ~ 1/kappa
      if (q <= 0.0) throw InvalidPointError("cannot project timelike-degenerate point");
      return x / std::sqrt(q * kappa_);
    }
    case ModelKind::SphericalHemisphere: {
      const double q = x.squaredNorm();
      if (q <= 0.0) throw InvalidPointError("cannot project the origin to the sphere");
      return x / std::sqrt(q * kappa_);
    }
  }
  return x;
}

AmbientVector SpaceForm::tangent_project(const AmbientPoint& x, const AmbientVector& v) const {
  if (kind_ == ModelKind::Euclidean) return v;
  // <x,x> = -1/kappa (hyperbolic) or 1/kappa (spherical); subtract the
  // component along the position vector in the ambient metric.
  const double xx = bilinear(x, x);
  return v - (bilinear(v, x) / xx) * x;
}

double SpaceForm::geodesic_distance(const AmbientPoint& x, const AmbientPoint& y) const {
  check_point(x);
  check_point(y);
  const double sk = std::sqrt(kappa_);
  switch (kind_) {
    case ModelKind::Euclidean:
      return (x - y).norm();
    case ModelKind::Hyperbolic: {
      // cosh(sk d) - 1 = kappa <x-y, x-y>_M / 2; cancellation-free vs arccosh.
      double q = bilinear(x - y, x - y);
      if (q < 0.0) {
        if (q < -kClampTol) throw InvalidPointError("hyperbolic distance: timelike separation");
        q = 0.0;
      }
      return 2.0 / sk * std::asinh(0.5 * sk * std::sqrt(q));
    }
    case ModelKind::SphericalHemisphere: {
      double arg = 0.5 * sk * (x - y).norm();
      if (arg > 1.0) {
        if (arg > 1.0 + kClampTol) throw InvalidPointError("spherical distance: chord too long");
        arg = 1.0;
      }
      return 2.0 / sk * std::asin(arg);
    }
  }
  return 0.0;
}

std::vector<AmbientVector> SpaceForm::tangent_frame(const AmbientPoint& x) const {
  const int N = embed_dim();
  std::vector<AmbientVector> frame;
  frame.reserve(n_);
  for (int i = 0; i < N && static_cast<int>(frame.size()) < n_; ++i) {
    AmbientVector v = tangent_project(x, AmbientVector::Unit(N, i));
    for (const auto& e : frame) v -= bilinear(v, e) * e;
    const double norm2 = bilinear(v, v);
    if (norm2 > 1e-6) frame.push_back(v / std::sqrt(norm2));
  }
  if (static_cast<int>(frame.size()) != n_)
    throw NumericError("tangent frame construction failed", 0);
  return frame;
}

AmbientPoint SpaceForm::radial_chart(const Eigen::VectorXd& omega, double rho) const {
  if (static_cast<int>(omega.size()) != n_)
    throw UsageError("direction must have the manifold dimension");
  if (rho < 0.0) throw DomainError("radial chart needs rho >= 0");
  if (rho > max_radius())
    throw DomainError("rho = " + std::to_string(rho) + " exceeds the hemisphere margin " +
                      std::to_string(max_radius()));
  Eigen::VectorXd w = omega / omega.norm();
  AmbientVector dir = AmbientVector::Zero(embed_dim());
  for (int i = 0; i < n_; ++i) dir += w[i] * base_frame_[i];
  const double sk = std::sqrt(kappa_);
  switch (kind_) {
    case ModelKind::Euclidean:
      return base_ + rho * dir;
    case ModelKind::Hyperbolic:
      return project_to_model(std::cosh(sk * rho) * base_ + std::sinh(sk * rho) / sk * dir);
    case ModelKind::SphericalHemisphere:
      return project_to_model(std::cos(sk * rho) * base_ + std::sin(sk * rho) / sk * dir);
  }
  return base_;
}

AmbientVector SpaceForm::radial_tangent(const Eigen::VectorXd& omega, double rho) const {
  Eigen::VectorXd w = omega / omega.norm();
  AmbientVector dir = AmbientVector::Zero(embed_dim());
  for (int i = 0; i < n_; ++i) dir += w[i] * base_frame_[i];
  const double sk = std::sqrt(kappa_);
  switch (kind_) {
    case ModelKind::Euclidean:
      return dir;
    case ModelKind::Hyperbolic:
      return sk * std::sinh(sk * rho) * base_ + std::cosh(sk * rho) * dir;
    case ModelKind::SphericalHemisphere:
      return -sk * std::sin(sk * rho) * base_ + std::cos(sk * rho) * dir;
  }
  return dir;
}

Eigen::VectorXd SpaceForm::direction_from_base(const AmbientPoint& x) const {
  const double r = geodesic_distance(base_, x);
  if (r < 1e-14) throw UsageError("direction_from_base: point coincides with the base point");
  const double sk = std::sqrt(kappa_);
  AmbientVector w;
  switch (kind_) {
    case ModelKind::Euclidean:
      w = (x - base_) / r;
      break;
    case ModelKind::Hyperbolic:
      w = (x - std::cosh(sk * r) * base_) * sk / std::sinh(sk * r);
      break;
    case ModelKind::SphericalHemisphere:
      w = (x - std::cos(sk * r) * base_) * sk / std::sin(sk * r);
      break;
  }
  Eigen::VectorXd coords(n_);
  for (int i = 0; i < n_; ++i) coords[i] = bilinear(w, base_frame_[i]);
  return coords / coords.norm();
}

double SpaceForm::max_radius() const {
  if (kind_ != ModelKind::SphericalHemisphere)
    return std::numeric_limits<double>::infinity();
  const double sk = std::sqrt(kappa_);
  return M_PI / (2.0 * sk) - kHemisphereMargin / sk;
}

Eigen::MatrixXd SpaceForm::metric_matrix() const {
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(embed_dim(), embed_dim());
  if (kind_ == ModelKind::Hyperbolic) g(0, 0) = -1.0;
  return g;
}

PotentialEval SpaceForm::potential_eval(const Eigen::VectorXd& coeffs, const AmbientPoint& x) const {
  if (static_cast<int>(coeffs.size()) != basis_size())
    throw UsageError("potential coefficient vector must have n+1 entries");
  check_point(x);
  PotentialEval out;
  const int N = embed_dim();
  if (kind_ == ModelKind::Euclidean) {
    // basis {1, x_1, ..., x_n}
    out.value = coeffs[0] + coeffs.tail(n_).dot(x);
    out.gradient = coeffs.tail(n_);
    out.hessian = Eigen::MatrixXd::Zero(N, N);
    return out;
  }
  // Curved: basis = embedding coordinates; f = <a, x> componentwise. The flat
  // differential is a; raise the index with the ambient metric and project.
  out.value = coeffs.dot(x);
  AmbientVector grad = coeffs;
  if (kind_ == ModelKind::Hyperbolic) grad[0] = -grad[0];
  out.gradient = tangent_project(x, grad);
  // Model Hessian of every basis element is -k f g, exactly.
  out.hessian = (-k() * out.value) * metric_matrix();
  return out;
}

Eigen::VectorXd SpaceForm::distinguished_potential_coeffs() const {
  return distinguished_potential_coeffs(base_);
}

Eigen::VectorXd SpaceForm::distinguished_potential_coeffs(const AmbientPoint& center) const {
  Eigen::VectorXd a = Eigen::VectorXd::Zero(basis_size());
  switch (kind_) {
    case ModelKind::Euclidean:
      a[0] = 1.0;
      return a;
    case ModelKind::Hyperbolic:
      // V = -kappa <x, p>_M = cosh(sqrt(kappa) r)
      a = kappa_ * center;
      a.tail(n_) *= -1.0;
      return a;
    case ModelKind::SphericalHemisphere:
      // V = kappa <x, p> = cos(sqrt(kappa) r)
      a = kappa_ * center;
      return a;
  }
  return a;
}

double SpaceForm::potential_from_distance(const AmbientPoint& x) const {
  return potential_from_distance(base_, x);
}

double SpaceForm::potential_from_distance(const AmbientPoint& center, const AmbientPoint& x) const {
  const double r = geodesic_distance(center, x);
  const double sk = std::sqrt(kappa_);
  switch (kind_) {
    case ModelKind::Euclidean: return 1.0;
    case ModelKind::Hyperbolic: return std::cosh(sk * r);
    case ModelKind::SphericalHemisphere: return std::cos(sk * r);
  }
  return 1.0;
}

StaticResidual SpaceForm::static_residual(const Eigen::VectorXd& coeffs,
                                          const std::vector<AmbientPoint>& samples) const {
  if (samples.empty()) throw UsageError("static_residual needs a nonempty sample set");
  StaticResidual res;
  for (const auto& x : samples) {
    const PotentialEval ev = potential_eval(coeffs, x);
    const auto frame = tangent_frame(x);
    Eigen::MatrixXd hf(n_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) hf(i, j) = frame[i].dot(ev.hessian * frame[j]);
    const double lap = hf.trace();
    // -(lap f) g + hess f - f Ric, in the orthonormal tangent frame.
    Eigen::MatrixXd resid = hf;
    resid.diagonal().array() += -lap - ev.value * ricci_factor();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (resid + resid.transpose()));
    res.operator_norm = std::max(res.operator_norm, eig.eigenvalues().cwiseAbs().maxCoeff());
    if (n_ > 1)
      res.trace = std::max(res.trace,
                           std::abs(lap + scalar_curvature() / (n_ - 1) * ev.value));
  }
  return res;
}

bool SpaceForm::operator==(const SpaceForm& other) const {
  return kind_ == other.kind_ && n_ == other.n_ && kappa_ == other.kappa_ &&
         base_.size() == other.base_.size() && base_ == other.base_;
}

}  // namespace staticineq
