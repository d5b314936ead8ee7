#include "staticineq/fields.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "staticineq/errors.hpp"

namespace staticineq {

AnalyticField analytic_catalog(const std::string& name) {
  using V3 = Eigen::Vector3d;
  using M3 = Eigen::Matrix3d;
  auto coord = [](int i) {
    return AnalyticField{std::string("x") + std::to_string(i + 1),
                         [i](const V3& x) { return x[i]; },
                         [i](const V3&) { return V3(V3::Unit(i)); },
                         [](const V3&) { return M3(M3::Zero()); }};
  };
  if (name == "one")
    return {"one", [](const V3&) { return 1.0; }, [](const V3&) { return V3(V3::Zero()); },
            [](const V3&) { return M3(M3::Zero()); }};
  if (name == "x1") return coord(0);
  if (name == "x2") return coord(1);
  if (name == "x3") return coord(2);
  if (name == "r2")
    return {"r2", [](const V3& x) { return x.squaredNorm(); },
            [](const V3& x) { return V3(2.0 * x); },
            [](const V3&) { return M3(2.0 * M3::Identity()); }};
  if (name == "x1sq")
    return {"x1sq", [](const V3& x) { return x[0] * x[0]; },
            [](const V3& x) { return V3(2.0 * x[0] * V3::Unit(0)); },
            [](const V3&) {
              M3 h = M3::Zero();
              h(0, 0) = 2.0;
              return h;
            }};
  if (name == "linx2")
    return {"linx2", [](const V3& x) { return x[1] + 2.0; },
            [](const V3&) { return V3(V3::Unit(1)); }, [](const V3&) { return M3(M3::Zero()); }};
  if (name == "harmx1sq")
    // Harmonic on R^3, equal to x1^2 on the unit sphere.
    return {"harmx1sq",
            [](const V3& x) { return x[0] * x[0] - (x.squaredNorm() - 1.0) / 3.0; },
            [](const V3& x) { return V3(2.0 * x[0] * V3::Unit(0) - 2.0 / 3.0 * x); },
            [](const V3&) {
              M3 h = -2.0 / 3.0 * M3::Identity();
              h(0, 0) += 2.0;
              return h;
            }};
  throw UsageError("unknown catalog field '" + name + "'");
}

std::vector<std::string> analytic_catalog_names() {
  return {"one", "x1", "x2", "x3", "r2", "x1sq", "linx2", "harmx1sq"};
}

double analytic_consistency(const AnalyticField& f, std::uint64_t seed, int n_points) {
  std::mt19937_64 rng(seed);
  const double h = 1e-3;
  double worst = 0.0;
  for (int p = 0; p < n_points; ++p) {
    Eigen::Vector3d x;
    for (int i = 0; i < 3; ++i) x[i] = uniform_pm1(rng);
    for (int i = 0; i < 3; ++i) {
      auto at = [&](double s) {
        Eigen::Vector3d y = x;
        y[i] += s;
        return f.value(y);
      };
      const double fd =
          (-at(2 * h) + 8 * at(h) - 8 * at(-h) + at(-2 * h)) / (12 * h);
      worst = std::max(worst, std::abs(fd - f.gradient(x)[i]));
      if (f.hessian) {
        auto gat = [&](double s) {
          Eigen::Vector3d y = x;
          y[i] += s;
          return f.gradient(y);
        };
        const Eigen::Vector3d fd2 =
            (-gat(2 * h) + 8 * gat(h) - 8 * gat(-h) + gat(-2 * h)) / (12 * h);
        worst = std::max(worst, (fd2 - f.hessian(x).col(i)).cwiseAbs().maxCoeff());
        const Eigen::Matrix3d hess = f.hessian(x);
        worst = std::max(worst, (hess - hess.transpose()).cwiseAbs().maxCoeff());
      }
    }
  }
  return worst;
}

double PolynomialField::eval(const AmbientPoint& x) const {
  double out = 0.0;
  for (size_t m = 0; m < exponents.size(); ++m) {
    double term = coefficients[m];
    for (int i = 0; i < dim; ++i)
      for (int e = 0; e < exponents[m][i]; ++e) term *= x[i];
    out += term;
  }
  return out;
}

std::string PolynomialField::describe() const {
  int deg = 0;
  for (const auto& e : exponents) {
    int d = 0;
    for (int v : e) d += v;
    deg = std::max(deg, d);
  }
  std::ostringstream os;
  os << "poly:dim=" << dim << ",deg<=" << deg;
  return os.str();
}

std::vector<std::vector<int>> monomial_basis(int dim, int max_degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(dim, 0);
  // Graded lexicographic enumeration.
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == dim - 1) {
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[pos] = e;
      rec(pos + 1, remaining - e);
    }
  };
  for (int total = 0; total <= max_degree; ++total) rec(0, total);
  return out;
}

double uniform_pm1(std::mt19937_64& rng) {
  // Top 53 bits -> [0,1); affine to [-1,1). Identical across platforms.
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

PolynomialField random_polynomial(int dim, int max_degree, std::mt19937_64& rng) {
  PolynomialField f;
  f.dim = dim;
  f.exponents = monomial_basis(dim, max_degree);
  f.coefficients.resize(static_cast<long>(f.exponents.size()));
  for (long i = 0; i < f.coefficients.size(); ++i) f.coefficients[i] = uniform_pm1(rng);
  return f;
}

ScalarField restrict_potential(const SpaceForm& sf, const Eigen::VectorXd& coeffs,
                               const SurfaceMesh& mesh) {
  ScalarField field;
  field.values.resize(mesh.n_vertices());
  for (int v = 0; v < mesh.n_vertices(); ++v)
    field.values[v] = sf.potential_eval(coeffs, mesh.vertices[v]).value;
  std::ostringstream os;
  os << "basis:";
  for (int i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i];
  field.id = os.str();
  return field;
}

ScalarField restrict_polynomial(const PolynomialField& poly, const SurfaceMesh& mesh) {
  if (poly.dim != mesh.space_form.embed_dim())
    throw UsageError("polynomial dimension does not match the embedding");
  ScalarField field;
  field.values.resize(mesh.n_vertices());
  for (int v = 0; v < mesh.n_vertices(); ++v) field.values[v] = poly.eval(mesh.vertices[v]);
  field.id = poly.describe();
  return field;
}

ScalarField restrict_analytic(const AnalyticField& f, const SurfaceMesh& mesh) {
  if (mesh.space_form.kind() != ModelKind::Euclidean)
    throw UsageError("analytic catalog fields are Euclidean");
  ScalarField field;
  field.values.resize(mesh.n_vertices());
  for (int v = 0; v < mesh.n_vertices(); ++v) {
    const auto& x = mesh.vertices[v];
    field.values[v] = f.value(Eigen::Vector3d(x[0], x[1], x[2]));
  }
  field.id = f.name;
  return field;
}

ScalarField constant_field(const SurfaceMesh& mesh, double c) {
  ScalarField field;
  field.values = Eigen::VectorXd::Constant(mesh.n_vertices(), c);
  std::ostringstream os;
  os << "const:" << c;
  field.id = os.str();
  return field;
}

void save_field(const std::string& path, const ScalarField& field) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write field file '" + path + "'");
  out << "FIELD " << field.values.size() << "\n";
  char buf[40];
  for (long i = 0; i < field.values.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", field.values[i]);
    out << buf << "\n";
  }
  if (!out) throw IoError("write failed on '" + path + "'");
}

ScalarField load_field(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open field file '" + path + "'");
  std::string tag;
  long count = -1;
  long line = 1;
  if (!(in >> tag >> count) || tag != "FIELD" || count < 0)
    throw ParseError("expected 'FIELD <count>'", line);
  ScalarField field;
  field.values.resize(count);
  for (long i = 0; i < count; ++i) {
    ++line;
    if (!(in >> field.values[i])) throw ParseError("bad field value", line);
  }
  field.id = "file:" + path;
  return field;
}

}  // namespace staticineq
