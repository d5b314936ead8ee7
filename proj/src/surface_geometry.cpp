#include "staticineq/surface_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace staticineq {

namespace {

// 4th-order central finite-difference step in the direction parameters.
constexpr double kFdStep = 1e-4;

struct VertexCurvature {
  AmbientVector normal;
  std::array<AmbientVector, 2> frame;
  Eigen::Matrix2d ii;
};

// Express a bilinear form given on the (not necessarily orthonormal) basis
// (X1, X2) in the orthonormal frame (t1, t2); all vectors share the span.
Eigen::Matrix2d form_in_frame(const SpaceForm& sf, const AmbientVector& X1,
                              const AmbientVector& X2, const Eigen::Matrix2d& form_x,
                              const AmbientVector& t1, const AmbientVector& t2) {
  Eigen::Matrix2d gram;
  gram << sf.bilinear(X1, X1), sf.bilinear(X1, X2), sf.bilinear(X2, X1), sf.bilinear(X2, X2);
  Eigen::Matrix2d rhs;  // column alpha = <t_alpha, X_i>
  rhs << sf.bilinear(t1, X1), sf.bilinear(t2, X1), sf.bilinear(t1, X2), sf.bilinear(t2, X2);
  const Eigen::Matrix2d coords = gram.ldlt().solve(rhs);  // t_alpha = sum_i coords(i,alpha) X_i
  return coords.transpose() * form_x * coords;
}

// Orthonormal tangent frame at a vertex: seed edge Gram-Schmidt'ed against the
// normal inside the model tangent space; deterministic via the smallest
// neighbor index.
std::array<AmbientVector, 2> vertex_frame(const SpaceForm& sf, const AmbientPoint& x,
                                          const AmbientVector& nu, const AmbientPoint& seed_to) {
  AmbientVector t1 = sf.tangent_project(x, seed_to - x);
  t1 -= sf.bilinear(t1, nu) * nu;
  const double n1 = sf.bilinear(t1, t1);
  if (n1 <= 1e-20) throw MeshQualityError("degenerate seed edge for a vertex tangent frame");
  t1 /= std::sqrt(n1);
  // t2 = "nu x t1" inside the 3d model tangent space, computed in an
  // orthonormal frame of that space.
  const auto model_frame = sf.tangent_frame(x);
  Eigen::Vector3d nc, tc;
  for (int i = 0; i < 3; ++i) {
    nc[i] = sf.bilinear(nu, model_frame[i]);
    tc[i] = sf.bilinear(t1, model_frame[i]);
  }
  const Eigen::Vector3d sc = nc.cross(tc);
  AmbientVector t2 = AmbientVector::Zero(x.size());
  for (int i = 0; i < 3; ++i) t2 += sc[i] * model_frame[i];
  return {t1, t2};
}

// Curvature from the analytic radial graph: differentiate the embedding
// x(s,t) = exp_p(rho(w(s,t)) w(s,t)) around each vertex direction and read the
// first/second fundamental forms off the flat derivatives. The projection of
// the flat second derivative onto the model tangent space realizes the model's
// covariant derivative; II(X,Y) = -<D_X Y, nu> = <D_X nu, Y>.
VertexCurvature analytic_curvature(const SpaceForm& sf, const RadialProfile& profile,
                                   const Eigen::Vector3d& w0, const AmbientPoint& x0,
                                   const AmbientPoint& seed_to) {
  // Deterministic chart of the direction sphere around w0.
  int axis = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(w0[i]) < std::abs(w0[axis])) axis = i;
  Eigen::Vector3d u = Eigen::Vector3d::Unit(axis);
  u = (u - u.dot(w0) * w0).normalized();
  const Eigen::Vector3d v = w0.cross(u);

  auto embed = [&](double s, double t) {
    const Eigen::Vector3d w = (w0 + s * u + t * v).normalized();
    return sf.radial_chart(w, profile.rho(w));
  };

  const double hh = kFdStep;
  auto d1 = [&](auto&& f) -> AmbientVector {  // 4th-order first derivative
    return (-f(2 * hh) + 8.0 * f(hh) - 8.0 * f(-hh) + f(-2 * hh)) / (12.0 * hh);
  };
  auto d2 = [&](auto&& f) -> AmbientVector {  // 4th-order second derivative
    return (-f(2 * hh) + 16.0 * f(hh) - 30.0 * f(0.0) + 16.0 * f(-hh) - f(-2 * hh)) /
           (12.0 * hh * hh);
  };

  const AmbientVector Fs = d1([&](double s) { return embed(s, 0.0); });
  const AmbientVector Ft = d1([&](double t) { return embed(0.0, t); });
  const AmbientVector Fss = d2([&](double s) { return embed(s, 0.0); });
  const AmbientVector Ftt = d2([&](double t) { return embed(0.0, t); });
  const AmbientVector Fst =
      d1([&](double s) { return AmbientVector(d1([&](double t) { return embed(s, t); })); });

  VertexCurvature out;
  const AmbientVector X1 = sf.tangent_project(x0, Fs);
  const AmbientVector X2 = sf.tangent_project(x0, Ft);

  // Normal: orthogonal complement of (X1, X2) in the model tangent space,
  // oriented outward along the radial direction (star-shaped family).
  const auto model_frame = sf.tangent_frame(x0);
  Eigen::Vector3d c1, c2;
  for (int i = 0; i < 3; ++i) {
    c1[i] = sf.bilinear(X1, model_frame[i]);
    c2[i] = sf.bilinear(X2, model_frame[i]);
  }
  const Eigen::Vector3d nc = c1.cross(c2).normalized();
  AmbientVector nu = AmbientVector::Zero(x0.size());
  for (int i = 0; i < 3; ++i) nu += nc[i] * model_frame[i];
  const AmbientVector radial = sf.radial_tangent(w0, profile.rho(w0));
  if (sf.bilinear(nu, radial) < 0.0) nu = -nu;
  out.normal = nu;

  Eigen::Matrix2d ii_x;
  ii_x << -sf.bilinear(Fss, nu), -sf.bilinear(Fst, nu), -sf.bilinear(Fst, nu),
      -sf.bilinear(Ftt, nu);
  out.frame = vertex_frame(sf, x0, nu, seed_to);
  out.ii = form_in_frame(sf, X1, X2, ii_x, out.frame[0], out.frame[1]);
  return out;
}

// Euclidean fallback for meshes without a radial profile: quadric fit of the
// 2-ring in an estimated tangent frame.
VertexCurvature quadric_curvature(const SpaceForm& sf, const AmbientPoint& x0,
                                  const AmbientVector& nu_estimate,
                                  const std::vector<AmbientPoint>& ring,
                                  const AmbientPoint& seed_to) {
  if (ring.size() < 5)
    throw MeshQualityError("quadric curvature needs at least 5 neighbors in the 2-ring");
  AmbientVector nu0 = nu_estimate.normalized();
  const auto frame0 = vertex_frame(sf, x0, nu0, seed_to);

  Eigen::MatrixXd A(ring.size(), 5);
  Eigen::VectorXd b(ring.size());
  for (size_t i = 0; i < ring.size(); ++i) {
    const AmbientVector d = ring[i] - x0;
    const double xi = d.dot(frame0[0]);
    const double up = d.dot(frame0[1]);
    A.row(i) << 0.5 * xi * xi, xi * up, 0.5 * up * up, xi, up;
    b[i] = d.dot(nu0);
  }
  const Eigen::VectorXd q = A.colPivHouseholderQr().solve(b);
  const double a = q[0], bb = q[1], c = q[2], dslope = q[3], eslope = q[4];
  const double w = std::sqrt(1.0 + dslope * dslope + eslope * eslope);

  // Graph z = f(xi, up): refined normal and curvature of the graph at 0.
  VertexCurvature out;
  AmbientVector nu = (nu0 - dslope * frame0[0] - eslope * frame0[1]) / w;
  out.normal = nu;
  const AmbientVector X1 = frame0[0] + dslope * nu0;
  const AmbientVector X2 = frame0[1] + eslope * nu0;
  // Flat second derivatives are f_ij * nu0; II(X_i,X_j) = -<F_ij, nu> = -f_ij / w.
  Eigen::Matrix2d ii_x;
  ii_x << -a / w, -bb / w, -bb / w, -c / w;
  out.frame = vertex_frame(sf, x0, nu, seed_to);
  out.ii = form_in_frame(sf, X1, X2, ii_x, out.frame[0], out.frame[1]);
  return out;
}

}  // namespace

Eigen::Matrix<double, 2, 3> p1_gradients_2d(double la, double lb, double lc) {
  // Unfold with A = (0,0), B = (lc, 0), C from the law of cosines.
  const double cx = (lc * lc + lb * lb - la * la) / (2.0 * lc);
  const double cy2 = lb * lb - cx * cx;
  if (!(cy2 > 0.0)) throw MeshQualityError("degenerate intrinsic triangle");
  const double cy = std::sqrt(cy2);
  const Eigen::Vector2d A(0.0, 0.0), B(lc, 0.0), C(cx, cy);
  const double two_area = lc * cy;
  auto perp = [](const Eigen::Vector2d& v) { return Eigen::Vector2d(-v[1], v[0]); };
  Eigen::Matrix<double, 2, 3> g;
  g.col(0) = perp(C - B) / two_area;
  g.col(1) = perp(A - C) / two_area;
  g.col(2) = perp(B - A) / two_area;
  return g;
}

SurfaceGeometry build_geometry(const SurfaceMesh& mesh) {
  mesh.validate();
  const SpaceForm& sf = mesh.space_form;
  const int nv = mesh.n_vertices();
  const int nt = mesh.n_triangles();

  SurfaceGeometry geom;
  geom.mesh = mesh;
  geom.vertex_areas = Eigen::VectorXd::Zero(nv);
  geom.triangle_areas.resize(nt);
  geom.triangle_grads.resize(nt);

  // Intrinsic cotangent assembly: each triangle unfolded to the plane with its
  // geodesic side lengths. One code path for all three models.
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<size_t>(nt) * 12);
  double hmax = 0.0;
  for (int ti = 0; ti < nt; ++ti) {
    const auto& t = mesh.triangles[ti];
    const double la = sf.geodesic_distance(mesh.vertices[t[1]], mesh.vertices[t[2]]);
    const double lb = sf.geodesic_distance(mesh.vertices[t[2]], mesh.vertices[t[0]]);
    const double lc = sf.geodesic_distance(mesh.vertices[t[0]], mesh.vertices[t[1]]);
    hmax = std::max({hmax, la, lb, lc});
    const double l2[3] = {la * la, lb * lb, lc * lc};
    const double s = 0.5 * (la + lb + lc);
    const double rad = s * (s - la) * (s - lb) * (s - lc);
    if (!(rad > 0.0))
      throw MeshQualityError("degenerate triangle " + std::to_string(ti) +
                             " (zero intrinsic area)");
    const double area = std::sqrt(rad);
    // Smallest intrinsic angle ~ opposite-side over circumradius; use asin via
    // area: sin(angle_i) = 2 area / (l_j l_k).
    for (int i = 0; i < 3; ++i) {
      const double lj = std::sqrt(l2[(i + 1) % 3]), lk = std::sqrt(l2[(i + 2) % 3]);
      const double sin_angle = 2.0 * area / (lj * lk);
      const double cos_angle = (l2[(i + 1) % 3] + l2[(i + 2) % 3] - l2[i]) / (2.0 * lj * lk);
      if (std::atan2(sin_angle, cos_angle) < kDegenerateAngle)
        throw MeshQualityError("degenerate triangle " + std::to_string(ti) +
                               " (intrinsic angle below threshold)");
    }
    for (int i = 0; i < 3; ++i) {
      const int v1 = t[(i + 1) % 3], v2 = t[(i + 2) % 3];
      const double cot = (l2[(i + 1) % 3] + l2[(i + 2) % 3] - l2[i]) / (4.0 * area);
      const double w = 0.5 * cot;
      triplets.emplace_back(v1, v2, -w);
      triplets.emplace_back(v2, v1, -w);
      triplets.emplace_back(v1, v1, w);
      triplets.emplace_back(v2, v2, w);
      geom.vertex_areas[t[i]] += area / 3.0;
    }
    geom.triangle_areas[ti] = area;
    geom.triangle_grads[ti] = p1_gradients_2d(la, lb, lc);
  }
  geom.stiffness.resize(nv, nv);
  geom.stiffness.setFromTriplets(triplets.begin(), triplets.end());
  geom.total_area = geom.vertex_areas.sum();
  geom.h = hmax;

  // Pointwise curvature data.
  const bool analytic = mesh.radial_profile.has_value() && !mesh.directions.empty();
  if (!analytic && sf.kind() != ModelKind::Euclidean)
    throw UnsupportedError(
        "curvature on curved models requires the generating radial profile");

  // Smallest-index neighbor per vertex (deterministic frame seeds) and, for the
  // quadric path, accumulated normals and 2-rings.
  std::vector<int> seed_neighbor(nv, std::numeric_limits<int>::max());
  for (const auto& t : mesh.triangles)
    for (int e = 0; e < 3; ++e) {
      seed_neighbor[t[e]] = std::min(seed_neighbor[t[e]], t[(e + 1) % 3]);
      seed_neighbor[t[e]] = std::min(seed_neighbor[t[e]], t[(e + 2) % 3]);
    }

  geom.normals.resize(nv);
  geom.frames.resize(nv);
  geom.second_fundamental.resize(nv);
  geom.mean_curvature.resize(nv);

  if (analytic) {
    for (int v = 0; v < nv; ++v) {
      const auto cur = analytic_curvature(sf, *mesh.radial_profile, mesh.directions[v],
                                          mesh.vertices[v], mesh.vertices[seed_neighbor[v]]);
      geom.normals[v] = cur.normal;
      geom.frames[v] = cur.frame;
      geom.second_fundamental[v] = cur.ii;
      geom.mean_curvature[v] = cur.ii.trace();
    }
  } else {
    std::vector<AmbientVector> normal_acc(nv, AmbientVector::Zero(sf.embed_dim()));
    std::vector<std::set<int>> ring1(nv);
    for (const auto& t : mesh.triangles) {
      const Eigen::Vector3d a = mesh.vertices[t[0]], b = mesh.vertices[t[1]],
                            c = mesh.vertices[t[2]];
      const Eigen::Vector3d an = (b - a).cross(c - a);  // 2x area, outward
      for (int e = 0; e < 3; ++e) {
        normal_acc[t[e]] += an;
        ring1[t[e]].insert(t[(e + 1) % 3]);
        ring1[t[e]].insert(t[(e + 2) % 3]);
      }
    }
    for (int v = 0; v < nv; ++v) {
      std::set<int> ring2 = ring1[v];
      for (int w : ring1[v]) ring2.insert(ring1[w].begin(), ring1[w].end());
      ring2.erase(v);
      std::vector<AmbientPoint> ring;
      ring.reserve(ring2.size());
      for (int w : ring2) ring.push_back(mesh.vertices[w]);
      const auto cur = quadric_curvature(sf, mesh.vertices[v], normal_acc[v], ring,
                                         mesh.vertices[seed_neighbor[v]]);
      geom.normals[v] = cur.normal;
      geom.frames[v] = cur.frame;
      geom.second_fundamental[v] = cur.ii;
      geom.mean_curvature[v] = cur.ii.trace();
    }
  }
  return geom;
}

Eigen::VectorXd laplace_beltrami(const SurfaceGeometry& geom, const Eigen::VectorXd& field) {
  if (field.size() != geom.vertex_areas.size())
    throw UsageError("field length does not match the mesh vertex count");
  return -(geom.stiffness * field).cwiseQuotient(geom.vertex_areas);
}

Eigen::VectorXd tangential_gradient_sq(const SurfaceGeometry& geom, const Eigen::VectorXd& field) {
  if (field.size() != geom.vertex_areas.size())
    throw UsageError("field length does not match the mesh vertex count");
  const int nv = geom.n_vertices();
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(nv);
  for (int ti = 0; ti < geom.mesh.n_triangles(); ++ti) {
    const auto& t = geom.mesh.triangles[ti];
    const Eigen::Vector2d g = geom.triangle_grads[ti].col(0) * field[t[0]] +
                              geom.triangle_grads[ti].col(1) * field[t[1]] +
                              geom.triangle_grads[ti].col(2) * field[t[2]];
    const double contrib = geom.triangle_areas[ti] / 3.0 * g.squaredNorm();
    acc[t[0]] += contrib;
    acc[t[1]] += contrib;
    acc[t[2]] += contrib;
  }
  return acc.cwiseQuotient(geom.vertex_areas);
}

std::vector<Eigen::Vector2d> tangential_gradient_frame(const SurfaceGeometry& geom,
                                                       const Eigen::VectorXd& field) {
  if (field.size() != geom.vertex_areas.size())
    throw UsageError("field length does not match the mesh vertex count");
  const SpaceForm& sf = geom.mesh.space_form;
  const int nv = geom.n_vertices();
  std::vector<AmbientVector> acc(nv, AmbientVector::Zero(sf.embed_dim()));
  for (int ti = 0; ti < geom.mesh.n_triangles(); ++ti) {
    const auto& t = geom.mesh.triangles[ti];
    const AmbientVector e1 = geom.mesh.vertices[t[1]] - geom.mesh.vertices[t[0]];
    const AmbientVector e2 = geom.mesh.vertices[t[2]] - geom.mesh.vertices[t[0]];
    Eigen::Matrix2d gram;
    gram << sf.bilinear(e1, e1), sf.bilinear(e1, e2), sf.bilinear(e1, e2), sf.bilinear(e2, e2);
    const Eigen::Vector2d rhs(field[t[1]] - field[t[0]], field[t[2]] - field[t[0]]);
    const Eigen::Vector2d coef = gram.ldlt().solve(rhs);
    const AmbientVector g = coef[0] * e1 + coef[1] * e2;
    const double w = geom.triangle_areas[ti] / 3.0;
    acc[t[0]] += w * g;
    acc[t[1]] += w * g;
    acc[t[2]] += w * g;
  }
  std::vector<Eigen::Vector2d> out(nv);
  for (int v = 0; v < nv; ++v) {
    const AmbientVector g = acc[v] / geom.vertex_areas[v];
    out[v] = Eigen::Vector2d(sf.bilinear(g, geom.frames[v][0]), sf.bilinear(g, geom.frames[v][1]));
  }
  return out;
}

Eigen::VectorXd ii_quadratic_form(const SurfaceGeometry& geom, const Eigen::VectorXd& field) {
  const auto grads = tangential_gradient_frame(geom, field);
  Eigen::VectorXd out(geom.n_vertices());
  for (int v = 0; v < geom.n_vertices(); ++v)
    out[v] = grads[v].dot(geom.second_fundamental[v] * grads[v]);
  return out;
}

Eigen::VectorXd normal_derivative_V(const SurfaceGeometry& geom, const SpaceForm& sf) {
  if (!(sf == geom.mesh.space_form))
    throw UsageError("normal_derivative_V: space form does not match the mesh");
  const int nv = geom.n_vertices();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(nv);
  if (sf.kind() == ModelKind::Euclidean) return out;  // V constant
  const Eigen::VectorXd coeffs = sf.distinguished_potential_coeffs();
  for (int v = 0; v < nv; ++v) {
    const PotentialEval ev = sf.potential_eval(coeffs, geom.mesh.vertices[v]);
    out[v] = sf.bilinear(ev.gradient, geom.normals[v]);
  }
  return out;
}

}  // namespace staticineq
