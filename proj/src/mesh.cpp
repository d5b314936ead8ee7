#include "staticineq/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace staticineq {

namespace {

struct DirectionMesh {
  std::vector<Eigen::Vector3d> dirs;
  std::vector<std::array<int, 3>> tris;
};

// Canonical icosahedron, outward-oriented.
DirectionMesh icosahedron() {
  const double p = (1.0 + std::sqrt(5.0)) / 2.0;
  DirectionMesh m;
  const double raw[12][3] = {
      {-1, p, 0}, {1, p, 0}, {-1, -p, 0}, {1, -p, 0},
      {0, -1, p}, {0, 1, p}, {0, -1, -p}, {0, 1, -p},
      {p, 0, -1}, {p, 0, 1}, {-p, 0, -1}, {-p, 0, 1}};
  for (const auto& v : raw)
    m.dirs.push_back(Eigen::Vector3d(v[0], v[1], v[2]).normalized());
  m.tris = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
            {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
            {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
            {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  return m;
}

// 1-to-4 split; new directions are normalized edge midpoints, so directions
// present at level L survive bit-identically at every finer level.
DirectionMesh subdivide(const DirectionMesh& in) {
  DirectionMesh out;
  out.dirs = in.dirs;
  std::map<std::pair<int, int>, int> midpoint;
  auto mid = [&](int a, int b) {
    const auto key = std::minmax(a, b);
    auto it = midpoint.find(key);
    if (it != midpoint.end()) return it->second;
    const int id = static_cast<int>(out.dirs.size());
    out.dirs.push_back((out.dirs[a] + out.dirs[b]).normalized());
    midpoint.emplace(key, id);
    return id;
  };
  out.tris.reserve(in.tris.size() * 4);
  for (const auto& t : in.tris) {
    const int ab = mid(t[0], t[1]), bc = mid(t[1], t[2]), ca = mid(t[2], t[0]);
    out.tris.push_back({t[0], ab, ca});
    out.tris.push_back({t[1], bc, ab});
    out.tris.push_back({t[2], ca, bc});
    out.tris.push_back({ab, bc, ca});
  }
  return out;
}

DirectionMesh direction_sphere(int level) {
  if (level < 0) throw UsageError("subdivision level must be >= 0");
  DirectionMesh m = icosahedron();
  for (int l = 0; l < level; ++l) m = subdivide(m);
  return m;
}

SurfaceMesh map_direction_mesh(const SpaceForm& sf, const RadialProfile& profile,
                               DirectionMesh dm, int level) {
  SurfaceMesh mesh;
  mesh.space_form = sf;
  mesh.radial_profile = profile;
  mesh.level = level;
  mesh.triangles = std::move(dm.tris);
  mesh.directions = std::move(dm.dirs);
  mesh.vertices.reserve(mesh.directions.size());
  const double rmax = sf.max_radius();
  for (const auto& w : mesh.directions) {
    const double rho = profile.rho(w);
    if (!(rho > 0.0))
      throw DomainError("radial profile must be positive (got " + std::to_string(rho) + ")");
    if (rho > rmax)
      throw DomainError("radial profile value " + std::to_string(rho) +
                        " exceeds the hemisphere margin " + std::to_string(rmax));
    mesh.vertices.push_back(sf.radial_chart(w, rho));
  }
  mesh.validate();
  return mesh;
}

double tet_signed_volume(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                         const Eigen::Vector3d& c, const Eigen::Vector3d& d) {
  return (b - a).cross(c - a).dot(d - a) / 6.0;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

RadialProfile RadialProfile::sphere(double r) {
  if (!(r > 0.0)) throw DomainError("sphere profile needs r > 0");
  std::ostringstream os;
  os << "sphere:" << r;
  return {os.str(), [r](const Eigen::Vector3d&) { return r; }};
}

RadialProfile RadialProfile::ellipsoid(double a, double b, double c) {
  if (!(a > 0 && b > 0 && c > 0)) throw DomainError("ellipsoid semi-axes must be positive");
  std::ostringstream os;
  os << "ellipsoid:" << a << "," << b << "," << c;
  return {os.str(), [a, b, c](const Eigen::Vector3d& w) {
            const double q = w[0] * w[0] / (a * a) + w[1] * w[1] / (b * b) + w[2] * w[2] / (c * c);
            return 1.0 / std::sqrt(q);
          }};
}

RadialProfile RadialProfile::perturbed_sphere(double r0, double amplitude, int axis) {
  if (!(r0 > 0.0)) throw DomainError("perturbed profile needs r0 > 0");
  if (axis < 1 || axis > 3) throw DomainError("perturbation axis must be 1, 2 or 3");
  if (std::abs(amplitude) >= 1.0) throw DomainError("perturbation amplitude must satisfy |a| < 1");
  std::ostringstream os;
  os << "perturbed:" << r0 << "," << amplitude << "," << axis;
  return {os.str(), [r0, amplitude, axis](const Eigen::Vector3d& w) {
            return r0 * (1.0 + amplitude * w[axis - 1]);
          }};
}

RadialProfile RadialProfile::bumpy_sphere(double r0, double amplitude, int freq) {
  if (!(r0 > 0.0)) throw DomainError("bumpy profile needs r0 > 0");
  if (std::abs(amplitude) >= 1.0) throw DomainError("bumpy amplitude must satisfy |a| < 1");
  std::ostringstream os;
  os << "bumpy:" << r0 << "," << amplitude << "," << freq;
  return {os.str(), [r0, amplitude, freq](const Eigen::Vector3d& w) {
            const double theta = std::acos(std::clamp(w[2], -1.0, 1.0));
            return r0 * (1.0 + amplitude * std::cos(freq * theta));
          }};
}

RadialProfile RadialProfile::parse(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::vector<double> args;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        args.push_back(std::stod(tok));
      } catch (const std::exception&) {
        throw DomainError("bad profile argument '" + tok + "' in '" + spec + "'");
      }
    }
  }
  if (name == "sphere" && args.size() == 1) return sphere(args[0]);
  if (name == "ellipsoid" && args.size() == 3) return ellipsoid(args[0], args[1], args[2]);
  if (name == "perturbed" && args.size() == 3)
    return perturbed_sphere(args[0], args[1], static_cast<int>(args[2]));
  if (name == "bumpy" && args.size() == 3)
    return bumpy_sphere(args[0], args[1], static_cast<int>(args[2]));
  throw DomainError("unknown radial profile spec '" + spec + "'");
}

double SurfaceMesh::max_edge_length() const {
  double h = 0.0;
  for (const auto& t : triangles)
    for (int e = 0; e < 3; ++e)
      h = std::max(h, space_form.geodesic_distance(vertices[t[e]], vertices[t[(e + 1) % 3]]));
  return h;
}

MeshScale SurfaceMesh::scale() const { return {max_edge_length(), n_vertices(), n_triangles()}; }

double SurfaceMesh::total_chordal_area() const {
  double area = 0.0;
  for (const auto& t : triangles) {
    const AmbientVector e1 = vertices[t[1]] - vertices[t[0]];
    const AmbientVector e2 = vertices[t[2]] - vertices[t[0]];
    const double g11 = space_form.bilinear(e1, e1);
    const double g12 = space_form.bilinear(e1, e2);
    const double g22 = space_form.bilinear(e2, e2);
    area += 0.5 * std::sqrt(std::max(g11 * g22 - g12 * g12, 0.0));
  }
  return area;
}

void SurfaceMesh::validate() const {
  if (triangles.empty()) throw MeshQualityError("not a closed surface: empty triangle list");
  const int nv = n_vertices();
  for (size_t ti = 0; ti < triangles.size(); ++ti)
    for (int idx : triangles[ti])
      if (idx < 0 || idx >= nv)
        throw MeshQualityError("triangle " + std::to_string(ti) + " has out-of-range vertex index");
  for (int v = 0; v < nv; ++v)
    if (!space_form.on_model(vertices[v]))
      throw MeshQualityError("vertex " + std::to_string(v) + " violates the " +
                             to_string(space_form.kind()) + " model constraint (residual " +
                             std::to_string(space_form.constraint_residual(vertices[v])) + ")");
  // Edge-manifold + closed: every directed edge once, every undirected edge twice.
  std::set<std::pair<int, int>> directed;
  for (const auto& t : triangles) {
    for (int e = 0; e < 3; ++e) {
      const int a = t[e], b = t[(e + 1) % 3];
      if (a == b) throw MeshQualityError("degenerate triangle with repeated vertex");
      if (!directed.emplace(a, b).second)
        throw MeshQualityError("non-manifold or inconsistently oriented edge (" +
                               std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }
  long n_edges = 0;
  for (const auto& e : directed) {
    if (!directed.count({e.second, e.first}))
      throw MeshQualityError("not a closed surface: boundary edge (" + std::to_string(e.first) +
                             "," + std::to_string(e.second) + ")");
    ++n_edges;
  }
  n_edges /= 2;
  const long euler = nv - n_edges + n_triangles();
  if (euler != 2)
    throw MeshQualityError("unsupported topology: Euler characteristic " + std::to_string(euler));
  // Outward orientation. Euclidean: positive signed volume. Curved models:
  // the direction-sphere triangulation must be positively oriented.
  if (space_form.kind() == ModelKind::Euclidean) {
    double vol = 0.0;
    for (const auto& t : triangles) {
      const Eigen::Vector3d a = vertices[t[0]], b = vertices[t[1]], c = vertices[t[2]];
      vol += a.cross(b).dot(c) / 6.0;
    }
    if (vol <= 0.0) throw MeshQualityError("surface is inward-oriented (signed volume <= 0)");
  } else {
    std::vector<Eigen::Vector3d> dirs = directions;
    if (dirs.empty()) {
      dirs.reserve(nv);
      for (const auto& v : vertices) {
        const Eigen::VectorXd w = space_form.direction_from_base(v);
        dirs.push_back(Eigen::Vector3d(w[0], w[1], w[2]));
      }
    }
    for (const auto& t : triangles) {
      const double det = dirs[t[0]].cross(dirs[t[1]]).dot(dirs[t[2]]);
      if (det <= 0.0)
        throw MeshQualityError("radial orientation test failed on a triangle (det = " +
                               std::to_string(det) + ")");
    }
  }
}

SurfaceMesh gen_radial_surface(const SpaceForm& sf, const RadialProfile& profile, int level) {
  if (sf.dim() != 3) throw UsageError("the mesh pipeline is fixed to n = 3");
  return map_direction_mesh(sf, profile, direction_sphere(level), level);
}

SurfaceMesh refine(const SurfaceMesh& mesh) {
  if (!mesh.radial_profile || mesh.directions.empty())
    throw UnsupportedError("cannot refine a surface without a radial profile");
  DirectionMesh dm;
  dm.dirs = mesh.directions;
  dm.tris = mesh.triangles;
  return map_direction_mesh(mesh.space_form, *mesh.radial_profile, subdivide(dm),
                            mesh.level >= 0 ? mesh.level + 1 : -1);
}

double VolumeMesh::total_volume() const {
  double vol = 0.0;
  for (const auto& t : tets)
    vol += tet_signed_volume(vertices[t[0]], vertices[t[1]], vertices[t[2]], vertices[t[3]]);
  return vol;
}

double VolumeMesh::max_edge_length() const {
  double h = 0.0;
  static const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (const auto& t : tets)
    for (const auto& p : pairs)
      h = std::max(h, (vertices[t[p[0]]] - vertices[t[p[1]]]).norm());
  return h;
}

MeshScale VolumeMesh::scale() const { return {max_edge_length(), n_vertices(), n_tets()}; }

void VolumeMesh::validate() const {
  const int nv = n_vertices();
  for (size_t ti = 0; ti < tets.size(); ++ti) {
    const auto& t = tets[ti];
    for (int idx : t)
      if (idx < 0 || idx >= nv)
        throw MeshQualityError("tet " + std::to_string(ti) + " has out-of-range vertex index");
    if (tet_signed_volume(vertices[t[0]], vertices[t[1]], vertices[t[2]], vertices[t[3]]) <= 0.0)
      throw MeshQualityError("tet " + std::to_string(ti) + " is not positively oriented");
  }
  // Interior faces shared by exactly 2 tets; boundary faces must match the
  // attached boundary surface.
  std::map<std::array<int, 3>, int> face_count;
  auto face_key = [](int a, int b, int c) {
    std::array<int, 3> k = {a, b, c};
    std::sort(k.begin(), k.end());
    return k;
  };
  static const int faces[4][3] = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
  for (const auto& t : tets)
    for (const auto& f : faces) ++face_count[face_key(t[f[0]], t[f[1]], t[f[2]])];
  std::set<std::array<int, 3>> boundary_faces;
  for (const auto& [key, cnt] : face_count) {
    if (cnt == 1)
      boundary_faces.insert(key);
    else if (cnt != 2)
      throw MeshQualityError("face shared by " + std::to_string(cnt) + " tets");
  }
  if (static_cast<int>(boundary_faces.size()) != boundary.n_triangles())
    throw MeshQualityError("boundary face count does not match the attached surface");
  for (const auto& t : boundary.triangles) {
    const auto key = face_key(boundary_to_volume[t[0]], boundary_to_volume[t[1]],
                              boundary_to_volume[t[2]]);
    if (!boundary_faces.count(key))
      throw MeshQualityError("surface triangle missing from the tet boundary");
  }
}

VolumeMesh gen_ball_volume(double radius, int level) {
  if (!(radius > 0.0)) throw DomainError("ball radius must be positive");
  const DirectionMesh dm = direction_sphere(level);
  const int shell_size = static_cast<int>(dm.dirs.size());
  const int m = 1 << level;  // radial layers; keeps tets roughly isotropic

  VolumeMesh vol;
  vol.level = level;
  vol.radius = radius;
  vol.vertices.reserve(1 + static_cast<size_t>(m) * shell_size);
  vol.vertices.push_back(Eigen::Vector3d::Zero());
  for (int j = 1; j <= m; ++j) {
    const double r = radius * j / m;
    for (const auto& w : dm.dirs) vol.vertices.push_back(r * w);
  }
  auto shell_id = [&](int j, int i) { return 1 + (j - 1) * shell_size + i; };

  auto push_tet = [&](int a, int b, int c, int d) {
    if (tet_signed_volume(vol.vertices[a], vol.vertices[b], vol.vertices[c], vol.vertices[d]) < 0)
      std::swap(c, d);
    vol.tets.push_back({a, b, c, d});
  };

  // Innermost shell cones to the center.
  for (const auto& t : dm.tris)
    push_tet(0, shell_id(1, t[0]), shell_id(1, t[1]), shell_id(1, t[2]));

  // Prisms between consecutive shells, split 3 tets each. Quad diagonals go
  // through the smallest global index of the face, which makes the choice
  // face-local and hence consistent across neighboring prisms.
  for (int j = 1; j < m; ++j) {
    for (const auto& t : dm.tris) {
      int b[3] = {shell_id(j, t[0]), shell_id(j, t[1]), shell_id(j, t[2])};
      int rot = 0;
      if (b[1] < b[0] && b[1] <= b[2]) rot = 1;
      if (b[2] < b[0] && b[2] < b[1]) rot = 2;
      const int v0 = b[rot], v1 = b[(rot + 1) % 3], v2 = b[(rot + 2) % 3];
      const int v3 = v0 + shell_size, v4 = v1 + shell_size, v5 = v2 + shell_size;
      if (std::min(v1, v5) < std::min(v2, v4)) {
        push_tet(v0, v1, v2, v5);
        push_tet(v0, v1, v5, v4);
        push_tet(v0, v4, v5, v3);
      } else {
        push_tet(v0, v1, v2, v4);
        push_tet(v0, v4, v2, v5);
        push_tet(v0, v4, v5, v3);
      }
    }
  }

  vol.boundary = gen_radial_surface(SpaceForm::euclidean(), RadialProfile::sphere(radius), level);
  vol.boundary_to_volume.resize(shell_size);
  for (int i = 0; i < shell_size; ++i) vol.boundary_to_volume[i] = shell_id(m, i);
  vol.validate();
  return vol;
}

VolumeMesh refine(const VolumeMesh& mesh) { return gen_ball_volume(mesh.radius, mesh.level + 1); }

// ---------------------------------------------------------------------------
// Text I/O

namespace {

void write_header(std::ofstream& out, const SpaceForm& sf) {
  out << "SPACEFORM " << to_string(sf.kind()) << " " << fmt17(sf.kappa()) << " " << sf.dim()
      << "\n";
  out << "BASE";
  for (int i = 0; i < sf.embed_dim(); ++i) out << " " << fmt17(sf.base_point()[i]);
  out << "\n";
}

class MeshParser {
public:
  explicit MeshParser(const std::string& path) : path_(path), in_(path) {
    if (!in_) throw IoError("cannot open mesh file '" + path + "'");
  }

  SpaceForm parse_header() {
    std::string tag;
    auto head = next_line();
    std::istringstream hs(head);
    std::string kind_tag;
    double kappa = 0.0;
    int n = 0;
    if (!(hs >> tag >> kind_tag >> kappa >> n) || tag != "SPACEFORM")
      throw ParseError("expected 'SPACEFORM <kind> <kappa> <n>'", line_);
    ModelKind kind;
    try {
      kind = model_kind_from_tag(kind_tag);
    } catch (const UsageError& e) {
      throw ParseError(e.what(), line_);
    }
    auto base_line = next_line();
    std::istringstream bs(base_line);
    if (!(bs >> tag) || tag != "BASE") throw ParseError("expected 'BASE <coords>'", line_);
    std::vector<double> coords;
    double c;
    while (bs >> c) coords.push_back(c);
    const int expect = kind == ModelKind::Euclidean ? n : n + 1;
    if (static_cast<int>(coords.size()) != expect)
      throw ParseError("base point needs " + std::to_string(expect) + " coordinates", line_);
    AmbientPoint base = Eigen::Map<Eigen::VectorXd>(coords.data(), coords.size());
    try {
      return SpaceForm::with_base(kind, kappa, base, n);
    } catch (const Error& e) {
      throw ParseError(e.what(), line_);
    }
  }

  std::vector<AmbientPoint> parse_vertices(const SpaceForm& sf) {
    const long count = parse_count("V");
    std::vector<AmbientPoint> verts;
    verts.reserve(count);
    for (long i = 0; i < count; ++i) {
      std::istringstream vs(next_line());
      AmbientPoint x(sf.embed_dim());
      for (int j = 0; j < sf.embed_dim(); ++j)
        if (!(vs >> x[j])) throw ParseError("vertex " + std::to_string(i) + ": bad coordinates", line_);
      if (!sf.on_model(x))
        throw ParseError("vertex " + std::to_string(i) + " violates the " +
                             to_string(sf.kind()) + " model constraint (residual " +
                             std::to_string(sf.constraint_residual(x)) + ")",
                         line_);
      verts.push_back(sf.project_to_model(x));
    }
    return verts;
  }

  template <size_t K>
  std::vector<std::array<int, K>> parse_cells(const char* tag, long n_vertices) {
    const long count = parse_count(tag);
    if (count == 0) throw ParseError("not a closed surface: empty cell list", line_);
    std::vector<std::array<int, K>> cells;
    cells.reserve(count);
    for (long i = 0; i < count; ++i) {
      std::istringstream cs(next_line());
      std::array<int, K> cell{};
      for (size_t j = 0; j < K; ++j) {
        if (!(cs >> cell[j])) throw ParseError("cell " + std::to_string(i) + ": bad indices", line_);
        if (cell[j] < 0 || cell[j] >= n_vertices)
          throw ParseError("cell " + std::to_string(i) + ": index out of range", line_);
      }
      cells.push_back(cell);
    }
    return cells;
  }

private:
  long parse_count(const std::string& expect_tag) {
    std::istringstream ss(next_line());
    std::string tag;
    long count = -1;
    if (!(ss >> tag >> count) || tag != expect_tag || count < 0)
      throw ParseError("expected '" + expect_tag + " <count>'", line_);
    return count;
  }

  std::string next_line() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return line;
    }
    throw ParseError("unexpected end of file", line_ + 1);
  }

  std::string path_;
  std::ifstream in_;
  long line_ = 0;
};

}  // namespace

void save_mesh(const std::string& path, const SurfaceMesh& mesh) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write mesh file '" + path + "'");
  write_header(out, mesh.space_form);
  out << "V " << mesh.n_vertices() << "\n";
  for (const auto& v : mesh.vertices) {
    for (int i = 0; i < v.size(); ++i) out << (i ? " " : "") << fmt17(v[i]);
    out << "\n";
  }
  out << "T " << mesh.n_triangles() << "\n";
  for (const auto& t : mesh.triangles) out << t[0] << " " << t[1] << " " << t[2] << "\n";
  if (!out) throw IoError("write failed on '" + path + "'");
}

void save_mesh(const std::string& path, const VolumeMesh& mesh) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write mesh file '" + path + "'");
  write_header(out, SpaceForm::euclidean());
  out << "V " << mesh.n_vertices() << "\n";
  for (const auto& v : mesh.vertices)
    out << fmt17(v[0]) << " " << fmt17(v[1]) << " " << fmt17(v[2]) << "\n";
  out << "TET " << mesh.n_tets() << "\n";
  for (const auto& t : mesh.tets)
    out << t[0] << " " << t[1] << " " << t[2] << " " << t[3] << "\n";
  if (!out) throw IoError("write failed on '" + path + "'");
}

SurfaceMesh load_surface_mesh(const std::string& path) {
  MeshParser parser(path);
  SurfaceMesh mesh;
  mesh.space_form = parser.parse_header();
  mesh.vertices = parser.parse_vertices(mesh.space_form);
  mesh.triangles = parser.parse_cells<3>("T", mesh.n_vertices());
  mesh.validate();
  return mesh;
}

VolumeMesh load_volume_mesh(const std::string& path) {
  MeshParser parser(path);
  const SpaceForm sf = parser.parse_header();
  if (sf.kind() != ModelKind::Euclidean)
    throw UnsupportedError("volume meshes are Euclidean-only");
  const auto verts = parser.parse_vertices(sf);
  const auto tets = parser.parse_cells<4>("TET", static_cast<long>(verts.size()));

  VolumeMesh vol;
  vol.vertices.reserve(verts.size());
  for (const auto& v : verts) vol.vertices.push_back(Eigen::Vector3d(v[0], v[1], v[2]));
  vol.tets = tets;

  // Reconstruct the boundary surface: faces seen exactly once, oriented outward
  // (a tet face (f0,f1,f2) with the 4th vertex behind it is already outward).
  std::map<std::array<int, 3>, std::pair<int, std::array<int, 3>>> faces;
  static const int face_idx[4][3] = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
  for (const auto& t : vol.tets) {
    for (const auto& f : face_idx) {
      std::array<int, 3> oriented = {t[f[0]], t[f[1]], t[f[2]]};
      std::array<int, 3> key = oriented;
      std::sort(key.begin(), key.end());
      auto it = faces.find(key);
      if (it == faces.end())
        faces.emplace(key, std::make_pair(1, oriented));
      else
        ++it->second.first;
    }
  }
  std::vector<int> vol_to_surf(vol.vertices.size(), -1);
  SurfaceMesh boundary;
  boundary.space_form = SpaceForm::euclidean();
  for (const auto& [key, entry] : faces) {
    if (entry.first != 2 && entry.first != 1)
      throw ParseError("tet complex has a face shared by " + std::to_string(entry.first) + " tets", 0);
    if (entry.first != 1) continue;
    std::array<int, 3> tri{};
    for (int j = 0; j < 3; ++j) {
      const int vid = entry.second[j];
      if (vol_to_surf[vid] < 0) {
        vol_to_surf[vid] = boundary.n_vertices();
        boundary.vertices.push_back(vol.vertices[vid]);
        vol.boundary_to_volume.push_back(vid);
      }
      tri[j] = vol_to_surf[vid];
    }
    boundary.triangles.push_back(tri);
  }
  vol.boundary = std::move(boundary);
  vol.boundary.validate();
  vol.validate();
  return vol;
}

bool mesh_file_is_volume(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open mesh file '" + path + "'");
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "TET") return true;
    if (tag == "T") return false;
  }
  return false;
}

}  // namespace staticineq
