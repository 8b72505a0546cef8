#include "mcvol/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

namespace mcvol {

namespace {

void check_spec(const GridSpec& spec) {
  for (int a = 0; a < 3; ++a) {
    if (spec.nodeCounts[a] < 2)
      throw std::invalid_argument("grid needs at least 2 nodes per axis");
    if (!(spec.spacing[a] > 0.0) || !std::isfinite(spec.spacing[a]))
      throw std::invalid_argument("grid spacing must be positive and finite");
  }
  if (!spec.origin.allFinite())
    throw std::invalid_argument("grid origin must be finite");
}

std::array<double, 8> cell_values(const GridSpec& spec,
                                  const std::vector<double>& values, int i,
                                  int j, int k) {
  std::array<double, 8> f;
  for (int v = 0; v < kVertexCount; ++v)
    f[v] = values[spec.nodeIndex(i + kVertexCoord[v][0], j + kVertexCoord[v][1],
                                 k + kVertexCoord[v][2])];
  return f;
}

// Identity of a grid edge: 3*nodeIndex(lower endpoint) + axis.
long long crossing_code(const GridSpec& spec, int i, int j, int k, int edge) {
  const int va = kEdgeVertex[edge][0];
  const int vb = kEdgeVertex[edge][1];
  const int ca[3] = {i + kVertexCoord[va][0], j + kVertexCoord[va][1],
                     k + kVertexCoord[va][2]};
  const int cb[3] = {i + kVertexCoord[vb][0], j + kVertexCoord[vb][1],
                     k + kVertexCoord[vb][2]};
  const int axis = ca[0] != cb[0] ? 0 : (ca[1] != cb[1] ? 1 : 2);
  const int* lower = ca[axis] < cb[axis] ? ca : cb;
  return 3 * spec.nodeIndex(lower[0], lower[1], lower[2]) + axis;
}

Point3 crossing_point(const GridSpec& spec, int i, int j, int k, int edge,
                      double t) {
  const int va = kEdgeVertex[edge][0];
  const int vb = kEdgeVertex[edge][1];
  const Point3 a = spec.nodePoint(i + kVertexCoord[va][0],
                                  j + kVertexCoord[va][1],
                                  k + kVertexCoord[va][2]);
  const Point3 b = spec.nodePoint(i + kVertexCoord[vb][0],
                                  j + kVertexCoord[vb][1],
                                  k + kVertexCoord[vb][2]);
  return a + t * (b - a);
}

}  // namespace

std::array<int, 3> GridSpec::cells() const {
  return {nodeCounts[0] - 1, nodeCounts[1] - 1, nodeCounts[2] - 1};
}

long long GridSpec::nodeTotal() const {
  return 1ll * nodeCounts[0] * nodeCounts[1] * nodeCounts[2];
}

long long GridSpec::nodeIndex(int i, int j, int k) const {
  return i + nodeCounts[0] * (j + 1ll * nodeCounts[1] * k);
}

Point3 GridSpec::nodePoint(int i, int j, int k) const {
  return origin +
         Point3{i * spacing.x(), j * spacing.y(), k * spacing.z()};
}

Box3 GridSpec::bounds() const {
  return {origin, nodePoint(nodeCounts[0] - 1, nodeCounts[1] - 1,
                            nodeCounts[2] - 1)};
}

GridSpec grid_for_mesh(const Box3& domain, int mesh) {
  if (mesh < 1) throw std::invalid_argument("mesh label must be positive");
  const int planes = mesh + 2;
  GridSpec spec;
  spec.nodeCounts = {planes, planes, planes};
  spec.origin = domain.lo;
  spec.spacing = domain.extent() / static_cast<double>(planes - 1);
  check_spec(spec);
  return spec;
}

double ImplicitField::eval(const Point3& p) const {
  switch (kind) {
    case Kind::Sphere: {
      const double r2 = (p - center).squaredNorm();
      return squaredForm ? r2 - radius * radius : std::sqrt(r2) - radius;
    }
    case Kind::Plane:
      return normal.dot(p) - offset;
    case Kind::Ellipsoid: {
      const double r2 = (p - center).cwiseQuotient(semiAxes).squaredNorm();
      return squaredForm ? r2 - 1.0 : std::sqrt(r2) - 1.0;
    }
  }
  return 0.0;
}

int ImplicitField::trackedComponent() const {
  return kind == Kind::Plane ? 1 : 0;
}

ImplicitField ImplicitField::sphere(const Point3& center, double radius,
                                    bool squaredForm) {
  ImplicitField f;
  f.kind = Kind::Sphere;
  f.center = center;
  f.radius = radius;
  f.squaredForm = squaredForm;
  return f;
}

ImplicitField ImplicitField::plane(const Point3& normal, double offset) {
  ImplicitField f;
  f.kind = Kind::Plane;
  f.normal = normal;
  f.offset = offset;
  return f;
}

ImplicitField ImplicitField::ellipsoid(const Point3& center,
                                       const Point3& semiAxes,
                                       bool squaredForm) {
  ImplicitField f;
  f.kind = Kind::Ellipsoid;
  f.center = center;
  f.semiAxes = semiAxes;
  f.squaredForm = squaredForm;
  return f;
}

std::vector<double> sample_field(const FieldSource& src,
                                 const GridSpec& spec) {
  check_spec(spec);
  if (const auto* values = std::get_if<std::vector<double>>(&src)) {
    if (static_cast<long long>(values->size()) != spec.nodeTotal())
      throw DataError("node value count " + std::to_string(values->size()) +
                      " does not match the grid (" +
                      std::to_string(spec.nodeTotal()) + " nodes)");
    for (long long idx = 0; idx < spec.nodeTotal(); ++idx) {
      if (!std::isfinite((*values)[idx])) {
        const int nx = spec.nodeCounts[0];
        const int ny = spec.nodeCounts[1];
        const long long i = idx % nx;
        const long long j = idx / nx % ny;
        const long long k = idx / nx / ny;
        throw DataError("non-finite value at node (" + std::to_string(i) +
                        ", " + std::to_string(j) + ", " + std::to_string(k) +
                        ")");
      }
    }
    return *values;
  }

  const auto& field = std::get<ImplicitField>(src);
  std::vector<double> out;
  out.reserve(spec.nodeTotal());
  for (int k = 0; k < spec.nodeCounts[2]; ++k)
    for (int j = 0; j < spec.nodeCounts[1]; ++j)
      for (int i = 0; i < spec.nodeCounts[0]; ++i) {
        const double v = field.eval(spec.nodePoint(i, j, k));
        if (!std::isfinite(v))
          throw DataError("non-finite field value at node (" +
                          std::to_string(i) + ", " + std::to_string(j) + ", " +
                          std::to_string(k) + ")");
        out.push_back(v);
      }
  return out;
}

GridMeasures measure_grid(const GridSpec& spec, const FieldSource& src,
                          double iso) {
  return measure_grid_values(spec, sample_field(src, spec), iso);
}

GridMeasures measure_grid_values(const GridSpec& spec,
                                 const std::vector<double>& nodeValues,
                                 double iso) {
  check_spec(spec);
  if (static_cast<long long>(nodeValues.size()) != spec.nodeTotal())
    throw DataError("node value count does not match the grid");

  const auto nc = spec.cells();
  const double cellVol = spec.spacing.prod();
  CompensatedSum v1, v0, area;
  CompensatedSum ni[3], fm[3];
  GridMeasures out;
  out.cellCount = 1ll * nc[0] * nc[1] * nc[2];

  for (int k = 0; k < nc[2]; ++k)
    for (int j = 0; j < nc[1]; ++j)
      for (int i = 0; i < nc[0]; ++i) {
        const auto f = cell_values(spec, nodeValues, i, j, k);
        const Config c = cell_config(f, iso);
        if (c == 0x00) {
          v0.add(cellVol);
          continue;
        }
        if (c == 0xFF) {
          v1.add(cellVol);
          continue;
        }
        const CellGeometry g{spec.nodePoint(i, j, k), spec.spacing, f, iso};
        const CellMeasures m = measure_cell(g);
        v1.add(m.volume1);
        v0.add(m.volume0);
        area.add(m.interfaceArea);
        for (int a = 0; a < 3; ++a) {
          ni[a].add(m.normalIntegral[a]);
          fm[a].add(m.firstMoment[a]);
        }
        ++out.interfaceCellCount;
      }

  out.totalVolume1 = v1.value();
  out.totalVolume0 = v0.value();
  out.totalInterfaceArea = area.value();
  out.globalNormalIntegral = {ni[0].value(), ni[1].value(), ni[2].value()};
  out.globalFirstMoment = {fm[0].value(), fm[1].value(), fm[2].value()};
  return out;
}

StudyResult convergence_study(const std::vector<int>& meshes,
                              const Box3& domain, const FieldSource& src,
                              double iso, double exactVolume,
                              double exactArea) {
  if (meshes.empty()) throw std::invalid_argument("need at least one mesh");
  const int tracked = std::holds_alternative<ImplicitField>(src)
                          ? std::get<ImplicitField>(src).trackedComponent()
                          : 1;
  StudyResult res;
  for (int m : meshes) {
    const GridMeasures gm = measure_grid(grid_for_mesh(domain, m), src, iso);
    StudyRow row;
    row.mesh = m;
    row.volume = tracked == 1 ? gm.totalVolume1 : gm.totalVolume0;
    row.volumeError = std::abs(row.volume - exactVolume);
    row.area = gm.totalInterfaceArea;
    row.areaError = std::abs(row.area - exactArea);
    res.rows.push_back(row);
  }

  for (std::size_t r = 1; r < res.rows.size(); ++r)
    if (res.rows[r].mesh != 2 * res.rows[r - 1].mesh) res.doubling = false;
  if (!res.doubling) {
    res.warning =
        "mesh labels do not double between rows; observed orders suppressed";
    return res;
  }
  for (std::size_t r = 1; r < res.rows.size(); ++r) {
    const StudyRow& prev = res.rows[r - 1];
    StudyRow& row = res.rows[r];
    if (prev.volumeError > 0.0 && row.volumeError > 0.0)
      row.volumeOrder = std::log2(prev.volumeError / row.volumeError);
    if (prev.areaError > 0.0 && row.areaError > 0.0)
      row.areaOrder = std::log2(prev.areaError / row.areaError);
  }
  return res;
}

std::string format_g17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string study_csv(const StudyResult& result) {
  std::string out =
      "mesh,volume,volume_error,area,area_error,volume_order,area_order\n";
  for (const auto& row : result.rows) {
    out += std::to_string(row.mesh);
    out += ',' + format_g17(row.volume) + ',' + format_g17(row.volumeError);
    out += ',' + format_g17(row.area) + ',' + format_g17(row.areaError);
    out += ',';
    if (row.volumeOrder) out += format_g17(*row.volumeOrder);
    out += ',';
    if (row.areaOrder) out += format_g17(*row.areaOrder);
    out += '\n';
  }
  return out;
}

namespace {

// Segments an entry induces on one cube face: interface-triangle edges whose
// two crossing nodes both sit on that face's edges. Keys are global.
struct FaceTrace {
  std::vector<std::pair<long long, long long>> segments;
  std::map<long long, Point3> points;
  int baseCaseId = 0;
};

bool edge_on_face(int edge, int face) {
  const auto& fv = kFaceVertex[face];
  auto member = [&](int v) {
    return v == fv[0] || v == fv[1] || v == fv[2] || v == fv[3];
  };
  return member(kEdgeVertex[edge][0]) && member(kEdgeVertex[edge][1]);
}

FaceTrace face_trace(const GridSpec& spec, const std::vector<double>& values,
                     double iso, int i, int j, int k, int face) {
  FaceTrace trace;
  const auto f = cell_values(spec, values, i, j, k);
  const Config c = cell_config(f, iso);
  const TableEntry& te = lookup_table().entries[c];
  trace.baseCaseId = te.baseCaseId;
  if (c == 0x00 || c == 0xFF) return trace;
  const auto params = crossing_parameters(f, iso, c);

  for (const auto& part : te.entry.parts) {
    for (const auto& tri : part.triangles) {
      if (tri.tag != TriTag::I) continue;
      for (int s = 0; s < 3; ++s) {
        const NodeRef& na = tri.nodes[s];
        const NodeRef& nb = tri.nodes[(s + 1) % 3];
        if (na.kind != NodeRef::Kind::EdgeCrossing ||
            nb.kind != NodeRef::Kind::EdgeCrossing)
          continue;
        if (!edge_on_face(na.id, face) || !edge_on_face(nb.id, face)) continue;
        const long long ka = crossing_code(spec, i, j, k, na.id);
        const long long kb = crossing_code(spec, i, j, k, nb.id);
        trace.segments.push_back({std::min(ka, kb), std::max(ka, kb)});
        trace.points.emplace(ka,
                             crossing_point(spec, i, j, k, na.id, params[na.id]));
        trace.points.emplace(kb,
                             crossing_point(spec, i, j, k, nb.id, params[nb.id]));
      }
    }
  }
  std::sort(trace.segments.begin(), trace.segments.end());
  return trace;
}

}  // namespace

FaceAgreementReport adjacent_face_agreement(const GridSpec& spec,
                                            const FieldSource& src,
                                            double iso) {
  const auto values = sample_field(src, spec);
  const auto nc = spec.cells();
  FaceAgreementReport rep;

  const Box3 box = spec.bounds();
  const double tol =
      1e-12 * std::max({1.0, box.lo.cwiseAbs().maxCoeff(),
                        box.hi.cwiseAbs().maxCoeff()});
  constexpr int highFace[3] = {1, 3, 5};  // E, N, U
  constexpr int lowFace[3] = {0, 2, 4};   // W, S, D

  for (int axis = 0; axis < 3; ++axis) {
    int step[3] = {0, 0, 0};
    step[axis] = 1;
    for (int k = 0; k < nc[2] - step[2]; ++k)
      for (int j = 0; j < nc[1] - step[1]; ++j)
        for (int i = 0; i < nc[0] - step[0]; ++i) {
          const FaceTrace a =
              face_trace(spec, values, iso, i, j, k, highFace[axis]);
          const FaceTrace b = face_trace(spec, values, iso, i + step[0],
                                         j + step[1], k + step[2],
                                         lowFace[axis]);
          ++rep.facesChecked;
          if (a.segments != b.segments) {
            rep.mismatches.push_back(
                {{i, j, k},
                 axis,
                 a.baseCaseId,
                 b.baseCaseId,
                 "segment sets differ (" +
                     std::to_string(a.segments.size()) + " vs " +
                     std::to_string(b.segments.size()) + ")"});
            continue;
          }
          for (const auto& [code, pa] : a.points) {
            const auto it = b.points.find(code);
            if (it == b.points.end()) continue;
            if ((pa - it->second).norm() > tol) {
              rep.mismatches.push_back(
                  {{i, j, k},
                   axis,
                   a.baseCaseId,
                   b.baseCaseId,
                   "crossing positions differ by " +
                       format_g17((pa - it->second).norm())});
              break;
            }
          }
        }
  }
  return rep;
}

double TriangleMesh::area() const {
  CompensatedSum sum;
  for (const auto& f : faces) {
    const Point3& a = vertices[f[0]];
    sum.add(0.5 *
            (vertices[f[1]] - a).cross(vertices[f[2]] - a).norm());
  }
  return sum.value();
}

bool TriangleMesh::closed() const {
  std::map<std::pair<int, int>, std::pair<int, int>> edges;  // count, balance
  for (const auto& f : faces) {
    for (int s = 0; s < 3; ++s) {
      const int a = f[s];
      const int b = f[(s + 1) % 3];
      if (a == b) return false;
      auto& e = edges[{std::min(a, b), std::max(a, b)}];
      ++e.first;
      e.second += a < b ? 1 : -1;
    }
  }
  for (const auto& [key, e] : edges)
    if (e.first != 2 || e.second != 0) return false;
  return true;
}

TriangleMesh extract_interface(const GridSpec& spec, const FieldSource& src,
                               double iso) {
  const auto values = sample_field(src, spec);
  const auto nc = spec.cells();
  TriangleMesh mesh;
  std::map<long long, int> vertexOf;

  for (int k = 0; k < nc[2]; ++k)
    for (int j = 0; j < nc[1]; ++j)
      for (int i = 0; i < nc[0]; ++i) {
        const auto f = cell_values(spec, values, i, j, k);
        const Config c = cell_config(f, iso);
        if (c == 0x00 || c == 0xFF) continue;
        const TableEntry& te = lookup_table().entries[c];
        const auto params = crossing_parameters(f, iso, c);
        const bool flip = te.entry.enclosedComponent == 0;
        for (const auto& part : te.entry.parts) {
          for (const auto& tri : part.triangles) {
            if (tri.tag != TriTag::I) continue;
            std::array<int, 3> idx{};
            for (int s = 0; s < 3; ++s) {
              const int edge = tri.nodes[s].id;
              const long long code = crossing_code(spec, i, j, k, edge);
              const auto it = vertexOf.find(code);
              if (it != vertexOf.end()) {
                idx[s] = it->second;
              } else {
                idx[s] = static_cast<int>(mesh.vertices.size());
                vertexOf.emplace(code, idx[s]);
                mesh.vertices.push_back(
                    crossing_point(spec, i, j, k, edge, params[edge]));
              }
            }
            if (flip) std::swap(idx[1], idx[2]);
            mesh.faces.push_back(idx);
          }
        }
      }
  return mesh;
}

}  // namespace mcvol
