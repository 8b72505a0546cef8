#include "mcvol/cell_measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mcvol {

namespace {

Point3 local_corner(int v, const Point3& extent) {
  return {kVertexCoord[v][0] * extent.x(), kVertexCoord[v][1] * extent.y(),
          kVertexCoord[v][2] * extent.z()};
}

Point3 local_node(const NodeRef& n, const std::array<double, 12>& params,
                  const Point3& extent) {
  if (n.kind == NodeRef::Kind::Vertex) return local_corner(n.id, extent);
  const Point3 a = local_corner(kEdgeVertex[n.id][0], extent);
  const Point3 b = local_corner(kEdgeVertex[n.id][1], extent);
  return a + params[n.id] * (b - a);
}

void check_finite(const CellGeometry& g) {
  for (double v : g.values)
    if (!std::isfinite(v))
      throw std::invalid_argument("non-finite corner value");
  if (!std::isfinite(g.iso)) throw std::invalid_argument("non-finite isolevel");
}

}  // namespace

Config cell_config(const std::array<double, 8>& values, double iso) {
  int c = 0;
  for (int i = 0; i < 8; ++i)
    if (values[i] >= iso) c |= 1 << i;
  return static_cast<Config>(c);
}

double crossing_parameter(double fa, double fb, double iso, bool* degenerate) {
  if (degenerate) *degenerate = false;
  const double den = fb - fa;
  if (den == 0.0 || !std::isfinite(den)) {
    if (degenerate) *degenerate = true;
    return 0.5;
  }
  return std::clamp((iso - fa) / den, 0.0, 1.0);
}

Point3 interpolate_edge_point(const Point3& a, const Point3& b, double fa,
                              double fb, double iso, bool* degenerate) {
  return a + crossing_parameter(fa, fb, iso, degenerate) * (b - a);
}

std::array<double, 12> crossing_parameters(const std::array<double, 8>& values,
                                           double iso, Config c,
                                           bool* degenerate) {
  std::array<double, 12> t;
  t.fill(0.5);
  bool anyDegenerate = false;
  for (int e = 0; e < kEdgeCount; ++e) {
    const int a = kEdgeVertex[e][0];
    const int b = kEdgeVertex[e][1];
    if ((c >> a & 1) == (c >> b & 1)) continue;
    bool deg = false;
    t[e] = crossing_parameter(values[a], values[b], iso, &deg);
    anyDegenerate |= deg;
  }
  if (degenerate) *degenerate = anyDegenerate;
  return t;
}

Point3 CellGeometry::corner(int v) const {
  return minCorner + local_corner(v, extent);
}

CellMeasures measure_config(Config c, const std::array<double, 12>& params,
                            const Point3& minCorner, const Point3& extent) {
  CellMeasures out;
  out.config = c;
  const double boxVol = extent.prod();
  const TableEntry& te = lookup_table().entries[c];
  out.baseCaseId = te.baseCaseId;
  const int enclosed = te.entry.enclosedComponent;
  if (enclosed < 0) {
    (c == 0xFF ? out.volume1 : out.volume0) = boxVol;
    return out;
  }

  double measured = 0.0;
  for (const auto& part : te.entry.parts) {
    PartMeasures pm;
    for (const auto& tri : part.triangles) {
      const Point3 p0 = local_node(tri.nodes[0], params, extent);
      const Point3 p1 = local_node(tri.nodes[1], params, extent);
      const Point3 p2 = local_node(tri.nodes[2], params, extent);
      const TriangleMeasures tm = triangle_measures(p0, p1, p2);
      pm.volume += tm.volumeContribution;
      if (tri.tag == TriTag::I) {
        pm.area += tm.area;
        pm.normalIntegral += tm.normalIntegral;
        pm.firstMoment += tm.firstMoment;
        ++pm.triangleCount;
      }
    }
    pm.firstMoment += pm.area * minCorner;
    if (enclosed == 0) pm.normalIntegral = -pm.normalIntegral;
    measured += pm.volume;
    out.interfaceArea += pm.area;
    out.normalIntegral += pm.normalIntegral;
    out.firstMoment += pm.firstMoment;
    out.parts.push_back(std::move(pm));
  }

  if (enclosed == 1) {
    out.volume1 = measured;
    out.volume0 = boxVol - measured;
  } else {
    out.volume0 = measured;
    out.volume1 = boxVol - measured;
  }
  if (out.interfaceArea > 0.0) {
    out.centroid = out.firstMoment / out.interfaceArea;
    out.centroidDefined = true;
  }
  return out;
}

std::vector<RealizedTriangle> realize_config_surface(
    Config c, const std::array<double, 12>& params, const Point3& minCorner,
    const Point3& extent) {
  std::vector<RealizedTriangle> out;
  const TableEntry& te = lookup_table().entries[c];
  for (const auto& part : te.entry.parts) {
    for (const auto& tri : part.triangles) {
      out.push_back({minCorner + local_node(tri.nodes[0], params, extent),
                     minCorner + local_node(tri.nodes[1], params, extent),
                     minCorner + local_node(tri.nodes[2], params, extent),
                     tri.tag});
    }
  }
  return out;
}

std::vector<RealizedTriangle> realize_config_interface(
    Config c, const std::array<double, 12>& params, const Point3& minCorner,
    const Point3& extent) {
  std::vector<RealizedTriangle> out;
  const TableEntry& te = lookup_table().entries[c];
  const bool flip = te.entry.enclosedComponent == 0;
  for (const auto& part : te.entry.parts) {
    for (const auto& tri : part.triangles) {
      if (tri.tag != TriTag::I) continue;
      RealizedTriangle rt{minCorner + local_node(tri.nodes[0], params, extent),
                          minCorner + local_node(tri.nodes[1], params, extent),
                          minCorner + local_node(tri.nodes[2], params, extent),
                          TriTag::I};
      if (flip) std::swap(rt.p1, rt.p2);
      out.push_back(rt);
    }
  }
  return out;
}

CellMeasures measure_cell(const CellGeometry& g) {
  check_finite(g);
  const Config c = cell_config(g.values, g.iso);
  bool degenerate = false;
  const auto t = crossing_parameters(g.values, g.iso, c, &degenerate);
  CellMeasures out = measure_config(c, t, g.minCorner, g.extent);
  out.degenerateCrossing = degenerate;
  return out;
}

std::vector<RealizedTriangle> realize_surface(const CellGeometry& g) {
  check_finite(g);
  const Config c = cell_config(g.values, g.iso);
  const auto t = crossing_parameters(g.values, g.iso, c);
  return realize_config_surface(c, t, g.minCorner, g.extent);
}

std::vector<RealizedTriangle> realize_interface(const CellGeometry& g) {
  check_finite(g);
  const Config c = cell_config(g.values, g.iso);
  const auto t = crossing_parameters(g.values, g.iso, c);
  return realize_config_interface(c, t, g.minCorner, g.extent);
}

}  // namespace mcvol
