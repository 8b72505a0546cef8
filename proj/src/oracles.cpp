#include "mcvol/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mcvol/cube_topology.hpp"

namespace mcvol {

namespace {

struct TriData {
  Point3 a, e1, e2;
  double scale;  // |e1||e2|, reference for the determinant threshold
};

using Poly = std::vector<Point3>;

Poly clip_keep_halfspace(const Poly& poly, const Point3& n, double d) {
  Poly out;
  const std::size_t m = poly.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Point3& a = poly[i];
    const Point3& b = poly[(i + 1) % m];
    const double fa = n.dot(a) - d;
    const double fb = n.dot(b) - d;
    if (fa >= 0.0) out.push_back(a);
    if ((fa >= 0.0) != (fb >= 0.0)) out.push_back(a + fa / (fa - fb) * (b - a));
  }
  return out;
}

double fan_volume(const Poly& p) {
  double s = 0.0;
  for (std::size_t k = 1; k + 1 < p.size(); ++k)
    s += p[0].dot(p[k].cross(p[k + 1])) / 6.0;
  return s;
}

Point3 fan_normal_integral(const Poly& p) {
  Point3 s = Point3::Zero();
  for (std::size_t k = 1; k + 1 < p.size(); ++k)
    s += 0.5 * (p[k] - p[0]).cross(p[k + 1] - p[0]);
  return s;
}

}  // namespace

Point3 Rng::pointIn(const Box3& box) {
  const double x = box.lo.x() + (box.hi.x() - box.lo.x()) * uniform01();
  const double y = box.lo.y() + (box.hi.y() - box.lo.y()) * uniform01();
  const double z = box.lo.z() + (box.hi.z() - box.lo.z()) * uniform01();
  return {x, y, z};
}

Point3 Rng::unitVector() {
  for (;;) {
    const double x = uniform(-1.0, 1.0);
    const double y = uniform(-1.0, 1.0);
    const double z = uniform(-1.0, 1.0);
    const double n2 = x * x + y * y + z * z;
    if (n2 > 1e-4 && n2 <= 1.0) {
      const double inv = 1.0 / std::sqrt(n2);
      return {x * inv, y * inv, z * inv};
    }
  }
}

OracleResult mc_point_in_mesh_volume(
    const std::vector<RealizedTriangle>& surface, const Box3& box,
    long long samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  OracleResult res;
  res.sampleCount = samples;
  const double boxVol = box.volume();
  if (surface.empty()) return res;

  std::vector<TriData> tris;
  tris.reserve(surface.size());
  for (const auto& t : surface) {
    TriData td{t.p0, t.p1 - t.p0, t.p2 - t.p0, 0.0};
    td.scale = td.e1.norm() * td.e2.norm();
    tris.push_back(td);
  }

  Rng rng(seed);
  const double tEps = 1e-12 * box.extent().norm();
  constexpr double kBaryEps = 1e-10;
  long long inside = 0;

  for (long long s = 0; s < samples; ++s) {
    const Point3 q = rng.pointIn(box);
    bool resolved = false;
    for (int attempt = 0; attempt < 32 && !resolved; ++attempt) {
      const Point3 d = rng.unitVector();
      int crossings = 0;
      bool stable = true;
      for (const auto& tri : tris) {
        const Point3 pvec = d.cross(tri.e2);
        const double det = tri.e1.dot(pvec);
        const Point3 tvec = q - tri.a;
        if (std::abs(det) <= 1e-12 * tri.scale) {
          // ray parallel to (or triangle degenerate in) this plane; only a
          // grazing contact is a problem
          const Point3 n = tri.e1.cross(tri.e2);
          const double nn = n.norm();
          if (nn > 0.0 && std::abs(n.dot(tvec)) < tEps * nn) {
            stable = false;
            break;
          }
          continue;
        }
        const double inv = 1.0 / det;
        const double u = tvec.dot(pvec) * inv;
        const Point3 qvec = tvec.cross(tri.e1);
        const double v = d.dot(qvec) * inv;
        const double t = tri.e2.dot(qvec) * inv;
        const double m = std::min({u, v, 1.0 - u - v});
        if (t > tEps) {
          if (m > kBaryEps) {
            ++crossings;
          } else if (m > -kBaryEps) {
            stable = false;  // hit too close to a triangle edge
            break;
          }
        } else if (std::abs(t) <= tEps && m > -kBaryEps) {
          stable = false;  // sample sits on the surface
          break;
        }
      }
      if (stable) {
        inside += crossings & 1;
        resolved = true;
      }
    }
    if (!resolved)
      throw std::runtime_error(
          "ray parity unresolved after 32 directions; "
          "surface is likely not watertight");
  }

  const double p =
      static_cast<double>(inside) / static_cast<double>(samples);
  res.value = p * boxVol;
  res.standardError =
      boxVol * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  return res;
}

PlaneClipResult plane_clip_box(const Point3& normal, double offset,
                               const Box3& box) {
  const double nn = normal.norm();
  if (!(nn > 0.0) || !normal.allFinite() || !std::isfinite(offset))
    throw std::invalid_argument("plane normal must be finite and nonzero");

  auto corner = [&](int v) {
    return Point3{kVertexCoord[v][0] ? box.hi.x() : box.lo.x(),
                  kVertexCoord[v][1] ? box.hi.y() : box.lo.y(),
                  kVertexCoord[v][2] ? box.hi.z() : box.lo.z()};
  };

  // box faces with outward winding
  constexpr int quads[6][4] = {{0, 4, 7, 3}, {1, 2, 6, 5}, {0, 1, 5, 4},
                               {3, 7, 6, 2}, {0, 3, 2, 1}, {4, 5, 6, 7}};
  double vol = 0.0;
  for (const auto& q : quads) {
    const Poly face{corner(q[0]), corner(q[1]), corner(q[2]), corner(q[3])};
    vol += fan_volume(clip_keep_halfspace(face, normal, offset));
  }

  // cap polygon where the plane crosses the box edges
  Poly cap;
  const double dedupeTol = 1e-12 * box.extent().norm();
  for (int e = 0; e < kEdgeCount; ++e) {
    const Point3 a = corner(kEdgeVertex[e][0]);
    const Point3 b = corner(kEdgeVertex[e][1]);
    const double fa = normal.dot(a) - offset;
    const double fb = normal.dot(b) - offset;
    if ((fa >= 0.0) == (fb >= 0.0)) continue;
    const Point3 p = a + fa / (fa - fb) * (b - a);
    bool duplicate = false;
    for (const auto& existing : cap)
      if ((existing - p).norm() <= dedupeTol) duplicate = true;
    if (!duplicate) cap.push_back(p);
  }

  PlaneClipResult res;
  res.sectionVertexCount = static_cast<int>(cap.size());
  if (cap.size() >= 3) {
    Point3 centroid = Point3::Zero();
    for (const auto& p : cap) centroid += p;
    centroid /= static_cast<double>(cap.size());
    const Point3 nh = normal / nn;
    const Point3 u = nh.unitOrthogonal();
    const Point3 v = nh.cross(u);
    std::sort(cap.begin(), cap.end(), [&](const Point3& p, const Point3& q) {
      const Point3 dp = p - centroid;
      const Point3 dq = q - centroid;
      return std::atan2(v.dot(dp), u.dot(dp)) <
             std::atan2(v.dot(dq), u.dot(dq));
    });
    // sorted counterclockwise about +n; the kept region lies on the +n side,
    // so its outward cap normal is -n
    std::reverse(cap.begin(), cap.end());
    vol += fan_volume(cap);
    res.crossSectionArea = fan_normal_integral(cap).norm();
  }
  res.volume = vol;
  return res;
}

OracleResult plane_clip_box_volume(const Point3& normal, double offset,
                                   const Box3& box) {
  return {plane_clip_box(normal, offset, box).volume, 0.0, 0};
}

double corner_tetra_volume(double ta, double tb, double tc,
                           const Point3& spacing) {
  return (ta * spacing.x()) * (tb * spacing.y()) * (tc * spacing.z()) / 6.0;
}

}  // namespace mcvol
