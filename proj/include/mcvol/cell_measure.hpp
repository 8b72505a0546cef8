#pragma once

#include <array>
#include <vector>

#include "mcvol/case_tables.hpp"
#include "mcvol/geometry.hpp"

namespace mcvol {

// Corner classification: component 1 iff F >= iso.
Config cell_config(const std::array<double, 8>& values, double iso);

// t = (iso - fa) / (fb - fa), clamped to [0,1]. Equal endpoint values can
// never straddle under the >= rule; the guard returns 0.5 and raises
// *degenerate.
double crossing_parameter(double fa, double fb, double iso,
                          bool* degenerate = nullptr);

Point3 interpolate_edge_point(const Point3& a, const Point3& b, double fa,
                              double fb, double iso,
                              bool* degenerate = nullptr);

// Crossing parameters for every straddling edge of c; non-straddling edges
// get 0.5 and are never realized.
std::array<double, 12> crossing_parameters(const std::array<double, 8>& values,
                                           double iso, Config c,
                                           bool* degenerate = nullptr);

struct CellGeometry {
  Point3 minCorner = Point3::Zero();
  Point3 extent = Point3::Ones();
  std::array<double, 8> values{};
  double iso = 0.0;

  Point3 corner(int v) const;
  double volume() const { return extent.prod(); }
};

struct PartMeasures {
  double volume = 0.0;  // surface-integral volume of this closed part
  double area = 0.0;
  Point3 normalIntegral = Point3::Zero();
  Point3 firstMoment = Point3::Zero();
  int triangleCount = 0;  // interface triangles only
};

struct CellMeasures {
  double volume1 = 0.0;
  double volume0 = 0.0;
  double interfaceArea = 0.0;
  // Integral of the unit normal over the interface, oriented out of
  // component 1.
  Point3 normalIntegral = Point3::Zero();
  // Unnormalized integral of position over the interface.
  Point3 firstMoment = Point3::Zero();
  Point3 centroid = Point3::Zero();
  bool centroidDefined = false;
  bool degenerateCrossing = false;
  Config config = 0;
  int baseCaseId = 0;
  std::vector<PartMeasures> parts;
};

// Parameter-driven kernel over one axis-aligned cell. Volumes are evaluated
// in cell-local coordinates, so they do not depend on minCorner.
CellMeasures measure_config(Config c, const std::array<double, 12>& params,
                            const Point3& minCorner, const Point3& extent);

struct RealizedTriangle {
  Point3 p0, p1, p2;
  TriTag tag = TriTag::I;
};

// Every triangle of the entry (interface plus cube-face closure), stored
// winding: outward from the enclosed component.
std::vector<RealizedTriangle> realize_config_surface(
    Config c, const std::array<double, 12>& params, const Point3& minCorner,
    const Point3& extent);

// Interface triangles only, wound so normals point out of component 1.
std::vector<RealizedTriangle> realize_config_interface(
    Config c, const std::array<double, 12>& params, const Point3& minCorner,
    const Point3& extent);

// Field-driven wrappers; throw std::invalid_argument on non-finite scalars.
CellMeasures measure_cell(const CellGeometry& g);
std::vector<RealizedTriangle> realize_surface(const CellGeometry& g);
std::vector<RealizedTriangle> realize_interface(const CellGeometry& g);

}  // namespace mcvol
