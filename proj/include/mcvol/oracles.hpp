#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mcvol/cell_measure.hpp"
#include "mcvol/geometry.hpp"

namespace mcvol {

struct OracleResult {
  double value = 0.0;
  double standardError = 0.0;  // 0 for exact oracles
  long long sampleCount = 0;
};

// Seedable stream with a fixed mapping from raw engine words to doubles, so
// one seed yields one sample sequence on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform01(); }
  Point3 pointIn(const Box3& box);
  Point3 unitVector();

 private:
  std::mt19937_64 gen_;
};

// Fraction of uniform box samples inside the closed triangle surface, by ray
// parity. Directions are re-drawn on grazing or near-edge hits; throws
// std::runtime_error when a sample stays unresolved after 32 directions
// (symptom of a non-watertight surface).
OracleResult mc_point_in_mesh_volume(
    const std::vector<RealizedTriangle>& surface, const Box3& box,
    long long samples, std::uint64_t seed);

struct PlaneClipResult {
  double volume = 0.0;
  double crossSectionArea = 0.0;
  int sectionVertexCount = 0;
};

// Exact measures of {x : n.x >= d} clipped to the box.
PlaneClipResult plane_clip_box(const Point3& normal, double offset,
                               const Box3& box);
OracleResult plane_clip_box_volume(const Point3& normal, double offset,
                                   const Box3& box);

// Volume of the right tetrahedron cut from a cell corner by crossings at
// fractions (ta, tb, tc) along the three incident edges.
double corner_tetra_volume(double ta, double tb, double tc,
                           const Point3& spacing);

}  // namespace mcvol
