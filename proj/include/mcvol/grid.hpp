#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "mcvol/cell_measure.hpp"
#include "mcvol/geometry.hpp"

namespace mcvol {

// Malformed external data (files, field samples); the CLI maps this to its
// data-error exit code.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  std::array<int, 3> nodeCounts{2, 2, 2};
  Point3 origin = Point3::Zero();
  Point3 spacing = Point3::Ones();

  std::array<int, 3> cells() const;
  long long nodeTotal() const;
  long long nodeIndex(int i, int j, int k) const;  // x fastest
  Point3 nodePoint(int i, int j, int k) const;
  Box3 bounds() const;
};

// Study convention: mesh label m places m node planes per axis strictly
// between the domain faces, i.e. m+2 node planes and m+1 cells.
GridSpec grid_for_mesh(const Box3& domain, int mesh);

struct ImplicitField {
  enum class Kind { Sphere, Plane, Ellipsoid };
  Kind kind = Kind::Sphere;
  Point3 center = Point3::Zero();
  double radius = 1.0;
  Point3 semiAxes = Point3::Ones();
  Point3 normal = Point3::UnitZ();
  double offset = 0.0;
  bool squaredForm = false;  // r^2 form instead of the distance form

  double eval(const Point3& p) const;
  // Component holding the bounded region at iso 0: 0 for sphere and
  // ellipsoid (inside is F < 0), 1 for plane.
  int trackedComponent() const;

  static ImplicitField sphere(const Point3& center, double radius,
                              bool squaredForm = false);
  static ImplicitField plane(const Point3& normal, double offset);
  static ImplicitField ellipsoid(const Point3& center, const Point3& semiAxes,
                                 bool squaredForm = false);
};

// Either node values (sized to the grid, x fastest) or an implicit field.
using FieldSource = std::variant<std::vector<double>, ImplicitField>;

// Throws DataError on a size mismatch or a non-finite value, naming the node.
std::vector<double> sample_field(const FieldSource& src, const GridSpec& spec);

struct GridMeasures {
  double totalVolume1 = 0.0;
  double totalVolume0 = 0.0;
  double totalInterfaceArea = 0.0;
  Point3 globalNormalIntegral = Point3::Zero();
  Point3 globalFirstMoment = Point3::Zero();
  long long cellCount = 0;
  long long interfaceCellCount = 0;
};

GridMeasures measure_grid(const GridSpec& spec, const FieldSource& src,
                          double iso);
GridMeasures measure_grid_values(const GridSpec& spec,
                                 const std::vector<double>& nodeValues,
                                 double iso);

struct StudyRow {
  int mesh = 0;
  double volume = 0.0;
  double volumeError = 0.0;
  double area = 0.0;
  double areaError = 0.0;
  std::optional<double> volumeOrder;  // vs the previous row
  std::optional<double> areaOrder;
};

struct StudyResult {
  std::vector<StudyRow> rows;
  bool doubling = true;
  std::string warning;  // set when orders are suppressed
};

// Volume column follows the field's bounded component (implicit sources) or
// component 1 (node-value sources).
StudyResult convergence_study(const std::vector<int>& meshes,
                              const Box3& domain, const FieldSource& src,
                              double iso, double exactVolume,
                              double exactArea);

std::string study_csv(const StudyResult& result);

// printf %.17g formatting used for all numeric CLI/CSV output
std::string format_g17(double value);

struct FaceMismatch {
  std::array<int, 3> cell;  // lower cell of the pair
  int axis = 0;
  int caseA = 0;
  int caseB = 0;
  std::string detail;
};

struct FaceAgreementReport {
  long long facesChecked = 0;
  std::vector<FaceMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Checks that both cells incident to every interior face induce the same
// crossing segments on it.
FaceAgreementReport adjacent_face_agreement(const GridSpec& spec,
                                            const FieldSource& src,
                                            double iso);

struct TriangleMesh {
  std::vector<Point3> vertices;
  std::vector<std::array<int, 3>> faces;  // 0-based

  double area() const;
  bool closed() const;
};

// Welded interface triangulation across the grid, wound out of component 1.
TriangleMesh extract_interface(const GridSpec& spec, const FieldSource& src,
                               double iso);

}  // namespace mcvol
