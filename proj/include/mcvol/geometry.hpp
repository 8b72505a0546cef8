#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cmath>

namespace mcvol {

using Point3 = Eigen::Vector3d;

struct Box3 {
  Point3 lo{0.0, 0.0, 0.0};
  Point3 hi{1.0, 1.0, 1.0};

  Point3 extent() const { return hi - lo; }
  double volume() const { return extent().prod(); }
  Point3 diag() const { return extent(); }
};

struct TriangleMeasures {
  double volumeContribution = 0.0;
  double area = 0.0;
  Point3 normalIntegral = Point3::Zero();
  Point3 firstMoment = Point3::Zero();
};

// Surface integrals of 1/3 div(x), 1, n, and x over one triangle.
// One-point centroid quadrature; exact because the integrands are affine.
template <class DA, class DB, class DC>
TriangleMeasures triangle_measures(const Eigen::MatrixBase<DA>& p0,
                                   const Eigen::MatrixBase<DB>& p1,
                                   const Eigen::MatrixBase<DC>& p2) {
  const Point3 a = p0;
  const Point3 b = p1;
  const Point3 c = p2;
  TriangleMeasures m;
  m.volumeContribution = a.dot(b.cross(c)) / 6.0;
  m.normalIntegral = 0.5 * (b - a).cross(c - a);
  m.area = m.normalIntegral.norm();
  m.firstMoment = m.area / 3.0 * (a + b + c);
  return m;
}

// Neumaier compensated accumulator; deterministic for a fixed add order.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  void add(const CompensatedSum& other) {
    add(other.sum_);
    add(other.comp_);
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace mcvol
