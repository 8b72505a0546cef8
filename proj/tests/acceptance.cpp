// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Kept free of the unit-test framework so the output reads as a
// plain checklist.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "mcvol/case_tables.hpp"
#include "mcvol/cell_measure.hpp"
#include "mcvol/grid.hpp"
#include "mcvol/oracles.hpp"

using namespace mcvol;

namespace {

int passCount = 0;
int totalCount = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
  ++totalCount;
  passCount += ok;
  std::printf("%s %s (%s)\n", ok ? "PASS" : "FAIL", name.c_str(),
              detail.c_str());
  std::fflush(stdout);
}

struct Reference {
  int mesh;
  double volume, area;
};

// Frozen values for the unit-sphere study on [0,3]^3.
constexpr double kExactVolume = 4.18879020479;
constexpr double kExactArea = 12.5663706144;
const std::vector<Reference> kReference{
    {10, 4.00416024, 12.27248842},
    {20, 4.13823907, 12.48614607},
    {40, 4.17534124, 12.54510172},
    {80, 4.18536131, 12.56094478},
};

const Box3 kDomain{{0, 0, 0}, {3, 3, 3}};

StudyResult run_reference_study(double* seconds) {
  const auto t0 = std::chrono::steady_clock::now();
  StudyResult res = convergence_study(
      {10, 20, 40, 80}, kDomain, ImplicitField::sphere({1.5, 1.5, 1.5}, 1.0),
      0.0, kExactVolume, kExactArea);
  *seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return res;
}

void criterion_reference_values(const StudyResult& study, double seconds) {
  bool ok = study.rows.size() == kReference.size();
  double worst = 0.0;
  for (std::size_t r = 0; ok && r < kReference.size(); ++r) {
    const StudyRow& row = study.rows[r];
    const Reference& ref = kReference[r];
    ok = ok && row.mesh == ref.mesh;
    const double dv = std::abs(row.volume - ref.volume);
    const double da = std::abs(row.area - ref.area);
    worst = std::max({worst, dv, da});
    ok = ok && dv <= 1e-3 && da <= 1e-3;

    const double refVolErr = std::abs(ref.volume - kExactVolume);
    const double refAreaErr = std::abs(ref.area - kExactArea);
    ok = ok && std::abs(row.volumeError - refVolErr) <= 0.02 * refVolErr;
    ok = ok && std::abs(row.areaError - refAreaErr) <= 0.02 * refAreaErr;
  }
  ok = ok && seconds < 10.0;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "max value deviation %.3g, stretch 1e-6 %s, runtime %.2fs",
                worst, worst <= 1e-6 ? "met" : "missed", seconds);
  report("reference-study-values", ok, detail);
}

void criterion_reference_orders(const StudyResult& study) {
  bool ok = study.rows.size() == 4;
  std::string seen;
  for (std::size_t r = 2; ok && r < 4; ++r) {
    const StudyRow& row = study.rows[r];
    ok = row.volumeOrder && row.areaOrder;
    if (ok) {
      ok = *row.volumeOrder >= 1.7 && *row.volumeOrder <= 2.3 &&
           *row.areaOrder >= 1.7 && *row.areaOrder <= 2.3;
      seen += (seen.empty() ? "" : ", ") + format_g17(*row.volumeOrder) +
              " / " + format_g17(*row.areaOrder);
    }
  }
  report("reference-study-orders", ok, "volume/area orders: " + seen);
}

void criterion_planar_exactness() {
  Rng rng(401);
  const GridSpec spec = grid_for_mesh(kDomain, 10);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Point3 n = rng.unitVector();
    const Point3 through{rng.uniform(0.75, 2.25), rng.uniform(0.75, 2.25),
                         rng.uniform(0.75, 2.25)};
    const double d = n.dot(through);
    const GridMeasures gm =
        measure_grid(spec, ImplicitField::plane(n, d), 0.0);
    const PlaneClipResult clip = plane_clip_box(n, d, kDomain);
    worst = std::max(worst, std::abs(gm.totalVolume1 - clip.volume) /
                                clip.volume);
    worst = std::max(worst,
                     std::abs(gm.totalInterfaceArea - clip.crossSectionArea) /
                         clip.crossSectionArea);
  }
  report("planar-exactness", worst <= 1e-12,
         "100 planes, worst relative deviation " + format_g17(worst));
}

void criterion_watertight_translation() {
  Rng rng(402);
  bool closed = true;
  std::string firstBad;
  for (int c = 0; c < 256 && closed; ++c) {
    const CaseEntry& entry = lookup_table().entries[c].entry;
    for (int draw = 0; draw < 100 && closed; ++draw) {
      std::array<double, 12> t{};
      for (auto& x : t) x = rng.uniform(0.01, 0.99);
      const WatertightReport rep = validate_watertight(entry, t);
      if (!rep.ok()) {
        closed = false;
        firstBad = "config " + std::to_string(c) + ": " +
                   rep.violations[0].detail;
      }
    }
  }

  double worstShift = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Config c = static_cast<Config>(rng.uniform(0.0, 255.999));
    std::array<double, 12> t{};
    for (auto& x : t) x = rng.uniform(0.01, 0.99);
    const Point3 shift{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                       rng.uniform(-2.0, 2.0)};
    const CellMeasures a = measure_config(c, t, Point3::Zero(), Point3::Ones());
    const CellMeasures b = measure_config(c, t, shift, Point3::Ones());
    worstShift = std::max(worstShift, std::abs(a.volume1 - b.volume1));
  }
  const bool ok = closed && worstShift <= 1e-12;
  report("watertight-translation", ok,
         closed ? "25600 closure draws clean, max translation drift " +
                      format_g17(worstShift)
                : firstBad);
}

void criterion_oracle_agreement() {
  Rng rng(403);
  const Box3 unit{Point3::Zero(), Point3::Ones()};
  double worstZ = 0.0;
  int failures = 0;
  for (int c = 0; c < 256; ++c) {
    std::array<double, 12> t{};
    for (auto& x : t) x = rng.uniform(0.05, 0.95);
    const CellMeasures m = measure_config(static_cast<Config>(c), t,
                                          Point3::Zero(), Point3::Ones());
    const int enc = lookup_table().entries[c].entry.enclosedComponent;
    const double want = enc == 1 ? m.volume1 : enc == 0 ? m.volume0 : 0.0;
    const auto surf = realize_config_surface(static_cast<Config>(c), t,
                                             Point3::Zero(), Point3::Ones());
    const OracleResult mc =
        mc_point_in_mesh_volume(surf, unit, 1000000, 90000 + c);
    const double tolerance = 4.0 * mc.standardError;
    const double diff = std::abs(mc.value - want);
    if (mc.standardError > 0.0)
      worstZ = std::max(worstZ, diff / mc.standardError);
    if (diff > tolerance && !(tolerance == 0.0 && diff == 0.0)) ++failures;
  }

  double worstTetra = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    std::array<double, 12> t{};
    for (auto& x : t) x = rng.uniform(0.05, 0.95);
    const CellMeasures m =
        measure_config(0x01, t, Point3::Zero(), Point3::Ones());
    const double exact =
        corner_tetra_volume(t[0], 1.0 - t[3], t[8], Point3::Ones());
    worstTetra = std::max(worstTetra, std::abs(m.volume1 - exact));
  }

  const bool ok = failures == 0 && worstTetra <= 1e-15;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "256 configs at 1e6 samples, worst z %.2f, %d beyond 4 SE; "
                "tetra diff %.3g",
                worstZ, failures, worstTetra);
  report("oracle-agreement", ok, detail);
}

void criterion_face_consistency() {
  Rng rng(404);
  GridSpec rough;
  rough.nodeCounts = {6, 6, 6};
  long long checked = 0;
  std::size_t mismatches = 0;
  for (int seed = 0; seed < 50; ++seed) {
    std::vector<double> values(rough.nodeTotal());
    for (auto& v : values) v = rng.uniform01() < 0.5 ? -1.0 : 1.0;
    const FaceAgreementReport rep =
        adjacent_face_agreement(rough, values, 0.0);
    checked += rep.facesChecked;
    mismatches += rep.mismatches.size();
  }
  const FaceAgreementReport sphere = adjacent_face_agreement(
      grid_for_mesh(kDomain, 10), ImplicitField::sphere({1.5, 1.5, 1.5}, 1.0),
      0.0);
  checked += sphere.facesChecked;
  mismatches += sphere.mismatches.size();
  report("face-consistency", mismatches == 0,
         std::to_string(checked) + " interior faces, " +
             std::to_string(mismatches) + " mismatches");
}

void criterion_closure_partition() {
  bool ok = true;
  double worstNormal = 0.0, worstPartition = 0.0;
  for (int mesh : {10, 20, 40, 80}) {
    const GridMeasures gm =
        measure_grid(grid_for_mesh(kDomain, mesh),
                     ImplicitField::sphere({1.5, 1.5, 1.5}, 1.0), 0.0);
    const double normal = gm.globalNormalIntegral.norm();
    const double partition = std::abs(gm.totalVolume1 + gm.totalVolume0 - 27.0);
    worstNormal = std::max(worstNormal, normal / gm.totalInterfaceArea);
    worstPartition = std::max(worstPartition, partition / 27.0);
    ok = ok && normal <= 1e-10 * gm.totalInterfaceArea &&
         partition <= 1e-12 * 27.0;
  }
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "worst |sum n|/area %.3g, worst partition drift %.3g",
                worstNormal, worstPartition);
  report("closure-partition", ok, detail);
}

void criterion_table_integrity() {
  const LookupTable& lt = lookup_table();
  const GroupReport group = validate_rotation_group();
  int sizeSum = 0;
  for (int s : lt.report.orbitSizes) sizeSum += s;
  bool ids[23] = {};
  for (int c = 0; c < 256; ++c) ids[lt.entries[c].baseCaseId] = true;
  int distinct = 0;
  for (bool b : ids) distinct += b;

  const bool ok = lt.report.valid && lt.report.orbitCount == 23 &&
                  sizeSum == 256 && group.ok() && distinct == 23;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "%d base cases, orbit sizes sum %d, group audit %s", distinct,
                sizeSum, group.ok() ? "clean" : "violated");
  report("table-integrity", ok, detail);
}

}  // namespace

int main() {
  double seconds = 0.0;
  const StudyResult study = run_reference_study(&seconds);
  criterion_reference_values(study, seconds);
  criterion_reference_orders(study);
  criterion_planar_exactness();
  criterion_watertight_translation();
  criterion_oracle_agreement();
  criterion_face_consistency();
  criterion_closure_partition();
  criterion_table_integrity();
  std::printf("ACCEPTANCE: %d/%d passed\n", passCount, totalCount);
  return passCount == totalCount ? 0 : 1;
}
