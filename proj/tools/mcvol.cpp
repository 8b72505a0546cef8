#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mcvol/cell_measure.hpp"
#include "mcvol/field_io.hpp"
#include "mcvol/grid.hpp"
#include "mcvol/oracles.hpp"

using namespace mcvol;

namespace {

struct SourceOpts {
  std::string fieldPath;
  std::vector<double> sphere;
  std::vector<double> plane;
  bool squaredForm = false;
  std::vector<double> domain{0, 0, 0, 3, 3, 3};
  double iso = 0.0;
  CLI::Option* domainOpt = nullptr;
};

void add_source_flags(CLI::App* cmd, SourceOpts& o, bool allowField) {
  CLI::Option* field = nullptr;
  if (allowField)
    field = cmd->add_option("--field", o.fieldPath,
                            "node values from an SFIELD1 file");
  auto* sphere =
      cmd->add_option("--sphere", o.sphere,
                      "signed-distance sphere cx,cy,cz,r")
          ->delimiter(',')
          ->expected(4);
  auto* plane =
      cmd->add_option("--plane", o.plane,
                      "half-space nx*x+ny*y+nz*z >= d as nx,ny,nz,d")
          ->delimiter(',')
          ->expected(4);
  sphere->excludes(plane);
  if (field) {
    field->excludes(sphere);
    field->excludes(plane);
  }
  cmd->add_flag("--squared-form", o.squaredForm,
                "evaluate the sphere as r^2 - |x-c|^2 sign-flipped form");
  cmd->add_option("--iso", o.iso, "iso value (default 0)");
  o.domainOpt = cmd->add_option("--domain", o.domain,
                                "axis-aligned domain x0,y0,z0,x1,y1,z1")
                    ->delimiter(',')
                    ->expected(6);
}

Box3 to_box(const std::vector<double>& d) {
  const Box3 box{{d[0], d[1], d[2]}, {d[3], d[4], d[5]}};
  if (!(box.lo.x() < box.hi.x() && box.lo.y() < box.hi.y() &&
        box.lo.z() < box.hi.z()))
    throw std::invalid_argument("domain must have positive extent");
  return box;
}

ImplicitField make_implicit(const SourceOpts& o) {
  if (!o.sphere.empty()) {
    if (!(o.sphere[3] > 0.0))
      throw std::invalid_argument("sphere radius must be positive");
    return ImplicitField::sphere({o.sphere[0], o.sphere[1], o.sphere[2]},
                                 o.sphere[3], o.squaredForm);
  }
  const Point3 n{o.plane[0], o.plane[1], o.plane[2]};
  if (n.norm() == 0.0)
    throw std::invalid_argument("plane normal must be nonzero");
  return ImplicitField::plane(n, o.plane[3]);
}

struct GridAndSource {
  GridSpec spec;
  FieldSource src;
};

GridAndSource resolve(const SourceOpts& o, const std::vector<int>& meshes) {
  const int sources =
      !o.fieldPath.empty() + !o.sphere.empty() + !o.plane.empty();
  if (sources != 1)
    throw std::invalid_argument(
        "exactly one of --field, --sphere, --plane is required");
  if (!o.fieldPath.empty()) {
    if (!meshes.empty())
      throw std::invalid_argument("--mesh cannot be combined with --field");
    if (o.domainOpt && o.domainOpt->count() > 0)
      throw std::invalid_argument("--domain cannot be combined with --field");
    FieldData fd = read_field_file(o.fieldPath);
    return {fd.spec, std::move(fd.values)};
  }
  if (meshes.size() != 1)
    throw std::invalid_argument("--mesh with one value is required");
  return {grid_for_mesh(to_box(o.domain), meshes[0]), make_implicit(o)};
}

int cmd_volume(const SourceOpts& o, const std::vector<int>& meshes,
               const std::string& outPath) {
  auto [spec, src] = resolve(o, meshes);
  const GridMeasures gm = measure_grid(spec, src, o.iso);
  std::printf("total_volume1    %s\n", format_g17(gm.totalVolume1).c_str());
  std::printf("total_volume0    %s\n", format_g17(gm.totalVolume0).c_str());
  std::printf("interface_area   %s\n",
              format_g17(gm.totalInterfaceArea).c_str());
  std::printf("normal_integral  %s %s %s\n",
              format_g17(gm.globalNormalIntegral.x()).c_str(),
              format_g17(gm.globalNormalIntegral.y()).c_str(),
              format_g17(gm.globalNormalIntegral.z()).c_str());
  std::printf("first_moment     %s %s %s\n",
              format_g17(gm.globalFirstMoment.x()).c_str(),
              format_g17(gm.globalFirstMoment.y()).c_str(),
              format_g17(gm.globalFirstMoment.z()).c_str());
  std::printf("interface_cells  %lld of %lld\n", gm.interfaceCellCount,
              gm.cellCount);
  if (!outPath.empty()) {
    std::ofstream out(outPath);
    if (!out) throw DataError("cannot open " + outPath + " for writing");
    out << "total_volume1,total_volume0,interface_area,normal_integral_x,"
           "normal_integral_y,normal_integral_z\n";
    out << format_g17(gm.totalVolume1) << ',' << format_g17(gm.totalVolume0)
        << ',' << format_g17(gm.totalInterfaceArea) << ','
        << format_g17(gm.globalNormalIntegral.x()) << ','
        << format_g17(gm.globalNormalIntegral.y()) << ','
        << format_g17(gm.globalNormalIntegral.z()) << '\n';
    if (!out) throw DataError("write to " + outPath + " failed");
  }
  return 0;
}

int cmd_convergence(SourceOpts o, std::vector<int> meshes,
                    const std::string& outPath, const std::string& plotPath,
                    std::optional<double> exactVolume,
                    std::optional<double> exactArea) {
  if (!o.fieldPath.empty())
    throw std::invalid_argument(
        "convergence needs an implicit source, not --field");
  if (o.sphere.empty() && o.plane.empty())
    o.sphere = {1.5, 1.5, 1.5, 1.0};
  if (meshes.empty()) meshes = {10, 20, 40, 80};

  const Box3 dom = to_box(o.domain);
  const ImplicitField field = make_implicit(o);
  double ev, ea;
  if (field.kind == ImplicitField::Kind::Sphere) {
    const double r = field.radius;
    ev = 4.0 / 3.0 * std::numbers::pi * r * r * r;
    ea = 4.0 * std::numbers::pi * r * r;
  } else {
    const PlaneClipResult clip = plane_clip_box(field.normal, field.offset, dom);
    ev = clip.volume;
    ea = clip.crossSectionArea;
  }
  if (exactVolume) ev = *exactVolume;
  if (exactArea) ea = *exactArea;

  const StudyResult study =
      convergence_study(meshes, dom, field, o.iso, ev, ea);
  if (!study.warning.empty()) {
    std::cerr << "warning: " << study.warning << '\n';
  } else {
    for (std::size_t r = 1; r < study.rows.size(); ++r) {
      if (!study.rows[r].volumeOrder)
        std::cerr << "note: volume order undefined for mesh "
                  << study.rows[r].mesh << " (zero error)\n";
      if (!study.rows[r].areaOrder)
        std::cerr << "note: area order undefined for mesh "
                  << study.rows[r].mesh << " (zero error)\n";
    }
  }

  const std::string csv = study_csv(study);
  if (outPath.empty()) {
    std::fputs(csv.c_str(), stdout);
  } else {
    std::ofstream out(outPath);
    if (!out) throw DataError("cannot open " + outPath + " for writing");
    out << csv;
    if (!out) throw DataError("write to " + outPath + " failed");
  }
  if (!plotPath.empty()) {
    std::ofstream plot(plotPath);
    if (!plot) throw DataError("cannot open " + plotPath + " for writing");
    plot << "set datafile separator ','\n"
         << "set logscale xy\n"
         << "set xlabel 'mesh'\n"
         << "set ylabel 'absolute error'\n"
         << "set key top right\n"
         << "plot '" << outPath << "' every ::1 using 1:3 with linespoints"
         << " title 'volume error', \\\n"
         << "     '' every ::1 using 1:5 with linespoints title 'area error'\n";
    if (!plot) throw DataError("write to " + plotPath + " failed");
  }
  return 0;
}

int cmd_mesh(const SourceOpts& o, const std::vector<int>& meshes,
             const std::string& outPath) {
  auto [spec, src] = resolve(o, meshes);
  const TriangleMesh mesh = extract_interface(spec, src, o.iso);
  write_obj(outPath, mesh);
  std::printf("vertices  %zu\n", mesh.vertices.size());
  std::printf("faces     %zu\n", mesh.faces.size());
  std::printf("area      %s\n", format_g17(mesh.area()).c_str());
  std::printf("closed    %s\n", mesh.closed() ? "yes" : "no");
  return 0;
}

int cmd_table() {
  std::printf("# cube labeling\n");
  for (int v = 0; v < kVertexCount; ++v)
    std::printf("vertex %d at (%d, %d, %d)\n", v, kVertexCoord[v][0],
                kVertexCoord[v][1], kVertexCoord[v][2]);
  for (int e = 0; e < kEdgeCount; ++e)
    std::printf("edge %d = (v%d, v%d)\n", e, kEdgeVertex[e][0],
                kEdgeVertex[e][1]);
  for (int f = 0; f < kFaceCount; ++f)
    std::printf("face %c = {v%d, v%d, v%d, v%d}\n", kFaceName[f],
                kFaceVertex[f][0], kFaceVertex[f][1], kFaceVertex[f][2],
                kFaceVertex[f][3]);

  const LookupTable& lt = lookup_table();
  std::printf("# lookup table: 256 configs, %d base cases\n",
              lt.report.orbitCount);
  const auto& rots = rotations();
  for (int c = 0; c < 256; ++c) {
    const TableEntry& te = lt.entries[c];
    std::printf("0x%02X case %2d rot %2d %-8s %s\n", c, te.baseCaseId,
                te.rotationIndex, rots[te.rotationIndex].name,
                entry_to_string(te.entry).c_str());
  }
  return 0;
}

int cmd_cellcase(const std::string& configText, std::vector<double> params) {
  int config = 0;
  try {
    std::size_t used = 0;
    config = std::stoi(configText, &used, 0);
    if (used != configText.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("config must be an integer in [0, 255]");
  }
  if (config < 0 || config > 255)
    throw std::invalid_argument("config must be an integer in [0, 255]");
  if (params.empty()) params.assign(12, 0.5);
  std::array<double, 12> t{};
  for (int e = 0; e < 12; ++e) {
    if (!(params[e] >= 0.0 && params[e] <= 1.0))
      throw std::invalid_argument("crossing parameters must lie in [0, 1]");
    t[e] = params[e];
  }

  const TableEntry& te = lookup_table().entries[config];
  std::printf("config 0x%02X\n", config);
  std::printf("case %d, rotation %d (%s), encloses component %d\n",
              te.baseCaseId, te.rotationIndex,
              rotations()[te.rotationIndex].name,
              te.entry.enclosedComponent);
  std::printf("triangles: %s\n", entry_to_string(te.entry).c_str());

  const CellMeasures m = measure_config(static_cast<Config>(config), t,
                                        Point3::Zero(), Point3::Ones());
  std::printf("unit-cell measures:\n");
  std::printf("volume1          %s\n", format_g17(m.volume1).c_str());
  std::printf("volume0          %s\n", format_g17(m.volume0).c_str());
  std::printf("interface_area   %s\n", format_g17(m.interfaceArea).c_str());
  std::printf("normal_integral  %s %s %s\n",
              format_g17(m.normalIntegral.x()).c_str(),
              format_g17(m.normalIntegral.y()).c_str(),
              format_g17(m.normalIntegral.z()).c_str());
  if (m.centroidDefined)
    std::printf("centroid         %s %s %s\n",
                format_g17(m.centroid.x()).c_str(),
                format_g17(m.centroid.y()).c_str(),
                format_g17(m.centroid.z()).c_str());
  return 0;
}

void verify_tetra(Rng& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    std::array<double, 12> t{};
    for (auto& x : t) x = rng.uniform(0.05, 0.95);
    const CellMeasures m =
        measure_config(0x01, t, Point3::Zero(), Point3::Ones());
    const double exact =
        corner_tetra_volume(t[0], 1.0 - t[3], t[8], Point3::Ones());
    worst = std::max(worst, std::abs(m.volume1 - exact));
  }
  std::printf("tetra: max |kernel - analytic| = %s over 20 draws\n",
              format_g17(worst).c_str());
}

void verify_planes(Rng& rng) {
  const Box3 dom{{0, 0, 0}, {3, 3, 3}};
  const GridSpec spec = grid_for_mesh(dom, 10);
  double worstV = 0.0, worstA = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Point3 n = rng.unitVector();
    const Point3 p{rng.uniform(0.75, 2.25), rng.uniform(0.75, 2.25),
                   rng.uniform(0.75, 2.25)};
    const double d = n.dot(p);
    const GridMeasures gm =
        measure_grid(spec, ImplicitField::plane(n, d), 0.0);
    const PlaneClipResult clip = plane_clip_box(n, d, dom);
    worstV = std::max(worstV, std::abs(gm.totalVolume1 - clip.volume) /
                                  clip.volume);
    worstA = std::max(
        worstA, std::abs(gm.totalInterfaceArea - clip.crossSectionArea) /
                    clip.crossSectionArea);
  }
  std::printf("planes: max relative volume diff %s, area diff %s (100 planes)\n",
              format_g17(worstV).c_str(), format_g17(worstA).c_str());
}

void verify_mc(Rng& rng, long long samples, std::uint64_t seed) {
  const Box3 unit{Point3::Zero(), Point3::Ones()};
  double worstZ = 0.0;
  int worstCfg = 0;
  int over4 = 0;
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
        mc_point_in_mesh_volume(surf, unit, samples, seed + c);
    const double z = mc.standardError > 0.0
                         ? std::abs(mc.value - want) / mc.standardError
                         : std::abs(mc.value - want);
    std::printf("cfg 0x%02X kernel %s mc %s +- %s z %.2f\n", c,
                format_g17(want).c_str(), format_g17(mc.value).c_str(),
                format_g17(mc.standardError).c_str(), z);
    if (z > 4.0) ++over4;
    if (z > worstZ) {
      worstZ = z;
      worstCfg = c;
    }
  }
  std::printf("mc: worst z = %.2f at config 0x%02X, %d of 256 beyond 4 SE\n",
              worstZ, worstCfg, over4);
}

void verify_complement() {
  // Ambiguous-face complements legitimately triangulate differently, so the
  // deviation below is measured and reported, never asserted to be zero.
  std::array<double, 12> t{};
  t.fill(0.5);
  double worst = 0.0;
  int worstCfg = 0;
  for (int c = 0; c < 128; ++c) {
    const CellMeasures a = measure_config(static_cast<Config>(c), t,
                                          Point3::Zero(), Point3::Ones());
    const CellMeasures b = measure_config(static_cast<Config>(255 - c), t,
                                          Point3::Zero(), Point3::Ones());
    const double dev = std::abs(a.volume1 + b.volume1 - 1.0);
    if (dev > worst) {
      worst = dev;
      worstCfg = c;
    }
  }
  std::printf(
      "complement: max |volume1(c) + volume1(~c) - 1| = %s at config 0x%02X "
      "(t = 0.5; nonzero values come from ambiguous-face pairs)\n",
      format_g17(worst).c_str(), worstCfg);
}

int cmd_verify(const std::string& suite, long long samples,
               std::uint64_t seed) {
  Rng rng(seed);
  if (suite == "all" || suite == "tetra") verify_tetra(rng);
  if (suite == "all" || suite == "planes") verify_planes(rng);
  if (suite == "all" || suite == "mc") verify_mc(rng, samples, seed);
  if (suite == "all" || suite == "complement") verify_complement();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "partial-cell volumes and interface measures for isosurfaces on "
      "Cartesian grids"};
  app.require_subcommand(1);

  SourceOpts volOpts, convOpts, meshOpts;
  std::vector<int> volMeshes, convMeshes, meshMeshes;
  std::string volOut, convOut, meshOut, plotOut;
  std::optional<double> exactVolume, exactArea;
  std::string configText;
  std::vector<double> cellParams;
  std::string suite = "all";
  long long samples = 20000;
  std::uint64_t seed = 12345;

  auto* volume =
      app.add_subcommand("volume", "measure partial volumes on one grid");
  add_source_flags(volume, volOpts, true);
  volume->add_option("--mesh", volMeshes, "mesh label (interior node planes)")
      ->delimiter(',');
  volume->add_option("--out", volOut, "also write the measures as CSV");

  auto* convergence = app.add_subcommand(
      "convergence", "run a mesh refinement study (default: unit sphere)");
  add_source_flags(convergence, convOpts, false);
  convergence
      ->add_option("--mesh", convMeshes, "mesh labels (default 10,20,40,80)")
      ->delimiter(',');
  convergence->add_option("--out", convOut, "write the CSV here");
  convergence->add_option("--plot-script", plotOut,
                          "write a gnuplot script next to the CSV")
      ->needs(convergence->get_option("--out"));
  convergence->add_option("--exact-volume", exactVolume,
                          "override the exact reference volume");
  convergence->add_option("--exact-area", exactArea,
                          "override the exact reference area");

  auto* meshCmd =
      app.add_subcommand("mesh", "export the isosurface triangles");
  add_source_flags(meshCmd, meshOpts, true);
  meshCmd->add_option("--mesh", meshMeshes, "mesh label")->delimiter(',');
  meshCmd->add_option("--out", meshOut, "mesh file to write")->required();

  app.add_subcommand("table", "dump the cube labeling and all 256 entries");

  auto* cellcase = app.add_subcommand(
      "cellcase", "inspect one config's triangulation and measures");
  cellcase->add_option("--config", configText, "config byte, 0x.. accepted")
      ->required();
  cellcase
      ->add_option("--params", cellParams,
                   "12 crossing parameters (default 0.5 each)")
      ->delimiter(',')
      ->expected(12);

  auto* verify =
      app.add_subcommand("verify", "run the built-in numerical cross-checks");
  verify->add_option("--suite", suite, "all, tetra, planes, mc, complement")
      ->check(CLI::IsMember({"all", "tetra", "planes", "mc", "complement"}));
  verify->add_option("--samples", samples, "point samples per config")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (volume->parsed()) return cmd_volume(volOpts, volMeshes, volOut);
    if (convergence->parsed())
      return cmd_convergence(convOpts, convMeshes, convOut, plotOut,
                             exactVolume, exactArea);
    if (meshCmd->parsed()) return cmd_mesh(meshOpts, meshMeshes, meshOut);
    if (app.get_subcommand("table")->parsed()) return cmd_table();
    if (cellcase->parsed()) return cmd_cellcase(configText, cellParams);
    if (verify->parsed()) return cmd_verify(suite, samples, seed);
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
