#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mcvol/field_io.hpp"
#include "mcvol/oracles.hpp"

using namespace mcvol;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("tmp_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

FieldData sample_sphere_field() {
  FieldData data;
  data.spec = grid_for_mesh({{0, 0, 0}, {3, 3, 3}}, 6);
  data.values =
      sample_field(ImplicitField::sphere({1.5, 1.5, 1.5}, 1.0), data.spec);
  return data;
}

}  // namespace

TEST_CASE("field files round-trip bit for bit") {
  const TempFile tmp("roundtrip.sfield");
  const FieldData data = sample_sphere_field();
  write_field_file(tmp.path, data);

  const FieldData back = read_field_file(tmp.path);
  CHECK(back.spec.nodeCounts == data.spec.nodeCounts);
  CHECK((back.spec.origin - data.spec.origin).norm() == 0.0);
  CHECK((back.spec.spacing - data.spec.spacing).norm() == 0.0);
  REQUIRE(back.values.size() == data.values.size());
  for (std::size_t i = 0; i < data.values.size(); ++i)
    CHECK(back.values[i] == data.values[i]);

  const GridMeasures a = measure_grid_values(data.spec, data.values, 0.0);
  const GridMeasures b = measure_grid_values(back.spec, back.values, 0.0);
  CHECK(a.totalVolume1 == b.totalVolume1);
  CHECK(a.totalVolume0 == b.totalVolume0);
  CHECK(a.totalInterfaceArea == b.totalInterfaceArea);
  CHECK((a.globalNormalIntegral - b.globalNormalIntegral).norm() == 0.0);
}

TEST_CASE("header is human readable") {
  const TempFile tmp("header.sfield");
  FieldData data;
  data.spec.nodeCounts = {2, 2, 2};
  data.spec.origin = Point3{0.5, 0, 0};
  data.spec.spacing = Point3{1, 1, 1};
  data.values.assign(8, 1.0);
  write_field_file(tmp.path, data);

  std::ifstream in(tmp.path, std::ios::binary);
  std::string line;
  std::getline(in, line);
  CHECK(line == "SFIELD1");
  std::getline(in, line);
  CHECK(line == "nodes 2 2 2");
  std::getline(in, line);
  CHECK(line == "origin 0.5 0 0");
  std::getline(in, line);
  CHECK(line == "spacing 1 1 1");
  std::getline(in, line);
  CHECK(line == "data float64-le");
}

TEST_CASE("malformed field files are rejected") {
  const TempFile tmp("bad.sfield");

  {
    std::ofstream out(tmp.path, std::ios::binary);
    out << "NOTAFIELD\n";
  }
  CHECK_THROWS_AS(read_field_file(tmp.path), DataError);

  // Truncated payload: header promises 8 values, provide 3.
  {
    std::ofstream out(tmp.path, std::ios::binary);
    out << "SFIELD1\nnodes 2 2 2\norigin 0 0 0\nspacing 1 1 1\n"
        << "data float64-le\n";
    const char zeros[24] = {};
    out.write(zeros, sizeof zeros);
  }
  CHECK_THROWS_AS(read_field_file(tmp.path), DataError);

  // Trailing bytes after the declared payload.
  {
    FieldData data;
    data.spec.nodeCounts = {2, 2, 2};
    data.values.assign(8, 0.25);
    write_field_file(tmp.path, data);
    std::ofstream out(tmp.path, std::ios::binary | std::ios::app);
    out << "extra";
  }
  CHECK_THROWS_AS(read_field_file(tmp.path), DataError);

  {
    std::ofstream out(tmp.path, std::ios::binary);
    out << "SFIELD1\nnodes 1 2 2\norigin 0 0 0\nspacing 1 1 1\n"
        << "data float64-le\n";
  }
  CHECK_THROWS_AS(read_field_file(tmp.path), DataError);

  CHECK_THROWS_AS(read_field_file("no_such_file.sfield"), DataError);
}

TEST_CASE("mesh export writes valid 1-based faces") {
  const TempFile tmp("sphere.objmesh");
  const GridSpec spec = grid_for_mesh({{0, 0, 0}, {3, 3, 3}}, 8);
  const auto field = ImplicitField::sphere({1.5, 1.5, 1.5}, 1.0);
  const TriangleMesh mesh = extract_interface(spec, field, 0.0);
  write_obj(tmp.path, mesh);

  std::ifstream in(tmp.path);
  std::vector<Point3> verts;
  std::vector<std::array<int, 3>> faces;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "v") {
      Point3 p;
      ls >> p.x() >> p.y() >> p.z();
      REQUIRE(ls);
      verts.push_back(p);
    } else if (kind == "f") {
      std::array<int, 3> f{};
      ls >> f[0] >> f[1] >> f[2];
      REQUIRE(ls);
      for (int idx : f) CHECK(idx >= 1);
      faces.push_back(f);
    }
  }
  CHECK(verts.size() == mesh.vertices.size());
  REQUIRE(faces.size() == mesh.faces.size());
  for (auto& f : faces)
    for (int idx : f) CHECK(idx <= static_cast<int>(verts.size()));

  // Area recomputed from the parsed file matches the engine's mesh.
  TriangleMesh parsed;
  parsed.vertices = verts;
  for (const auto& f : faces)
    parsed.faces.push_back({f[0] - 1, f[1] - 1, f[2] - 1});
  CHECK(parsed.area() == doctest::Approx(mesh.area()).epsilon(1e-12));
  CHECK(parsed.closed());

  // 17 significant digits survive the text round trip exactly.
  for (std::size_t i = 0; i < verts.size(); ++i)
    CHECK((verts[i] - mesh.vertices[i]).norm() == 0.0);
}
