#include "mcvol/cube_topology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mcvol {

namespace {

const std::array<RotationRow, kRotationCount> kRows{{
    {{0, 1, 2, 3, 4, 5, 6, 7}, "self"},
    {{4, 5, 1, 0, 7, 6, 2, 3}, "x 90"},
    {{7, 6, 5, 4, 3, 2, 1, 0}, "x 180"},
    {{3, 2, 6, 7, 0, 1, 5, 4}, "x 270"},
    {{4, 0, 3, 7, 5, 1, 2, 6}, "y 90"},
    {{5, 4, 7, 6, 1, 0, 3, 2}, "y 180"},
    {{1, 5, 6, 2, 0, 4, 7, 3}, "y 270"},
    {{3, 0, 1, 2, 7, 4, 5, 6}, "z 90"},
    {{2, 3, 0, 1, 6, 7, 4, 5}, "z 180"},
    {{1, 2, 3, 0, 5, 6, 7, 4}, "z 270"},
    {{0, 4, 5, 1, 3, 7, 6, 2}, "v0-v6 a"},
    {{0, 3, 7, 4, 1, 2, 6, 5}, "v0-v6 b"},
    {{2, 1, 5, 6, 3, 0, 4, 7}, "v1-v7 a"},
    {{5, 1, 0, 4, 6, 2, 3, 7}, "v1-v7 b"},
    {{5, 6, 2, 1, 4, 7, 3, 0}, "v2-v4 a"},
    {{7, 3, 2, 6, 4, 0, 1, 5}, "v2-v4 b"},
    {{2, 6, 7, 3, 1, 5, 4, 0}, "v3-v5 a"},
    {{7, 4, 0, 3, 6, 5, 1, 2}, "v3-v5 b"},
    {{1, 0, 4, 5, 2, 3, 7, 6}, "e0-e6"},
    {{3, 7, 4, 0, 2, 6, 5, 1}, "e3-e5"},
    {{6, 7, 3, 2, 5, 4, 0, 1}, "e2-e4"},
    {{6, 2, 1, 5, 7, 3, 0, 4}, "e1-e7"},
    {{4, 7, 6, 5, 0, 3, 2, 1}, "e8-e10"},
    {{6, 5, 4, 7, 2, 1, 0, 3}, "e9-e11"},
}};

std::array<int, 8> invert_perm(const std::array<int, 8>& p) {
  std::array<int, 8> q{};
  for (int i = 0; i < 8; ++i) q[p[i]] = i;
  return q;
}

// Determinant of the linear part of the vertex map, on the embedded corners.
int orientation_det(const std::array<int, 8>& vertexMap) {
  const auto& o = kVertexCoord[vertexMap[0]];
  int m[3][3];
  const int axisVertex[3] = {1, 3, 4};  // images of the x, y, z unit steps
  for (int c = 0; c < 3; ++c) {
    const auto& p = kVertexCoord[vertexMap[axisVertex[c]]];
    for (int r = 0; r < 3; ++r) m[r][c] = p[r] - o[r];
  }
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::array<Rotation, kRotationCount> build_rotations() {
  std::array<Rotation, kRotationCount> out;
  for (int i = 0; i < kRotationCount; ++i) {
    Rotation r;
    r.vertexMap = invert_perm(kRows[i].perm);
    r.edgeMap = induced_edge_perm(r.vertexMap);
    r.faceMap = induced_face_perm(r.vertexMap);
    r.name = kRows[i].name;
    out[i] = r;
  }
  return out;
}

}  // namespace

std::array<int, 2> edge_endpoints(int e) {
  return {kEdgeVertex[e][0], kEdgeVertex[e][1]};
}

int edge_index(int va, int vb) {
  for (int e = 0; e < kEdgeCount; ++e) {
    const auto& ep = kEdgeVertex[e];
    if ((ep[0] == va && ep[1] == vb) || (ep[0] == vb && ep[1] == va)) return e;
  }
  return -1;
}

const std::array<RotationRow, kRotationCount>& rotation_rows() { return kRows; }

const std::array<Rotation, kRotationCount>& rotations() {
  static const std::array<Rotation, kRotationCount> r = build_rotations();
  return r;
}

std::array<int, 12> induced_edge_perm(const std::array<int, 8>& vertexPerm) {
  std::array<int, 12> out{};
  for (int e = 0; e < kEdgeCount; ++e) {
    const int img =
        edge_index(vertexPerm[kEdgeVertex[e][0]], vertexPerm[kEdgeVertex[e][1]]);
    if (img < 0)
      throw std::invalid_argument("vertex permutation does not map edge e" +
                                  std::to_string(e) + " to an edge");
    out[e] = img;
  }
  return out;
}

std::array<int, 6> induced_face_perm(const std::array<int, 8>& vertexPerm) {
  std::array<int, 6> out{};
  for (int f = 0; f < kFaceCount; ++f) {
    std::set<int> image;
    for (int v : kFaceVertex[f]) image.insert(vertexPerm[v]);
    int found = -1;
    for (int g = 0; g < kFaceCount; ++g) {
      std::set<int> corners(kFaceVertex[g].begin(), kFaceVertex[g].end());
      if (corners == image) {
        found = g;
        break;
      }
    }
    if (found < 0)
      throw std::invalid_argument(
          "vertex permutation does not map face " +
          std::string(1, kFaceName[f]) + " to a face");
    out[f] = found;
  }
  return out;
}

Config rotate_config(const Rotation& r, Config c) {
  int out = 0;
  for (int i = 0; i < 8; ++i) {
    if (c >> i & 1) out |= 1 << r.vertexMap[i];
  }
  return static_cast<Config>(out);
}

GroupReport validate_rotation_group() {
  GroupReport rep;
  const auto& rots = rotations();

  rep.distinct = true;
  for (int i = 0; i < kRotationCount && rep.distinct; ++i) {
    for (int j = i + 1; j < kRotationCount; ++j) {
      if (rots[i].vertexMap == rots[j].vertexMap) {
        rep.distinct = false;
        rep.violations.push_back("rotations " + std::to_string(i) + " and " +
                                 std::to_string(j) + " coincide");
        break;
      }
    }
  }

  rep.hasIdentity = false;
  const std::array<int, 8> ident{0, 1, 2, 3, 4, 5, 6, 7};
  for (const auto& r : rots) {
    if (r.vertexMap == ident) rep.hasIdentity = true;
  }
  if (!rep.hasIdentity) rep.violations.push_back("identity missing");

  rep.closed = true;
  for (int i = 0; i < kRotationCount && rep.closed; ++i) {
    for (int j = 0; j < kRotationCount; ++j) {
      std::array<int, 8> comp{};
      for (int v = 0; v < 8; ++v) comp[v] = rots[i].vertexMap[rots[j].vertexMap[v]];
      bool member = false;
      for (const auto& r : rots) {
        if (r.vertexMap == comp) {
          member = true;
          break;
        }
      }
      if (!member) {
        rep.closed = false;
        rep.violations.push_back("composition " + std::to_string(i) + "*" +
                                 std::to_string(j) + " escapes the set");
        break;
      }
    }
  }

  rep.edgesConsistent = true;
  rep.facesConsistent = true;
  for (int i = 0; i < kRotationCount; ++i) {
    try {
      (void)induced_edge_perm(rots[i].vertexMap);
    } catch (const std::invalid_argument& ex) {
      rep.edgesConsistent = false;
      rep.violations.push_back(std::string("rotation ") + rots[i].name + ": " +
                               ex.what());
    }
    try {
      (void)induced_face_perm(rots[i].vertexMap);
    } catch (const std::invalid_argument& ex) {
      rep.facesConsistent = false;
      rep.violations.push_back(std::string("rotation ") + rots[i].name + ": " +
                               ex.what());
    }
  }

  rep.allProper = true;
  for (int i = 0; i < kRotationCount; ++i) {
    if (orientation_det(rots[i].vertexMap) != 1) {
      rep.allProper = false;
      rep.violations.push_back(std::string("rotation ") + rots[i].name +
                               " is not orientation-preserving");
    }
  }

  return rep;
}

std::vector<std::vector<Config>> config_orbits() {
  const auto& rots = rotations();
  std::array<bool, 256> seen{};
  std::vector<std::vector<Config>> orbits;
  for (int c = 0; c < 256; ++c) {
    if (seen[c]) continue;
    std::set<int> orbit;
    std::vector<int> stack{c};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (!orbit.insert(x).second) continue;
      for (const auto& r : rots)
        stack.push_back(rotate_config(r, static_cast<Config>(x)));
    }
    std::vector<Config> sorted;
    for (int x : orbit) {
      seen[x] = true;
      sorted.push_back(static_cast<Config>(x));
    }
    orbits.push_back(std::move(sorted));
  }
  return orbits;
}

}  // namespace mcvol
