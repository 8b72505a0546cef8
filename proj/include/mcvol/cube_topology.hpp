#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace mcvol {

using Config = std::uint8_t;

inline constexpr int kVertexCount = 8;
inline constexpr int kEdgeCount = 12;
inline constexpr int kFaceCount = 6;
inline constexpr int kRotationCount = 24;

// Corner coordinates: v0 at the cell minimum, v1..v3 around the bottom loop,
// v4..v7 the matching top loop.
inline constexpr std::array<std::array<int, 3>, kVertexCount> kVertexCoord{{
    {0, 0, 0},
    {1, 0, 0},
    {1, 1, 0},
    {0, 1, 0},
    {0, 0, 1},
    {1, 0, 1},
    {1, 1, 1},
    {0, 1, 1},
}};

// e0..e3 bottom loop, e4..e7 top loop, e8..e11 verticals.
inline constexpr std::array<std::array<int, 2>, kEdgeCount> kEdgeVertex{{
    {0, 1},
    {1, 2},
    {2, 3},
    {3, 0},
    {4, 5},
    {5, 6},
    {6, 7},
    {7, 4},
    {0, 4},
    {1, 5},
    {2, 6},
    {3, 7},
}};

// W/E at x=0/1, S/N at y=0/1, D/U at z=0/1.
enum class Face : int { W = 0, E, S, N, D, U };

inline constexpr std::array<char, kFaceCount> kFaceName{'W', 'E', 'S',
                                                        'N', 'D', 'U'};
inline constexpr std::array<std::array<int, 4>, kFaceCount> kFaceVertex{{
    {0, 3, 7, 4},
    {1, 2, 6, 5},
    {0, 1, 5, 4},
    {3, 2, 6, 7},
    {0, 1, 2, 3},
    {4, 5, 6, 7},
}};

std::array<int, 2> edge_endpoints(int e);
// -1 when (va, vb) is not a cube edge.
int edge_index(int va, int vb);

// The 24 proper rotations as verbatim vertex permutation rows. A row is read
// as: position i receives the vertex formerly at perm[i].
struct RotationRow {
  std::array<int, 8> perm;
  const char* name;
};
const std::array<RotationRow, kRotationCount>& rotation_rows();

// Geometric action resolved from a row: vertex j moves to vertexMap[j], with
// the induced edge and face permutations.
struct Rotation {
  std::array<int, 8> vertexMap;
  std::array<int, 12> edgeMap;
  std::array<int, 6> faceMap;
  const char* name;
};
const std::array<Rotation, kRotationCount>& rotations();

// Throws std::invalid_argument when the permutation does not map edges to
// edges (resp. faces to faces).
std::array<int, 12> induced_edge_perm(const std::array<int, 8>& vertexPerm);
std::array<int, 6> induced_face_perm(const std::array<int, 8>& vertexPerm);

// Bit at position r.vertexMap[i] of the result equals bit i of c.
Config rotate_config(const Rotation& r, Config c);

struct GroupReport {
  bool distinct = false;
  bool hasIdentity = false;
  bool closed = false;
  bool edgesConsistent = false;
  bool facesConsistent = false;
  bool allProper = false;
  std::vector<std::string> violations;

  bool ok() const {
    return distinct && hasIdentity && closed && edgesConsistent &&
           facesConsistent && allProper;
  }
};
GroupReport validate_rotation_group();

// Orbit partition of all 256 configs under the 24 rotations, each orbit
// sorted ascending, orbits ordered by smallest member.
std::vector<std::vector<Config>> config_orbits();

}  // namespace mcvol
