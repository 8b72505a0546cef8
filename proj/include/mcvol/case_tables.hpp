#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mcvol/cube_topology.hpp"

namespace mcvol {

struct NodeRef {
  enum class Kind : std::uint8_t { Vertex, EdgeCrossing };
  Kind kind = Kind::Vertex;
  std::uint8_t id = 0;

  friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

inline NodeRef vnode(int v) {
  return {NodeRef::Kind::Vertex, static_cast<std::uint8_t>(v)};
}
inline NodeRef enode(int e) {
  return {NodeRef::Kind::EdgeCrossing, static_cast<std::uint8_t>(e)};
}

enum class TriTag : std::uint8_t { I = 0, W, E, S, N, D, U };
char tri_tag_name(TriTag t);

struct TriangleRef {
  std::array<NodeRef, 3> nodes;
  TriTag tag = TriTag::I;
};

// One connected, closed, consistently oriented piece of a case surface.
struct CasePart {
  std::vector<TriangleRef> triangles;
};

struct CaseEntry {
  int caseId = 0;
  std::vector<CasePart> parts;
  // 1 for cases 01-16, 0 for cases 17-21, -1 for the empty cases 00 and 22.
  int enclosedComponent = -1;

  int triangleCount() const;
};

const CaseEntry& base_case(int caseId);  // caseId in [0, 22]

// Corner configuration each base case serves, reconstructed from its
// triangle list (referenced vertices carry the enclosed component;
// referenced edges straddle, unreferenced edges do not).
const std::array<Config, 23>& base_patterns();

struct TableEntry {
  CaseEntry entry;
  int baseCaseId = 0;
  int rotationIndex = 0;
};

struct TableBuildReport {
  int orbitCount = 0;
  std::array<int, 23> orbitSizes{};
  bool windingFlipped = false;
  bool valid = false;
  std::vector<std::string> notes;
};

struct LookupTable {
  std::array<TableEntry, 256> entries;
  TableBuildReport report;
};

// Deterministic build + validation; throws std::runtime_error on any defect
// (bad rotation group, orbit mismatch, non-watertight entry, mixed winding).
LookupTable build_lookup_table();

// Cached singleton of build_lookup_table().
const LookupTable& lookup_table();

// Provenance of a config's entry: (baseCaseId, rotationIndex).
std::pair<int, int> classify_config(Config c);

struct WatertightViolation {
  int partIndex = 0;
  NodeRef a, b;
  int incidentCount = 0;
  std::string detail;
};

struct WatertightReport {
  std::vector<WatertightViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Edge-pairing closure per part: every undirected node segment must be
// shared by exactly two triangles traversing it in opposite directions.
// Params in (0,1) additionally guarantee all realized nodes are distinct,
// which is checked too.
WatertightReport validate_watertight(const CaseEntry& entry,
                                     const std::array<double, 12>& params);

std::string triangle_to_string(const TriangleRef& t);
std::string entry_to_string(const CaseEntry& e);

}  // namespace mcvol
