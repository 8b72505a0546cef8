#include "mcvol/case_tables.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace mcvol {

namespace {

// clang-format off
const char* const kCaseText[23] = {
    /* 00 */ "",
    /* 01 */ "{e0,e3,e8,I},{v0,e8,e3,W},{v0,e0,e8,S},{v0,e3,e0,D}",
    /* 02 */ "{e3,e8,e9,I},{e1,e3,e9,I},{v0,e8,e3,W},{v1,e1,e9,E},{v0,e9,e8,S},"
             "{v0,v1,e9,S},{v0,e3,e1,D},{v0,e1,v1,D}",
    /* 03 */ "{e0,e3,e8,I},{v0,e8,e3,W},{v0,e0,e8,S},{v0,e3,e0,D},{e4,e5,e9,I},"
             "{v5,e9,e5,E},{v5,e4,e9,S},{v5,e5,e4,U}",
    /* 04 */ "{e0,e3,e8,I},{v0,e8,e3,W},{v0,e0,e8,S},{v0,e3,e0,D},{e5,e6,e10,I},"
             "{v6,e5,e10,E},{v6,e10,e6,N},{v6,e6,e5,U}",
    /* 05 */ "{e0,e9,e3,I},{e9,e11,e3,I},{e9,e10,e11,I},{v3,e3,e11,W},"
             "{v1,v2,e9,E},{v2,e10,e9,E},{v1,e9,e0,S},{v2,v3,e11,N},"
             "{v2,e11,e10,N},{v1,e0,v2,D},{v2,e0,e3,D},{v2,e3,v3,D}",
    /* 06 */ "{e3,e8,e1,I},{e1,e8,e9,I},{v0,e8,e3,W},{v1,e1,e9,E},{v0,e9,e8,S},"
             "{v0,v1,e9,S},{v0,e3,e1,D},{v0,e1,v1,D},{e5,e6,e10,I},"
             "{v6,e5,e10,E},{v6,e10,e6,N},{v6,e6,e5,U}",
    /* 07 */ "{e4,e8,e7,I},{v4,e7,e8,W},{v4,e8,e4,S},{v4,e4,e7,U},{e0,e9,e1,I},"
             "{v1,e1,e9,E},{v1,e9,e0,S},{v1,e0,e1,D},{e5,e6,e10,I},"
             "{v6,e5,e10,E},{v6,e10,e6,N},{v6,e6,e5,U}",
    /* 08 */ "{e8,e10,e11,I},{e8,e9,e10,I},{v0,e8,e11,W},{v0,e11,v3,W},"
             "{v1,e10,e9,E},{v1,v2,e10,E},{v0,e9,e8,S},{v0,v1,e9,S},"
             "{v2,v3,e10,N},{v3,e11,e10,N},{v0,v3,v2,D},{v0,v2,v1,D}",
    /* 09 */ "{e0,e7,e8,I},{e0,e6,e7,I},{e0,e1,e6,I},{e1,e10,e6,I},{v3,v0,e8,W},"
             "{v3,e8,e7,W},{v3,e7,v7,W},{v2,e10,e1,E},{v0,e0,e8,S},{v3,v7,e6,N},"
             "{v3,e6,e10,N},{v3,e10,v2,N},{v3,e0,v0,D},{v3,e1,e0,D},"
             "{v3,v2,e1,D},{v7,e7,e6,U}",
    /* 10 */ "{e3,e6,e7,I},{e2,e6,e3,I},{v3,e3,e7,W},{v3,e7,v7,W},{v3,v7,e6,N},"
             "{v3,e6,e2,N},{v3,e2,e3,D},{v7,e7,e6,U},{e0,e4,e5,I},{e0,e5,e1,I},"
             "{v1,e5,v5,E},{v1,e1,e5,E},{v1,v5,e4,S},{v1,e4,e0,S},{v1,e0,e1,D},"
             "{v5,e5,e4,U}",
    /* 11 */ "{e0,e11,e8,I},{e0,e5,e11,I},{e0,e1,e5,I},{e5,e6,e11,I},"
             "{v0,e8,e11,W},{v0,e11,v3,W},{v2,e5,e1,E},{v2,v6,e5,E},"
             "{v0,e0,e8,S},{v2,v3,e11,N},{v2,e11,e6,N},{v2,e6,v6,N},"
             "{v3,e0,v0,D},{v3,e1,e0,D},{v3,v2,e1,D},{v6,e6,e5,U}",
    /* 12 */ "{e4,e8,e7,I},{v4,e7,e8,W},{v4,e8,e4,S},{v4,e4,e7,U},{e0,e9,e3,I},"
             "{e3,e9,e11,I},{e9,e10,e11,I},{v3,e3,e11,W},{v1,e10,e9,E},"
             "{v1,v2,e10,E},{v1,e9,e0,S},{v2,v3,e11,N},{v2,e11,e10,N},"
             "{v1,e0,v2,D},{v2,e0,e3,D},{v2,e3,v3,D}",
    /* 13 */ "{e4,e8,e7,I},{v4,e7,e8,W},{v4,e8,e4,S},{v4,e4,e7,U},{e0,e9,e1,I},"
             "{v1,e1,e9,E},{v1,e9,e0,S},{v1,e0,e1,D},{e5,e6,e10,I},"
             "{v6,e5,e10,E},{v6,e10,e6,N},{v6,e6,e5,U},{e2,e11,e3,I},"
             "{v3,e3,e11,W},{v3,e11,e2,N},{v3,e2,e3,D}",
    /* 14 */ "{e0,e7,e3,I},{e0,e10,e7,I},{e0,e9,e10,I},{e6,e7,e10,I},"
             "{v3,e7,v7,W},{v3,e3,e7,W},{v1,v2,e9,E},{v2,e10,e9,E},{v1,e9,e0,S},"
             "{v3,v7,e6,N},{v3,e6,e10,N},{v2,v3,e10,N},{v2,e3,v3,D},"
             "{v2,e0,e3,D},{v2,v1,e0,D},{v7,e7,e6,U}",
    /* 15 */ "{e0,e7,e8,I},{e0,e6,e7,I},{e0,e1,e6,I},{e1,e10,e6,I},{v3,v0,e8,W},"
             "{v3,e8,e7,W},{v3,e7,v7,W},{v2,e10,e1,E},{v0,e0,e8,S},{v3,v7,e6,N},"
             "{v3,e6,e10,N},{v3,e10,v2,N},{v3,e0,v0,D},{v3,e1,e0,D},"
             "{v3,v2,e1,D},{v7,e7,e6,U},{e4,e5,e9,I},{v5,e9,e5,E},{v5,e4,e9,S},"
             "{v5,e5,e4,U}",
    /* 16 */ "{e1,e10,e3,I},{e3,e10,e6,I},{e3,e6,e8,I},{e5,e8,e6,I},"
             "{e5,e9,e8,I},{v4,v7,e8,W},{v7,e3,e8,W},{v3,e3,v7,W},{v2,e10,e1,E},"
             "{v5,e9,e5,E},{v4,e8,v5,S},{v5,e8,e9,S},{v2,v3,e10,N},"
             "{v3,e6,e10,N},{v3,v7,e6,N},{v2,e1,e3,D},{v2,e3,v3,D},"
             "{v4,v5,e5,U},{v4,e5,e6,U},{v4,e6,v7,U}",
    /* 17 */ "{e0,e9,e3,I},{e3,e9,e11,I},{e9,e10,e11,I},{v3,e3,e11,W},"
             "{v1,v2,e9,E},{v2,e10,e9,E},{v1,e9,e0,S},{v2,v3,e10,N},"
             "{v3,e11,e10,N},{v1,e0,v2,D},{v2,e0,e3,D},{v2,e3,v3,D}",
    /* 18 */ "{e0,e3,e8,I},{v0,e8,e3,W},{v0,e0,e8,S},{v0,e3,e0,D},{e5,e6,e10,I},"
             "{v6,e5,e10,E},{v6,e10,e6,N},{v6,e6,e5,U}",
    /* 19 */ "{e0,e3,e9,I},{e3,e8,e4,I},{e3,e4,e5,I},{e3,e5,e9,I},{v0,e8,e3,W},"
             "{v5,e9,e5,E},{v0,e0,e8,S},{e0,e9,e8,S},{e4,e8,e9,S},{v5,e4,e9,S},"
             "{v0,e3,e0,D},{v5,e5,e4,U}",
    /* 20 */ "{e3,e8,e9,I},{e1,e3,e9,I},{v0,e8,e3,W},{v1,e1,e9,E},{v0,e9,e8,S},"
             "{v0,v1,e9,S},{v0,e3,e1,D},{v0,e1,v1,D}",
    /* 21 */ "{e0,e3,e8,I},{v0,e8,e3,W},{v0,e0,e8,S},{v0,e3,e0,D}",
    /* 22 */ "",
};
// clang-format on

int enclosed_component_of(int caseId) {
  if (caseId >= 1 && caseId <= 16) return 1;
  if (caseId >= 17 && caseId <= 21) return 0;
  return -1;
}

NodeRef parse_node(const std::string& tok) {
  if (tok.size() < 2 || (tok[0] != 'v' && tok[0] != 'e'))
    throw std::logic_error("bad node token: " + tok);
  const int id = std::stoi(tok.substr(1));
  if (tok[0] == 'v') {
    if (id < 0 || id >= kVertexCount) throw std::logic_error("bad vertex: " + tok);
    return vnode(id);
  }
  if (id < 0 || id >= kEdgeCount) throw std::logic_error("bad edge: " + tok);
  return enode(id);
}

TriTag parse_tag(const std::string& tok) {
  if (tok.size() != 1) throw std::logic_error("bad tag token: " + tok);
  switch (tok[0]) {
    case 'I': return TriTag::I;
    case 'W': return TriTag::W;
    case 'E': return TriTag::E;
    case 'S': return TriTag::S;
    case 'N': return TriTag::N;
    case 'D': return TriTag::D;
    case 'U': return TriTag::U;
  }
  throw std::logic_error("bad tag token: " + tok);
}

std::vector<TriangleRef> parse_triangles(const std::string& text) {
  std::vector<TriangleRef> out;
  std::size_t pos = 0;
  while ((pos = text.find('{', pos)) != std::string::npos) {
    const std::size_t end = text.find('}', pos);
    if (end == std::string::npos) throw std::logic_error("unterminated triangle");
    std::string body = text.substr(pos + 1, end - pos - 1);
    std::vector<std::string> toks;
    std::size_t start = 0;
    while (start <= body.size()) {
      const std::size_t comma = body.find(',', start);
      if (comma == std::string::npos) {
        toks.push_back(body.substr(start));
        break;
      }
      toks.push_back(body.substr(start, comma - start));
      start = comma + 1;
    }
    if (toks.size() != 4) throw std::logic_error("triangle needs 4 tokens: " + body);
    TriangleRef t;
    t.nodes = {parse_node(toks[0]), parse_node(toks[1]), parse_node(toks[2])};
    t.tag = parse_tag(toks[3]);
    out.push_back(t);
    pos = end + 1;
  }
  return out;
}

int node_key(const NodeRef& n) {
  return (n.kind == NodeRef::Kind::Vertex ? 0 : 16) + n.id;
}

// Split a flat triangle list into connected parts (shared nodes connect),
// keeping the original triangle order inside each part and ordering parts by
// their first triangle.
std::vector<CasePart> split_parts(const std::vector<TriangleRef>& tris) {
  const int n = static_cast<int>(tris.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      bool shared = false;
      for (const auto& na : tris[a].nodes) {
        for (const auto& nb : tris[b].nodes) {
          if (na == nb) shared = true;
        }
      }
      if (shared) parent[find(a)] = find(b);
    }
  }
  std::map<int, int> rootToPart;
  std::vector<CasePart> parts;
  for (int i = 0; i < n; ++i) {
    const int root = find(i);
    auto it = rootToPart.find(root);
    if (it == rootToPart.end()) {
      it = rootToPart.emplace(root, static_cast<int>(parts.size())).first;
      parts.emplace_back();
    }
    parts[it->second].triangles.push_back(tris[i]);
  }
  return parts;
}

CaseEntry make_base_case(int caseId) {
  CaseEntry e;
  e.caseId = caseId;
  e.enclosedComponent = enclosed_component_of(caseId);
  e.parts = split_parts(parse_triangles(kCaseText[caseId]));
  return e;
}

Config reconstruct_pattern(int caseId) {
  if (caseId == 0) return 0x00;
  if (caseId == 22) return 0xFF;
  const CaseEntry& e = base_case(caseId);
  const int enc = e.enclosedComponent;
  std::array<std::optional<int>, 8> bits;
  std::array<bool, 12> used{};
  for (const auto& part : e.parts) {
    for (const auto& t : part.triangles) {
      for (const auto& n : t.nodes) {
        if (n.kind == NodeRef::Kind::Vertex) {
          if (bits[n.id] && *bits[n.id] != enc)
            throw std::runtime_error("case pattern contradiction");
          bits[n.id] = enc;
        } else {
          used[n.id] = true;
        }
      }
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int ei = 0; ei < kEdgeCount; ++ei) {
      const int a = kEdgeVertex[ei][0];
      const int b = kEdgeVertex[ei][1];
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        if (!bits[x]) continue;
        const int want = used[ei] ? 1 - *bits[x] : *bits[x];
        if (!bits[y]) {
          bits[y] = want;
          changed = true;
        } else if (*bits[y] != want) {
          throw std::runtime_error("case " + std::to_string(caseId) +
                                   " edge constraint contradiction");
        }
      }
    }
  }
  int pattern = 0;
  for (int i = 0; i < 8; ++i) {
    if (!bits[i])
      throw std::runtime_error("case " + std::to_string(caseId) +
                               " pattern underdetermined");
    pattern |= *bits[i] << i;
  }
  return static_cast<Config>(pattern);
}

struct Vec3 {
  double x, y, z;
};

Vec3 realize_unit(const NodeRef& n, const std::array<double, 12>& params) {
  auto corner = [](int v) {
    return Vec3{static_cast<double>(kVertexCoord[v][0]),
                static_cast<double>(kVertexCoord[v][1]),
                static_cast<double>(kVertexCoord[v][2])};
  };
  if (n.kind == NodeRef::Kind::Vertex) return corner(n.id);
  const Vec3 a = corner(kEdgeVertex[n.id][0]);
  const Vec3 b = corner(kEdgeVertex[n.id][1]);
  const double t = params[n.id];
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y), a.z + t * (b.z - a.z)};
}

double part_volume_unit(const CasePart& part, const std::array<double, 12>& params) {
  double vol = 0.0;
  for (const auto& t : part.triangles) {
    const Vec3 p0 = realize_unit(t.nodes[0], params);
    const Vec3 p1 = realize_unit(t.nodes[1], params);
    const Vec3 p2 = realize_unit(t.nodes[2], params);
    vol += (p0.x * (p1.y * p2.z - p1.z * p2.y) -
            p0.y * (p1.x * p2.z - p1.z * p2.x) +
            p0.z * (p1.x * p2.y - p1.y * p2.x)) /
           6.0;
  }
  return vol;
}

void flip_winding(CaseEntry& e) {
  for (auto& part : e.parts) {
    for (auto& t : part.triangles) std::swap(t.nodes[1], t.nodes[2]);
  }
}

CaseEntry rewrite_entry(const CaseEntry& base, const Rotation& r) {
  CaseEntry out;
  out.caseId = base.caseId;
  out.enclosedComponent = base.enclosedComponent;
  out.parts = base.parts;
  for (auto& part : out.parts) {
    for (auto& t : part.triangles) {
      for (auto& n : t.nodes) {
        n.id = (n.kind == NodeRef::Kind::Vertex)
                   ? static_cast<std::uint8_t>(r.vertexMap[n.id])
                   : static_cast<std::uint8_t>(r.edgeMap[n.id]);
      }
      if (t.tag != TriTag::I) {
        const int f = static_cast<int>(t.tag) - 1;
        t.tag = static_cast<TriTag>(r.faceMap[f] + 1);
      }
    }
  }
  return out;
}

void validate_entry_references(const TableEntry& te, Config cfg) {
  const int enc = te.entry.enclosedComponent;
  for (const auto& part : te.entry.parts) {
    for (const auto& t : part.triangles) {
      for (const auto& n : t.nodes) {
        if (n.kind == NodeRef::Kind::Vertex) {
          const int bit = cfg >> n.id & 1;
          if (bit != enc)
            throw std::runtime_error(
                "config " + std::to_string(cfg) + ": referenced vertex v" +
                std::to_string(n.id) + " is not on the enclosed component");
        } else {
          const int a = cfg >> kEdgeVertex[n.id][0] & 1;
          const int b = cfg >> kEdgeVertex[n.id][1] & 1;
          if (a == b)
            throw std::runtime_error("config " + std::to_string(cfg) +
                                     ": referenced edge e" +
                                     std::to_string(n.id) + " does not straddle");
        }
      }
    }
  }
}

}  // namespace

char tri_tag_name(TriTag t) {
  constexpr char names[] = {'I', 'W', 'E', 'S', 'N', 'D', 'U'};
  return names[static_cast<int>(t)];
}

int CaseEntry::triangleCount() const {
  int n = 0;
  for (const auto& p : parts) n += static_cast<int>(p.triangles.size());
  return n;
}

const CaseEntry& base_case(int caseId) {
  if (caseId < 0 || caseId > 22)
    throw std::invalid_argument("caseId out of range");
  static const std::array<CaseEntry, 23> cases = [] {
    std::array<CaseEntry, 23> out;
    for (int c = 0; c < 23; ++c) out[c] = make_base_case(c);
    return out;
  }();
  return cases[caseId];
}

const std::array<Config, 23>& base_patterns() {
  static const std::array<Config, 23> pats = [] {
    std::array<Config, 23> out{};
    for (int c = 0; c < 23; ++c) out[c] = reconstruct_pattern(c);
    return out;
  }();
  return pats;
}

LookupTable build_lookup_table() {
  LookupTable table;
  TableBuildReport& rep = table.report;

  const GroupReport group = validate_rotation_group();
  if (!group.ok()) {
    std::string msg = "rotation group validation failed:";
    for (const auto& v : group.violations) msg += " " + v;
    throw std::runtime_error(msg);
  }

  const auto orbits = config_orbits();
  rep.orbitCount = static_cast<int>(orbits.size());
  if (orbits.size() != 23)
    throw std::runtime_error("expected 23 config orbits, found " +
                             std::to_string(orbits.size()));

  std::array<int, 256> orbitOf{};
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    for (Config c : orbits[i]) orbitOf[c] = static_cast<int>(i);
  }

  const auto& patterns = base_patterns();
  std::array<int, 23> caseOfOrbit;
  caseOfOrbit.fill(-1);
  for (int cid = 0; cid < 23; ++cid) {
    const int orb = orbitOf[patterns[cid]];
    if (caseOfOrbit[orb] != -1)
      throw std::runtime_error("cases " + std::to_string(caseOfOrbit[orb]) +
                               " and " + std::to_string(cid) +
                               " land in the same orbit");
    caseOfOrbit[orb] = cid;
    rep.orbitSizes[cid] = static_cast<int>(orbits[orb].size());
  }

  const auto& rots = rotations();
  for (int cfg = 0; cfg < 256; ++cfg) {
    const int cid = caseOfOrbit[orbitOf[cfg]];
    int rotIndex = -1;
    for (int ri = 0; ri < kRotationCount; ++ri) {
      if (rotate_config(rots[ri], patterns[cid]) == cfg) {
        rotIndex = ri;
        break;
      }
    }
    if (rotIndex < 0)
      throw std::runtime_error("no rotation maps case " + std::to_string(cid) +
                               " onto config " + std::to_string(cfg));
    TableEntry te;
    te.baseCaseId = cid;
    te.rotationIndex = rotIndex;
    te.entry = rewrite_entry(base_case(cid), rots[rotIndex]);
    table.entries[cfg] = std::move(te);
  }

  // Winding audit at the symmetric parameters: all part volumes must come out
  // one sign; a uniformly negative table gets one global flip, mixed signs
  // abort.
  std::array<double, 12> half;
  half.fill(0.5);
  int positive = 0;
  int negative = 0;
  for (int cfg = 0; cfg < 256; ++cfg) {
    for (const auto& part : table.entries[cfg].entry.parts) {
      const double v = part_volume_unit(part, half);
      (v > 0 ? positive : negative)++;
    }
  }
  if (negative > 0 && positive > 0)
    throw std::runtime_error("mixed part-volume signs across the table");
  if (negative > 0) {
    for (auto& te : table.entries) flip_winding(te.entry);
    rep.windingFlipped = true;
    rep.notes.push_back("applied global winding flip");
  }

  for (int cfg = 0; cfg < 256; ++cfg) {
    validate_entry_references(table.entries[cfg], static_cast<Config>(cfg));
    const auto wt = validate_watertight(table.entries[cfg].entry, half);
    if (!wt.ok())
      throw std::runtime_error("config " + std::to_string(cfg) +
                               " is not watertight: " +
                               wt.violations.front().detail);
  }

  rep.valid = true;
  return table;
}

const LookupTable& lookup_table() {
  static const LookupTable table = build_lookup_table();
  return table;
}

std::pair<int, int> classify_config(Config c) {
  const TableEntry& te = lookup_table().entries[c];
  return {te.baseCaseId, te.rotationIndex};
}

WatertightReport validate_watertight(const CaseEntry& entry,
                                     const std::array<double, 12>& params) {
  WatertightReport rep;
  for (std::size_t pi = 0; pi < entry.parts.size(); ++pi) {
    const auto& tris = entry.parts[pi].triangles;
    // key: undirected node pair; value: (count, first direction, balanced)
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> segs;
    for (const auto& t : tris) {
      for (int k = 0; k < 3; ++k) {
        const NodeRef& a = t.nodes[k];
        const NodeRef& b = t.nodes[(k + 1) % 3];
        const int ka = node_key(a);
        const int kb = node_key(b);
        segs[{std::min(ka, kb), std::max(ka, kb)}].push_back({ka, kb});
      }
    }
    auto unkey = [](int k) {
      return k < 16 ? vnode(k) : enode(k - 16);
    };
    for (const auto& [key, dirs] : segs) {
      const bool paired =
          dirs.size() == 2 && dirs[0].first == dirs[1].second &&
          dirs[0].second == dirs[1].first;
      if (!paired) {
        WatertightViolation v;
        v.partIndex = static_cast<int>(pi);
        v.a = unkey(key.first);
        v.b = unkey(key.second);
        v.incidentCount = static_cast<int>(dirs.size());
        v.detail = "part " + std::to_string(pi) + " segment " +
                   std::string(v.a.kind == NodeRef::Kind::Vertex ? "v" : "e") +
                   std::to_string(v.a.id) + "-" +
                   std::string(v.b.kind == NodeRef::Kind::Vertex ? "v" : "e") +
                   std::to_string(v.b.id) + " incident to " +
                   std::to_string(dirs.size()) + " triangle(s)" +
                   (dirs.size() == 2 ? " with matching direction" : "");
        rep.violations.push_back(std::move(v));
      }
    }
    // Distinct realized nodes for params strictly inside (0,1).
    std::vector<std::pair<int, Vec3>> pts;
    for (const auto& t : tris) {
      for (const auto& n : t.nodes) {
        const int key = node_key(n);
        bool known = false;
        for (const auto& [k, p] : pts) {
          if (k == key) known = true;
        }
        if (!known) pts.push_back({key, realize_unit(n, params)});
      }
    }
    for (std::size_t a = 0; a < pts.size(); ++a) {
      for (std::size_t b = a + 1; b < pts.size(); ++b) {
        const auto& pa = pts[a].second;
        const auto& pb = pts[b].second;
        const double d2 = (pa.x - pb.x) * (pa.x - pb.x) +
                          (pa.y - pb.y) * (pa.y - pb.y) +
                          (pa.z - pb.z) * (pa.z - pb.z);
        if (d2 == 0.0) {
          WatertightViolation v;
          v.partIndex = static_cast<int>(pi);
          v.a = pts[a].first < 16 ? vnode(pts[a].first) : enode(pts[a].first - 16);
          v.b = pts[b].first < 16 ? vnode(pts[b].first) : enode(pts[b].first - 16);
          v.incidentCount = 0;
          v.detail = "part " + std::to_string(pi) +
                     ": two nodes realize to the same point";
          rep.violations.push_back(std::move(v));
        }
      }
    }
  }
  return rep;
}

std::string triangle_to_string(const TriangleRef& t) {
  std::string s = "{";
  for (const auto& n : t.nodes) {
    s += (n.kind == NodeRef::Kind::Vertex ? 'v' : 'e');
    s += std::to_string(n.id);
    s += ',';
  }
  s += tri_tag_name(t.tag);
  s += '}';
  return s;
}

std::string entry_to_string(const CaseEntry& e) {
  std::string s;
  for (const auto& part : e.parts) {
    for (const auto& t : part.triangles) {
      if (!s.empty()) s += ',';
      s += triangle_to_string(t);
    }
  }
  return s.empty() ? "(none)" : s;
}

}  // namespace mcvol
