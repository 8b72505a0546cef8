#pragma once

#include <string>

#include "mcvol/grid.hpp"

namespace mcvol {

// Node-value file, text header followed by a little-endian float64 payload:
//
//   SFIELD1
//   nodes NX NY NZ
//   origin X Y Z
//   spacing DX DY DZ
//   data float64-le
//   <NX*NY*NZ doubles, x fastest>
struct FieldData {
  GridSpec spec;
  std::vector<double> values;
};

void write_field_file(const std::string& path, const FieldData& data);

// Throws DataError on malformed headers, truncated or oversized payloads,
// and non-finite values.
FieldData read_field_file(const std::string& path);

// Wavefront-style listing: "v x y z" and 1-based "f a b c" lines, winding
// preserved.
void write_obj(const std::string& path, const TriangleMesh& mesh);

}  // namespace mcvol
