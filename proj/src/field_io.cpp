#include "mcvol/field_io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace mcvol {

namespace {

std::string header_line(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line))
    throw DataError(std::string("missing ") + what + " line");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

void encode_le(double v, char out[8]) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  for (int b = 0; b < 8; ++b)
    out[b] = static_cast<char>(bits >> (8 * b) & 0xFF);
}

double decode_le(const char in[8]) {
  std::uint64_t bits = 0;
  for (int b = 0; b < 8; ++b)
    bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(in[b]))
            << (8 * b);
  return std::bit_cast<double>(bits);
}

}  // namespace

void write_field_file(const std::string& path, const FieldData& data) {
  if (static_cast<long long>(data.values.size()) != data.spec.nodeTotal())
    throw DataError("value count does not match the grid");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open " + path + " for writing");

  out << "SFIELD1\n";
  out << "nodes " << data.spec.nodeCounts[0] << ' ' << data.spec.nodeCounts[1]
      << ' ' << data.spec.nodeCounts[2] << '\n';
  out << "origin " << format_g17(data.spec.origin.x()) << ' '
      << format_g17(data.spec.origin.y()) << ' '
      << format_g17(data.spec.origin.z()) << '\n';
  out << "spacing " << format_g17(data.spec.spacing.x()) << ' '
      << format_g17(data.spec.spacing.y()) << ' '
      << format_g17(data.spec.spacing.z()) << '\n';
  out << "data float64-le\n";

  char buf[8];
  for (double v : data.values) {
    encode_le(v, buf);
    out.write(buf, 8);
  }
  if (!out) throw DataError("write to " + path + " failed");
}

FieldData read_field_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);

  if (header_line(in, "magic") != "SFIELD1")
    throw DataError(path + " is not an SFIELD1 file");

  FieldData data;
  {
    std::istringstream ls(header_line(in, "nodes"));
    std::string key;
    ls >> key >> data.spec.nodeCounts[0] >> data.spec.nodeCounts[1] >>
        data.spec.nodeCounts[2];
    if (!ls || key != "nodes") throw DataError("malformed nodes line");
    for (int a = 0; a < 3; ++a)
      if (data.spec.nodeCounts[a] < 2)
        throw DataError("node counts must be at least 2 per axis");
  }
  {
    std::istringstream ls(header_line(in, "origin"));
    std::string key;
    ls >> key >> data.spec.origin.x() >> data.spec.origin.y() >>
        data.spec.origin.z();
    if (!ls || key != "origin") throw DataError("malformed origin line");
  }
  {
    std::istringstream ls(header_line(in, "spacing"));
    std::string key;
    ls >> key >> data.spec.spacing.x() >> data.spec.spacing.y() >>
        data.spec.spacing.z();
    if (!ls || key != "spacing") throw DataError("malformed spacing line");
    for (int a = 0; a < 3; ++a)
      if (!(data.spec.spacing[a] > 0.0))
        throw DataError("spacing must be positive");
  }
  if (header_line(in, "data") != "data float64-le")
    throw DataError("unsupported data encoding");

  const long long count = data.spec.nodeTotal();
  data.values.resize(count);
  char buf[8];
  for (long long idx = 0; idx < count; ++idx) {
    if (!in.read(buf, 8))
      throw DataError("truncated payload: expected " + std::to_string(count) +
                      " values, got " + std::to_string(idx));
    data.values[idx] = decode_le(buf);
    if (!std::isfinite(data.values[idx]))
      throw DataError("non-finite value at payload index " +
                      std::to_string(idx));
  }
  if (in.read(buf, 1))
    throw DataError("trailing bytes after " + std::to_string(count) +
                    " values");
  return data;
}

void write_obj(const std::string& path, const TriangleMesh& mesh) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open " + path + " for writing");
  for (const auto& v : mesh.vertices)
    out << "v " << format_g17(v.x()) << ' ' << format_g17(v.y()) << ' '
        << format_g17(v.z()) << '\n';
  for (const auto& f : mesh.faces)
    out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
  if (!out) throw DataError("write to " + path + " failed");
}

}  // namespace mcvol
