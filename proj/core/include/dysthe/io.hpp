#pragma once

// Bit-exact artifact formats: binary field snapshots, CSV series, run
// manifests, and the DONE success marker.
//
// Snapshot format (all little-endian): 8-byte magic "DYSNAP01", u32
// version=1, u32 nx, u32 ny, f64 Lx, f64 Ly, f64 t, then nx*ny interleaved
// (re, im) binary64 pairs, row-major in x (x outer, y inner).
//
// All numeric text is written with std::to_chars (shortest round-trip
// form, locale-independent) and "\n" line endings, so identical runs yield
// byte-identical files.

#include <fstream>
#include <string>
#include <vector>

#include "dysthe/field.hpp"

namespace dysthe {

void write_snapshot(const FieldState& f, const std::string& path);
FieldState read_snapshot(const std::string& path);

// Shortest round-trip decimal text for a double / complex value.
std::string format_double(double v);
std::string format_complex(cplx v);

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);
  void row(const std::vector<double>& values);
  void text_row(const std::vector<std::string>& cells);
  void close();

 private:
  std::ofstream out_;
};

// Manifest: code version, seed, then the verbatim config text.
void write_manifest(const std::string& dir, const std::string& config_echo,
                    std::uint64_t seed);

// Success marker, written last.
void write_done(const std::string& dir);

}  // namespace dysthe
