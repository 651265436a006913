#include "dysthe/io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <stdexcept>

#include "dysthe/spectral.hpp"

static_assert(std::endian::native == std::endian::little,
              "snapshot format assumes a little-endian host");

namespace dysthe {
namespace {

constexpr char kMagic[8] = {'D', 'Y', 'S', 'N', 'A', 'P', '0', '1'};
constexpr std::uint32_t kSnapshotVersion = 1;

template <typename T>
void write_raw(std::ofstream& out, const T& value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
void read_raw(std::ifstream& in, T& value) {
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
}

}  // namespace

void write_snapshot(const FieldState& f, const std::string& path) {
  const FieldState phys = to_physical(f);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("io: cannot write '" + path + "'");
  out.write(kMagic, sizeof(kMagic));
  write_raw(out, kSnapshotVersion);
  write_raw(out, static_cast<std::uint32_t>(phys.grid->nx));
  write_raw(out, static_cast<std::uint32_t>(phys.grid->ny));
  write_raw(out, phys.grid->Lx);
  write_raw(out, phys.grid->Ly);
  write_raw(out, phys.time);
  for (const cplx& v : phys.values) {
    write_raw(out, v.real());
    write_raw(out, v.imag());
  }
  if (!out) throw std::runtime_error("io: short write to '" + path + "'");
}

FieldState read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("io: cannot read '" + path + "'");
  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in || !std::equal(magic, magic + 8, kMagic)) {
    throw std::runtime_error("io: '" + path + "' is not a field snapshot");
  }
  std::uint32_t version = 0, nx = 0, ny = 0;
  double Lx = 0.0, Ly = 0.0, t = 0.0;
  read_raw(in, version);
  if (version != kSnapshotVersion) {
    throw std::runtime_error("io: unsupported snapshot version in '" + path + "'");
  }
  read_raw(in, nx);
  read_raw(in, ny);
  read_raw(in, Lx);
  read_raw(in, Ly);
  read_raw(in, t);
  if (!in) throw std::runtime_error("io: truncated snapshot '" + path + "'");

  FieldState f;
  f.grid = ny == 1 ? make_grid_1d(static_cast<int>(nx), Lx)
                   : make_grid(static_cast<int>(nx), static_cast<int>(ny), Lx, Ly);
  f.rep = Rep::physical;
  f.time = t;
  f.values.resize(f.grid->size());
  for (cplx& v : f.values) {
    double re = 0.0, im = 0.0;
    read_raw(in, re);
    read_raw(in, im);
    v = cplx(re, im);
  }
  if (!in) throw std::runtime_error("io: truncated snapshot '" + path + "'");
  return f;
}

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // print the two signed zeros identically
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), v);
  return std::string(buffer, result.ptr);
}

std::string format_complex(cplx v) {
  std::string text = format_double(v.real());
  const std::string imag = format_double(v.imag());
  if (imag.empty() || imag.front() != '-') text += '+';
  text += imag;
  text += 'i';
  return text;
}

CsvWriter::CsvWriter(const std::string& path,
                     const std::vector<std::string>& header)
    : out_(path, std::ios::binary) {
  if (!out_) throw std::runtime_error("io: cannot write '" + path + "'");
  text_row(header);
}

void CsvWriter::row(const std::vector<double>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (const double v : values) cells.push_back(format_double(v));
  text_row(cells);
}

void CsvWriter::text_row(const std::vector<std::string>& cells) {
  if (!out_.is_open()) throw std::runtime_error("io: csv writer is closed");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
  if (!out_) throw std::runtime_error("io: csv write failed");
}

void CsvWriter::close() {
  if (out_.is_open()) {
    out_.flush();
    out_.close();
  }
}

void write_manifest(const std::string& dir, const std::string& config_echo,
                    std::uint64_t seed) {
  const std::string path = dir + "/manifest.txt";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("io: cannot write '" + path + "'");
  out << "version = 1\n";
  out << "seed = " << seed << "\n";
  out << "# --- config ---\n";
  out << config_echo;
  if (config_echo.empty() || config_echo.back() != '\n') out << '\n';
  if (!out) throw std::runtime_error("io: manifest write failed");
}

void write_done(const std::string& dir) {
  const std::string path = dir + "/DONE";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("io: cannot write '" + path + "'");
  out << "DONE\n";
  if (!out) throw std::runtime_error("io: DONE write failed");
}

}  // namespace dysthe
