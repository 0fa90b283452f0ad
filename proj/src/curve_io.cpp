#include "gaplab/curve_io.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <ctime>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "gaplab/atlas_json.hpp"

namespace gaplab {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (x == 0) return "0";  // also folds -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_csv_preamble(std::ostream& os, const OutputMeta& meta) {
  os << "# schema=" << kSchemaVersion << '\n';
  for (const auto& [k, v] : meta.fields) os << "# " << k << '=' << v << '\n';
  if (meta.timestamp) os << "# generated=" << utc_timestamp() << '\n';
}

void write_curve_csv(std::ostream& os, const GapCurve& curve, const OutputMeta& meta,
                     const std::string& value_column) {
  if (curve.lambdas.size() != curve.values.size()) throw std::invalid_argument("write_curve_csv: size mismatch");
  write_csv_preamble(os, meta);
  os << "lambda," << value_column << '\n';
  for (std::size_t i = 0; i < curve.lambdas.size(); ++i)
    os << format_number(curve.lambdas[i]) << ',' << format_number(curve.values[i]) << '\n';
}

nlohmann::json curve_to_json(const GapCurve& curve, const OutputMeta& meta, const std::string& value_column) {
  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["engine"] = curve.engine;
  if (curve.t) j["t"] = curve.t->str();
  if (curve.scene) j["J"] = curve.scene->J;
  for (const auto& [k, v] : meta.fields) j["meta"][k] = v;
  if (meta.timestamp) j["generated"] = utc_timestamp();
  j["lambda"] = curve.lambdas;
  j[value_column] = curve.values;
  return j;
}

namespace {

static_assert(std::endian::native == std::endian::little, "gap dumps assume a little-endian host");

template <class T>
void put(std::ostream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
T get(std::istream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof v);
  if (!is) throw std::runtime_error("read_gap_dump: truncated file");
  return v;
}

}  // namespace

void write_gap_dump(const std::filesystem::path& path, std::vector<double> gaps) {
  std::sort(gaps.begin(), gaps.end());
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("write_gap_dump: cannot open " + path.string());
  os.write("GAPS", 4);
  put<std::uint32_t>(os, kGapDumpVersion);
  put<std::uint64_t>(os, gaps.size());
  os.write(reinterpret_cast<const char*>(gaps.data()), static_cast<std::streamsize>(gaps.size() * sizeof(double)));
  if (!os) throw std::runtime_error("write_gap_dump: write failed for " + path.string());
}

std::vector<double> read_gap_dump(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("read_gap_dump: cannot open " + path.string());
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, "GAPS", 4) != 0) throw std::runtime_error("read_gap_dump: bad magic");
  if (get<std::uint32_t>(is) != kGapDumpVersion) throw std::runtime_error("read_gap_dump: unsupported version");
  const auto n = get<std::uint64_t>(is);
  std::vector<double> gaps(n);
  is.read(reinterpret_cast<char*>(gaps.data()), static_cast<std::streamsize>(n * sizeof(double)));
  if (!is) throw std::runtime_error("read_gap_dump: truncated file");
  return gaps;
}

}  // namespace gaplab
