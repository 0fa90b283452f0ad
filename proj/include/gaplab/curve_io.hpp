#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gaplab/core_model.hpp"

namespace gaplab {

// Header comment lines of CSV outputs: always "# schema=1", then the extra
// key=value fields, then "# generated=<UTC time>" when timestamp is set.
struct OutputMeta {
  bool timestamp = true;
  std::vector<std::pair<std::string, std::string>> fields;
};

// 12 significant digits.
std::string format_number(double x);

std::string utc_timestamp();

void write_csv_preamble(std::ostream& os, const OutputMeta& meta);

// "lambda,<value_column>" followed by one row per grid point.
void write_curve_csv(std::ostream& os, const GapCurve& curve, const OutputMeta& meta,
                     const std::string& value_column = "G");

nlohmann::json curve_to_json(const GapCurve& curve, const OutputMeta& meta, const std::string& value_column = "G");

// Sorted gaps as little-endian doubles behind a 16-byte header: "GAPS", u32
// version, u64 count.
inline constexpr std::uint32_t kGapDumpVersion = 1;
void write_gap_dump(const std::filesystem::path& path, std::vector<double> gaps);
std::vector<double> read_gap_dump(const std::filesystem::path& path);

}  // namespace gaplab
