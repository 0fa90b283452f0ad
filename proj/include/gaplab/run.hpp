#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gaplab {

enum class Command { simulate, closed, general, atlas, compare, density };
enum class OutputFormat { csv, json };

Command parse_command(const std::string& s);
std::string to_string(Command c);

struct LambdaGrid {
  // Either a range or an explicit list.
  double start = 0;
  double stop = 0;
  double step = 0;
  std::vector<double> values;

  bool is_range() const noexcept { return values.empty(); }
  static LambdaGrid parse_range(const std::string& spec);  // "start:stop:step"
  static LambdaGrid parse_list(const std::string& spec);   // "0,0.5,1.25"
};

// Points of the grid. Ranges get the breakpoints {1, 1/t, 2, 2/t} inserted when
// they fall inside [start, stop]; t may be absent (atlas).
std::vector<double> expand_grid(const LambdaGrid& grid, std::optional<double> t);

struct RunSpec {
  Command command = Command::general;
  std::string t;
  std::optional<std::int64_t> J;
  std::optional<int> h;
  std::optional<LambdaGrid> lambda_grid;
  double tol = 1e-10;
  std::string output;  // empty or "-" writes to the output stream
  OutputFormat format = OutputFormat::csv;
  bool meta = true;
  std::string gap_dump;        // simulate: optional binary dump of the sorted gaps
  double empirical_tol = 0.03;  // compare: empirical vs analytic sup norm
  double engine_tol = 1e-7;     // compare: closed vs general sup norm
};

// Throws std::invalid_argument when the spec violates its invariants.
void validate(const RunSpec& spec);

// Executes the command; returns the process exit status. Diagnostics go to err.
int run(const RunSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace gaplab
