#include <iostream>

#include "CLI11.hpp"

#include "gaplab/run.hpp"

namespace {

struct Options {
  std::string t;
  std::int64_t J = 0;
  int h = -1;
  std::string grid;
  std::string lambdas;
  double tol = 1e-10;
  std::string output;
  std::string format = "csv";
  bool no_meta = false;
  std::string dump;
  double emp_tol = 0.03;
  double engine_tol = 1e-7;
};

void add_curve_options(CLI::App* cmd, Options& o, bool needs_J) {
  cmd->add_option("--t", o.t, "observer scale t as p/q or an exact decimal")->required();
  if (needs_J) cmd->add_option("--J", o.J, "half-width of the lattice rectangle")->required();
  auto* g = cmd->add_option("--grid", o.grid, "lambda range start:stop:step");
  auto* l = cmd->add_option("--lambdas", o.lambdas, "explicit comma-separated lambda list");
  g->excludes(l);
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gaplab: gap distribution of lattice-point angles seen from (-t J^2, 0)"};
  app.require_subcommand(1);
  Options o;

  auto* simulate = app.add_subcommand("simulate", "empirical G from the exact angular order");
  add_curve_options(simulate, o, true);
  simulate->add_option("--dump-gaps", o.dump, "binary dump of the sorted gaps");

  auto* closed = app.add_subcommand("closed", "closed-form G for t > 2/3");
  add_curve_options(closed, o, false);
  auto* general = app.add_subcommand("general", "G from the superlevel-measure integral, any t > 0");
  add_curve_options(general, o, false);
  auto* density = app.add_subcommand("density", "density g = -dG/dlambda for t > 2/3");
  add_curve_options(density, o, false);

  auto* compare = app.add_subcommand("compare", "empirical vs closed vs general, with sup-norm summary");
  add_curve_options(compare, o, true);
  compare->add_option("--emp-tol", o.emp_tol, "allowed empirical sup-norm deviation");
  compare->add_option("--engine-tol", o.engine_tol, "allowed closed vs general deviation");

  auto* atlas = app.add_subcommand("atlas", "exact region atlas for the strip 2/(h+1) < t <= 2/h");
  atlas->set_help_flag("--help", "print this help and exit");  // -h would clash with --h
  atlas->add_option("--h", o.h, "interference depth")->required()->check(CLI::NonNegativeNumber);

  for (auto* sub : {simulate, closed, general, density, compare, atlas}) {
    sub->add_option("--output,-o", o.output, "output path (default stdout)");
    sub->add_flag("--no-meta", o.no_meta, "omit timestamps and runtimes for byte-identical output");
    sub->add_option("--tol", o.tol, "absolute tolerance of the general integral")->check(CLI::PositiveNumber);
  }

  CLI11_PARSE(app, argc, argv);

  gaplab::RunSpec spec;
  try {
    spec.command = gaplab::parse_command(app.get_subcommands().front()->get_name());
    spec.t = o.t;
    if (o.J != 0) spec.J = o.J;
    if (o.h >= 0) spec.h = o.h;
    if (!o.grid.empty()) spec.lambda_grid = gaplab::LambdaGrid::parse_range(o.grid);
    if (!o.lambdas.empty()) spec.lambda_grid = gaplab::LambdaGrid::parse_list(o.lambdas);
    spec.tol = o.tol;
    spec.output = o.output;
    spec.format = o.format == "json" ? gaplab::OutputFormat::json : gaplab::OutputFormat::csv;
    spec.meta = !o.no_meta;
    spec.gap_dump = o.dump;
    spec.empirical_tol = o.emp_tol;
    spec.engine_tol = o.engine_tol;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return gaplab::run(spec, std::cout, std::cerr);
}
