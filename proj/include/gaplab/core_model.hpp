#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaplab/exact_const.hpp"
#include "gaplab/rational.hpp"

namespace gaplab {

// Raised when a closed form is requested outside the range where one exists.
class UnsupportedClosedForm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Observer at (-t J^2, 0) looking at the lattice points of [-J, J] x [0, J].
struct SceneConfig {
  RationalScale t;
  std::int64_t J;

  SceneConfig(RationalScale scale, std::int64_t half_width);

  std::int64_t point_count() const noexcept { return (2 * J + 1) * (J + 1); }
  // Exact observer abscissa -t J^2.
  Rational observer_x() const;
};

struct GapCurve {
  std::vector<double> lambdas;
  std::vector<double> values;
  std::string engine;                // "empirical", "closed", "general", "density", ...
  std::optional<SceneConfig> scene;  // empty for limit curves
  std::optional<RationalScale> t;

  bool is_non_increasing(double slack = 0.0) const;
};

// Coefficients over the basis
//   {1, t, lambda t, lambda t^2, t log lambda, lambda t log lambda, t log t, lambda t log t}.
using KappaVector = std::array<ExactConst, 8>;

// k1 + k2 t + ... evaluated in double precision. Throws std::domain_error for
// lambda == 0 with a non-zero log(lambda) coefficient.
double eval_kappa_basis(const KappaVector& kappa, double t, double lambda);

enum class ConstraintKind { lambda, t, lambda_t };
enum class ConstraintOp { le, ge };

struct Constraint {
  ConstraintKind kind;
  ConstraintOp op;
  Rational c;

  // Exact test of a double-precision point (doubles are converted exactly).
  bool holds(double t, double lambda) const;
  bool holds(const Rational& t, const Rational& lambda) const;

  friend bool operator==(const Constraint& a, const Constraint& b) {
    return a.kind == b.kind && a.op == b.op && a.c == b.c;
  }
};

struct Region {
  std::string name;
  std::vector<Constraint> constraints;
  KappaVector kappa;

  bool contains(double t, double lambda) const;
  bool contains(const Rational& t, const Rational& lambda) const;
  bool is_zero() const;
};

// Regions covering 2/(h+1) <= t <= 2/h, 0 <= lambda t <= 2 (closed borders), plus
// the zero region lambda t >= 2 stored first.
struct RegionAtlas {
  int h = 0;
  std::vector<Rational> t_breakpoints;
  std::vector<Region> regions;
};

// First region containing (t, lambda); lambda t >= 2 always resolves to the zero
// region. Returns nullptr when the point lies outside the atlas strip.
const Region* region_lookup(const RegionAtlas& atlas, double t, double lambda);

std::string to_string(ConstraintKind kind);
std::string to_string(ConstraintOp op);
ConstraintKind parse_constraint_kind(const std::string& s);
ConstraintOp parse_constraint_op(const std::string& s);

}  // namespace gaplab
