#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gaplab/closed_forms.hpp"
#include "gaplab/core_model.hpp"

namespace gaplab {

// Exact region atlas for the strip 2/(h+1) < t <= 2/h (t >= 2 when h = 0).
// Each pair (k, r) contributes a w-integral whose limits and interior
// breakpoints have the shapes c, c t or c lambda t; every comparison between
// two of them is a line t = c, lambda = c or lambda t = c. The strip is cut by
// all such lines, each cell is integrated in closed form, and cells with equal
// coefficients are merged.
RegionAtlas G_general_symbolic(int h);

// Coefficients of the closed form valid around the rational point (t, lambda),
// which must avoid every critical line of its strip.
KappaVector symbolic_kappa_at(int h, const Rational& t, const Rational& lambda);

struct BorderCheck {
  std::string first;
  std::string second;
  Border border;
  std::array<ExactConst, 4> residuals;
  bool exact_zero = false;
  double max_value_gap = 0;  // over sampled border points
};

struct AtlasReport {
  bool ok = true;
  std::size_t region_count = 0;
  std::vector<BorderCheck> borders;
  std::vector<std::string> failures;

  nlohmann::json to_json() const;
};

// Border identities between all adjacent regions, numeric continuity at 100
// points per border, G = 1 along lambda = 0 and G = 0 along lambda t = 2.
AtlasReport validate_atlas(const RegionAtlas& atlas, double continuity_tol = 1e-12);

}  // namespace gaplab
