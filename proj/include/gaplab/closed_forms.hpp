#pragma once

#include <array>
#include <vector>

#include "gaplab/core_model.hpp"

namespace gaplab {

// Limit gap distribution for t > 2/3 (three closed-form ranges). Returns 0 for
// lambda >= 2/t. Throws UnsupportedClosedForm for t <= 2/3.
double G_closed(double t, double lambda);

// Density -dG/dlambda; at branch points the mean of the one-sided values.
double g_density(double t, double lambda);

// Coefficients over {t, t^2, t/lambda, t log lambda, t log t}.
using AlphaVector = std::array<ExactConst, 5>;

AlphaVector density_from_kappa(const KappaVector& kappa);
double eval_alpha_basis(const AlphaVector& alpha, double t, double lambda);

struct Border {
  ConstraintKind kind;
  Rational c;
};

// Residuals (left minus right) of the four identities that continuity of the
// basis expansion imposes along the border line. Exact; log(c) is expanded in
// logs of primes.
std::array<ExactConst, 4> check_boundary_relations(const KappaVector& ki, const KappaVector& kj, const Border& border);

// 1/(2 t J^3); requires t J^2 > J.
double asymptotic_delta_av(const SceneConfig& scene);

// The eight reference coefficient rows valid for t > 2/3 (index 0 is the zero
// region lambda t >= 2) and the matching regions.
const std::array<KappaVector, 8>& reference_kappa_rows();
const std::vector<Region>& reference_regions();

// Breakpoints in lambda of the closed forms at a given t, inside (0, 2/t].
std::vector<double> closed_form_breakpoints(double t);

}  // namespace gaplab
