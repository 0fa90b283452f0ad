#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gaplab/core_model.hpp"
#include "gaplab/fkr_profile.hpp"

namespace gaplab {

// h = floor(2/t), exact.
int interference_depth(const RationalScale& t);

// Shared, lazily built profiles; references stay valid for the program lifetime.
const FkrProfile& cached_profile(int k, int r);
const SuperlevelFunction& cached_superlevel(int k, int r);

struct IntegralBounds {
  int k;
  int r;
  RationalScale t;
  double M_minus;
  double M_plus;
  int h;
};

// Integration window in w for the pair (k, r); empty when M- > M+.
std::optional<IntegralBounds> integral_bounds(int k, int r, const RationalScale& t, double lambda);

// The offset window [R, S] in units of the row index.
struct OffsetWindow {
  double R;
  double S;
};
OffsetWindow offset_window(int k, int r, double t, double w);

// int_0^1 mu(A_{k,r,w}(x)) dx in collapsed form (S - R) * superlevel(y_w).
double x_integral(int k, int r, const RationalScale& t, double w, double lambda);

// Interior breakpoints in w of the pair's integrand.
std::vector<double> w_breakpoints(int k, int r, double t, double lambda);

// Limit gap distribution by adaptive quadrature of the superlevel-measure
// integral; absolute error target tol.
double G_general_numeric(const RationalScale& t, double lambda, double tol);

GapCurve general_curve(const RationalScale& t, std::span<const double> lambdas, double tol);

}  // namespace gaplab
