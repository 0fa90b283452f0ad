#include "gaplab/general_numeric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "gaplab/parallel.hpp"
#include "gaplab/quadrature.hpp"

namespace gaplab {

const GaussLegendre& gauss_legendre_rule(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussLegendre>> rules;
  std::lock_guard lock(mutex);
  auto& slot = rules[n];
  if (!slot) slot = std::make_unique<GaussLegendre>(n);
  return *slot;
}

int interference_depth(const RationalScale& t) {
  return static_cast<int>((2 * t.den()) / t.num());
}

namespace {

struct ProfileEntry {
  FkrProfile profile;
  SuperlevelFunction superlevel;
  explicit ProfileEntry(FkrProfile p) : profile(std::move(p)), superlevel(profile) {}
};

const ProfileEntry& cached_entry(int k, int r) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<ProfileEntry>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{k, r}];
  if (!slot) slot = std::make_unique<ProfileEntry>(build_fkr_profile(k, r));
  return *slot;
}

}  // namespace

const FkrProfile& cached_profile(int k, int r) { return cached_entry(k, r).profile; }
const SuperlevelFunction& cached_superlevel(int k, int r) { return cached_entry(k, r).superlevel; }

std::optional<IntegralBounds> integral_bounds(int k, int r, const RationalScale& t, double lambda) {
  const double td = t.to_double();
  const double lo = std::max(lambda * td / 2, (k + r) * td / 2);
  const double hi = std::min(1.0, (k + r + 2) * td / 2);
  if (lo > hi) return std::nullopt;
  return IntegralBounds{k, r, t, lo, hi, interference_depth(t)};
}

OffsetWindow offset_window(int k, int r, double t, double w) {
  const double w2 = w * w;
  return {std::max(k * t / w2 - 1 / w, 1 / w - (r + 1) * t / w2),
          std::min((k + 1) * t / w2 - 1 / w, 1 / w - r * t / w2)};
}

namespace {

double measure_factor(int k, int r, double y) {
  if (k == 0 && r == 0) return 1.0;  // no fractional-part constraint
  return cached_superlevel(k, r)(y);
}

}  // namespace

double x_integral(int k, int r, const RationalScale& t, double w, double lambda) {
  auto bounds = integral_bounds(k, r, t, lambda);
  if (!bounds) throw std::domain_error("x_integral: empty window (M- > M+) for this pair");
  const double slack = 1e-14 * std::max(1.0, std::abs(w));
  if (w < bounds->M_minus - slack || w > bounds->M_plus + slack)
    throw std::domain_error("x_integral: w outside [M-, M+]");
  const double td = t.to_double();
  const auto [R, S] = offset_window(k, r, td, w);
  const double y = lambda * td / (2 * w);
  return std::max(0.0, S - R) * measure_factor(k, r, y);
}

std::vector<double> w_breakpoints(int k, int r, double t, double lambda) {
  std::vector<double> out{(k + r + 1) * t / 2};
  if ((k != 0 || r != 0) && lambda > 0) {
    for (const auto& y : cached_superlevel(k, r).breakpoints())
      if (y > 0) out.push_back(lambda * t / (2 * y.get_d()));
  }
  return out;
}

double G_general_numeric(const RationalScale& t, double lambda, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("G_general_numeric: tol must be positive");
  if (lambda < 0) throw std::domain_error("G_general_numeric: lambda must be non-negative");
  const int h = interference_depth(t);
  const double td = t.to_double();
  const double pair_tol = tol / ((h + 1.0) * (h + 1.0));
  double total = 0;
  for (int k = 0; k <= h; ++k) {
    for (int r = 0; r <= h; ++r) {
      auto bounds = integral_bounds(k, r, t, lambda);
      if (!bounds || !(bounds->M_plus > bounds->M_minus)) continue;
      const SuperlevelFunction* mu = (k == 0 && r == 0) ? nullptr : &cached_superlevel(k, r);
      auto integrand = [&](double w) {
        const auto [R, S] = offset_window(k, r, td, w);
        const double factor = mu ? (*mu)(lambda * td / (2 * w)) : 1.0;
        return w * std::max(0.0, S - R) * factor;
      };
      total += integrate_with_breakpoints(integrand, bounds->M_minus, bounds->M_plus,
                                          w_breakpoints(k, r, td, lambda), 2 * pair_tol);
    }
  }
  return total / 2;
}

GapCurve general_curve(const RationalScale& t, std::span<const double> lambdas, double tol) {
  GapCurve curve;
  curve.engine = "general";
  curve.t = t;
  curve.lambdas.assign(lambdas.begin(), lambdas.end());
  curve.values.resize(lambdas.size());
  // Warm the profile cache before fanning out.
  const int h = interference_depth(t);
  for (int k = 0; k <= h; ++k)
    for (int r = 0; r <= h; ++r)
      if (k + r > 0) cached_superlevel(k, r);
  parallel_for(lambdas.size(), [&](std::size_t i) { curve.values[i] = G_general_numeric(t, lambdas[i], tol); });
  return curve;
}

}  // namespace gaplab
