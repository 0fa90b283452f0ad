#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gaplab {

// Gauss-Legendre rule on [-1, 1]: nodes by Newton iteration on P_n.
class GaussLegendre {
 public:
  explicit GaussLegendre(int n) : nodes_(n), weights_(n) {
    if (n < 1) throw std::invalid_argument("GaussLegendre: n must be positive");
    // P_n(x) and P_n'(x) by the three-term recurrence
    auto legendre = [n](double x) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      return std::pair{p1, n * (x * p1 - p0) / (x * x - 1)};
    };
    for (int i = 0; i < (n + 1) / 2; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      for (int iter = 0; iter < 100; ++iter) {
        const auto [p, dp] = legendre(x);
        const double dx = p / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      const double dp = legendre(x).second;
      const double w = 2 / ((1 - x * x) * dp * dp);
      nodes_[i] = -x;
      nodes_[n - 1 - i] = x;
      weights_[i] = weights_[n - 1 - i] = w;
    }
    if (n % 2 == 1) nodes_[n / 2] = 0;
  }

  template <class F>
  double integrate(F&& f, double a, double b) const {
    const double half = (b - a) / 2, mid = (a + b) / 2;
    double s = 0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) s += weights_[i] * f(mid + half * nodes_[i]);
    return s * half;
  }

  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

const GaussLegendre& gauss_legendre_rule(int n);

// Integral of a smooth f over [a, b]: one panel vs two halves, bisecting where
// they disagree by more than tol.
template <class F>
double integrate_panel_adaptive(F&& f, double a, double b, double tol, int depth = 0) {
  const GaussLegendre& rule = gauss_legendre_rule(10);
  const double whole = rule.integrate(f, a, b);
  const double mid = (a + b) / 2;
  const double split = rule.integrate(f, a, mid) + rule.integrate(f, mid, b);
  if (std::abs(whole - split) <= tol || depth >= 40 || b - a < 1e-15) return split;
  return integrate_panel_adaptive(f, a, mid, tol / 2, depth + 1) + integrate_panel_adaptive(f, mid, b, tol / 2, depth + 1);
}

// Splits [a, b] at the given interior breakpoints and integrates each cell.
template <class F>
double integrate_with_breakpoints(F&& f, double a, double b, std::vector<double> breaks, double tol) {
  if (!(b > a)) return 0.0;
  std::vector<double> cuts{a};
  for (double x : breaks)
    if (x > a && x < b) cuts.push_back(x);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  double total = 0;
  const double cell_tol = tol / static_cast<double>(cuts.size() - 1);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    if (cuts[i + 1] > cuts[i]) total += integrate_panel_adaptive(f, cuts[i], cuts[i + 1], cell_tol);
  return total;
}

}  // namespace gaplab
