#pragma once

// Test-side reference implementations. Nothing here calls into the library's
// engines; they are deliberately naive so that agreement means something.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen); }
  std::int64_t integer(std::int64_t a, std::int64_t b) { return std::uniform_int_distribution<std::int64_t>(a, b)(gen); }
  bool coin() { return integer(0, 1) == 1; }
};

// ---- lattice ---------------------------------------------------------------

struct Pt {
  std::int64_t a, m;
};

// Angles by long-double atan2, ties by m. Fine for small J only.
inline std::vector<Pt> atan2_order(long double t, std::int64_t J) {
  std::vector<std::pair<long double, Pt>> v;
  const long double X = t * J * J;
  for (std::int64_t m = 0; m <= J; ++m)
    for (std::int64_t a = -J; a <= J; ++a) v.push_back({std::atan2(static_cast<long double>(m), X + a), Pt{a, m}});
  std::stable_sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second.m < y.second.m;
  });
  std::vector<Pt> out;
  for (auto& e : v) out.push_back(e.second);
  return out;
}

// ---- fractional minima -----------------------------------------------------

inline double frac(double x) { return x - std::floor(x); }

inline double fmin_direct(int k, int r, double z) {
  double best = std::numeric_limits<double>::infinity();
  for (int j = -k; j <= r; ++j)
    if (j != 0) best = std::min(best, frac(j * z));
  return best;
}

inline double grid_superlevel(int k, int r, double y, int n) {
  long count = 0;
  for (int i = 0; i < n; ++i)
    if (fmin_direct(k, r, (i + 0.5) / n) >= y) ++count;
  return static_cast<double>(count) / n;
}

using Intervals = std::vector<std::pair<double, double>>;

inline Intervals intersect(const Intervals& a, const Intervals& b) {
  Intervals out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double lo = std::max(a[i].first, b[j].first), hi = std::min(a[i].second, b[j].second);
    if (hi > lo) out.push_back({lo, hi});
    (a[i].second < b[j].second) ? ++i : ++j;
  }
  return out;
}

// {z in [0,1] : {j z} >= y for every j in [-k, r] \ {0}} as sorted intervals.
// For j > 0 it is the union of [(n+y)/j, (n+1)/j]; for j = -q < 0, {-qz} = 1 - {qz}
// off the grid, so the set is the union of [n/q, (n+1-y)/q].
inline Intervals superlevel_set(int k, int r, double y) {
  Intervals acc{{0.0, 1.0}};
  if (y <= 0) return acc;
  for (int j = -k; j <= r; ++j) {
    if (j == 0) continue;
    const int q = std::abs(j);
    Intervals s;
    for (int n = 0; n < q; ++n) {
      const double lo = j > 0 ? (n + y) / q : static_cast<double>(n) / q;
      const double hi = j > 0 ? static_cast<double>(n + 1) / q : (n + 1 - y) / q;
      if (hi > lo) s.push_back({lo, hi});
    }
    acc = intersect(acc, s);
  }
  return acc;
}

inline double measure(const Intervals& s) {
  double m = 0;
  for (auto& [a, b] : s) m += b - a;
  return m;
}

// Measure of the superlevel set inside the window [lo, hi], using 1-periodicity.
inline double window_measure(const Intervals& base, double lo, double hi) {
  double m = 0;
  for (long n = static_cast<long>(std::floor(lo)) - 1; n <= static_cast<long>(std::ceil(hi)); ++n)
    for (auto& [a, b] : base) m += std::max(0.0, std::min(hi, b + n) - std::max(lo, a + n));
  return m;
}

// ---- quadrature ------------------------------------------------------------

// Composite 8-point Gauss-Legendre with fixed panels.
inline double gauss8(const std::function<double(double)>& f, double a, double b, int panels = 1) {
  static const double x[4] = {0.1834346424956498, 0.5255324099163290, 0.7966664774136267, 0.9602898564975363};
  static const double w[4] = {0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};
  double s = 0;
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double c = a + (p + 0.5) * h, r = h / 2;
    for (int i = 0; i < 4; ++i) s += w[i] * r * (f(c - r * x[i]) + f(c + r * x[i]));
  }
  return s;
}

inline double gauss8_split(const std::function<double(double)>& f, double a, double b, std::vector<double> cuts,
                           int panels = 1) {
  cuts.push_back(a);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  double s = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = std::max(a, cuts[i]), hi = std::min(b, cuts[i + 1]);
    if (hi > lo) s += gauss8(f, lo, hi, panels);
  }
  return s;
}

// ---- the inner integral of the general formula ------------------------------

struct Window {
  double R, S;
};

inline Window window_direct(int k, int r, double t, double w) {
  const double R = std::max(k * t / (w * w) - 1 / w, 1 / w - (r + 1) * t / (w * w));
  const double S = std::min((k + 1) * t / (w * w) - 1 / w, 1 / w - r * t / (w * w));
  return {R, S};
}

// int_0^1 mu({z in [R+x, S+x] : min{jz} >= y_w}) dx by quadrature in x, split where
// a window end crosses an endpoint of the (periodic) superlevel set.
inline double inner_integral(int k, int r, double t, double w, double lambda) {
  const Window win = window_direct(k, r, t, w);
  const double y = lambda * t / (2 * w);
  const Intervals base = (k == 0 && r == 0) ? Intervals{{0.0, 1.0}} : superlevel_set(k, r, y);
  std::vector<double> cuts;
  const long n0 = static_cast<long>(std::floor(std::min(win.R, win.S))) - 2;
  const long n1 = static_cast<long>(std::ceil(std::max(win.R, win.S))) + 2;
  for (long n = n0; n <= n1; ++n) {
    for (auto& [a, b] : base) {
      for (double e : {a + n, b + n}) {
        for (double x : {e - win.R, e - win.S}) {
          if (x > 0 && x < 1) cuts.push_back(x);
        }
      }
    }
  }
  auto f = [&](double x) { return window_measure(base, win.R + x, win.S + x); };
  return gauss8_split(f, 0, 1, cuts);
}

// ---- closed forms, transcribed branch by branch ------------------------------

inline double G_formula(double t, double l) {
  if (l >= 2 / t) return 0;
  const double L = std::log(l > 0 ? l : 1);
  if (t > 2) return 1 - l * t / 2;
  if (t > 1) {
    if (l <= 1) return 1 + l * t / 2 + l * t * std::log(t / 2) - l * t * t / 2;
    return 1 - l * t / 2 + l * t * std::log(l * t / 2) - l * t * t / 2 + t;
  }
  if (l <= 1) return 1 + l * t - l * t * t + 1.5 * l * t * std::log(t) - l * t * std::log(2.0);
  if (l <= 1 / t)
    return 1 + 5 * t - 4 * l * t - l * t * t + t * (2 + 3 * l) * L + 1.5 * l * t * std::log(t) - l * t * std::log(2.0);
  if (l <= 2) return -1 + 3 * t - 2 * l * t + l * t * t + l * t * std::log(l / 2) - t * (2 + l / 2) * std::log(t);
  return -1 - 2 * t + l * t / 2 + l * t * t - t * (2 + l / 2) * std::log(l * t / 2);
}

}  // namespace oracle
