#include "gaplab/fkr_profile.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gaplab {

Rational fractional_min(int k, int r, const Rational& z) {
  if (k < 0 || r < 0 || k + r < 1) throw std::invalid_argument("fractional_min: need k, r >= 0 and k + r >= 1");
  bool first = true;
  Rational best;
  for (int j = -k; j <= r; ++j) {
    if (j == 0) continue;
    Rational jz = Rational(j) * z;
    Rational frac = jz - floor_rational(jz);
    if (first || frac < best) best = frac;
    first = false;
  }
  return best;
}

FkrProfile build_fkr_profile(int k, int r) {
  if (k < 0 || r < 0) throw std::invalid_argument("build_fkr_profile: k and r must be non-negative");
  if (k + r < 1) throw std::invalid_argument("build_fkr_profile: k = r = 0 gives an empty minimum");

  // Every change point of the minimum has denominator <= 2 max(k, r).
  const int qmax = 2 * std::max(k, r);
  std::vector<Rational> candidates;
  for (int qd = 1; qd <= qmax; ++qd)
    for (int a = 0; a <= qd; ++a)
      if (std::gcd(a, qd) == 1 || (a == 0 && qd == 1)) candidates.push_back(make_rational(a, qd));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  FkrProfile out;
  out.k_ = k;
  out.r_ = r;
  out.nodes_.push_back(candidates.front());
  for (std::size_t i = 0; i + 1 < candidates.size(); ++i) {
    const Rational mid = (candidates[i] + candidates[i + 1]) / 2;
    LinearPiece best{0, 0};
    Rational best_value;
    bool first = true;
    for (int j = -k; j <= r; ++j) {
      if (j == 0) continue;
      Rational jz = Rational(j) * mid;
      Rational fl = floor_rational(jz);
      Rational value = jz - fl;
      if (first || value < best_value) {
        best_value = value;
        best = {j, -fl.get_num().get_si()};
        first = false;
      }
    }
    if (!out.pieces_.empty() && out.pieces_.back() == best) {
      out.nodes_.back() = candidates[i + 1];
    } else {
      out.pieces_.push_back(best);
      out.nodes_.push_back(candidates[i + 1]);
    }
  }
  return out;
}

Rational FkrProfile::eval(const Rational& z) const {
  if (z < 0 || z > 1) throw std::domain_error("FkrProfile::eval: z outside [0, 1]");
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), z);
  // jumps sit on nodes, so take the true value there
  if (it != nodes_.begin() && *std::prev(it) == z) return fractional_min(k_, r_, z);
  std::size_t i = it == nodes_.begin() ? 0 : static_cast<std::size_t>(it - nodes_.begin()) - 1;
  i = std::min(i, pieces_.size() - 1);
  return pieces_[i].eval(z);
}

double FkrProfile::eval(double z) const { return eval(Rational(z)).get_d(); }

Rational FkrProfile::max_value() const {
  Rational best = 0;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    best = std::max(best, pieces_[i].eval(nodes_[i]));
    best = std::max(best, pieces_[i].eval(nodes_[i + 1]));
  }
  return best;
}

namespace {

// Length of {z in [lo, hi] : slope z + intercept >= y}.
template <class T>
T piece_superlevel(const T& lo, const T& hi, const T& slope, const T& intercept, const T& y) {
  const T cut = (y - intercept) / slope;
  T len;
  if (slope > 0)
    len = hi - std::max<T>(lo, cut);
  else
    len = std::min<T>(hi, cut) - lo;
  if (len < 0) len = 0;
  if (len > hi - lo) len = hi - lo;
  return len;
}

}  // namespace

Rational superlevel_measure(const FkrProfile& profile, const Rational& y) {
  if (y < 0) throw std::domain_error("superlevel_measure: y must be non-negative");
  Rational total = 0;
  const auto& n = profile.nodes();
  for (std::size_t i = 0; i < profile.pieces().size(); ++i) {
    const auto& p = profile.pieces()[i];
    total += piece_superlevel<Rational>(n[i], n[i + 1], Rational(p.slope), Rational(p.intercept), y);
  }
  return total;
}

double superlevel_measure(const FkrProfile& profile, double y) {
  if (y < 0) throw std::domain_error("superlevel_measure: y must be non-negative");
  double total = 0;
  const auto& n = profile.nodes();
  for (std::size_t i = 0; i < profile.pieces().size(); ++i) {
    const auto& p = profile.pieces()[i];
    total += piece_superlevel<double>(n[i].get_d(), n[i + 1].get_d(), static_cast<double>(p.slope),
                                      static_cast<double>(p.intercept), y);
  }
  return total;
}

SuperlevelFunction::SuperlevelFunction(const FkrProfile& profile) {
  const auto& n = profile.nodes();
  for (std::size_t i = 0; i < profile.pieces().size(); ++i) {
    ys_.push_back(profile.pieces()[i].eval(n[i]));
    ys_.push_back(profile.pieces()[i].eval(n[i + 1]));
  }
  std::sort(ys_.begin(), ys_.end());
  ys_.erase(std::unique(ys_.begin(), ys_.end()), ys_.end());
  for (const auto& y : ys_) mus_.push_back(superlevel_measure(profile, y));
  for (std::size_t i = 0; i + 1 < ys_.size(); ++i) {
    const Rational c1 = (mus_[i + 1] - mus_[i]) / (ys_[i + 1] - ys_[i]);
    const Rational c0 = mus_[i] - c1 * ys_[i];
    ys_d_.push_back(ys_[i].get_d());
    c0_d_.push_back(c0.get_d());
    c1_d_.push_back(c1.get_d());
  }
  ys_d_.push_back(ys_.back().get_d());
}

SuperlevelFunction::Segment SuperlevelFunction::segment_at(const Rational& y) const {
  if (y < 0) throw std::domain_error("SuperlevelFunction: y must be non-negative");
  if (y >= ys_.back()) return {Rational(0), Rational(0)};
  auto it = std::upper_bound(ys_.begin(), ys_.end(), y);
  const std::size_t i = static_cast<std::size_t>(it - ys_.begin()) - 1;
  const Rational c1 = (mus_[i + 1] - mus_[i]) / (ys_[i + 1] - ys_[i]);
  return {mus_[i] - c1 * ys_[i], c1};
}

double SuperlevelFunction::operator()(double y) const {
  if (y < 0) throw std::domain_error("SuperlevelFunction: y must be non-negative");
  if (y >= ys_d_.back()) return 0.0;
  auto it = std::upper_bound(ys_d_.begin(), ys_d_.end(), y);
  const std::size_t i = static_cast<std::size_t>(it - ys_d_.begin()) - 1;
  return c0_d_[i] + c1_d_[i] * y;
}

}  // namespace gaplab
