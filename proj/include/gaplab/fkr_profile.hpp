#pragma once

#include <cstdint>
#include <vector>

#include "gaplab/rational.hpp"

namespace gaplab {

// F(z) = slope * z + intercept on one interval of the profile.
struct LinearPiece {
  std::int64_t slope;
  std::int64_t intercept;

  Rational eval(const Rational& z) const { return Rational(slope) * z + Rational(intercept); }
  bool rising() const noexcept { return slope > 0; }
  friend bool operator==(const LinearPiece&, const LinearPiece&) = default;
};

// Exact piecewise-linear form of F_{k,r}(z) = min over j in [-k, r], j != 0, of
// the fractional part {j z}, for z in [0, 1].
class FkrProfile {
 public:
  int k() const noexcept { return k_; }
  int r() const noexcept { return r_; }
  // nodes().size() == pieces().size() + 1; piece i lives on [nodes[i], nodes[i+1]].
  const std::vector<Rational>& nodes() const noexcept { return nodes_; }
  const std::vector<LinearPiece>& pieces() const noexcept { return pieces_; }

  Rational eval(const Rational& z) const;
  double eval(double z) const;
  Rational max_value() const;

 private:
  friend FkrProfile build_fkr_profile(int k, int r);
  int k_ = 0;
  int r_ = 0;
  std::vector<Rational> nodes_;
  std::vector<LinearPiece> pieces_;
};

FkrProfile build_fkr_profile(int k, int r);

// Direct minimum of the fractional parts, used to validate profiles.
Rational fractional_min(int k, int r, const Rational& z);

// mu({z in [0,1] : F(z) >= y}), exact and in double precision. y < 0 throws.
Rational superlevel_measure(const FkrProfile& profile, const Rational& y);
double superlevel_measure(const FkrProfile& profile, double y);

// The superlevel measure as a function of y: linear between consecutive
// breakpoints (the distinct node values of F), zero beyond max F.
class SuperlevelFunction {
 public:
  explicit SuperlevelFunction(const FkrProfile& profile);

  const std::vector<Rational>& breakpoints() const noexcept { return ys_; }
  const std::vector<Rational>& values() const noexcept { return mus_; }

  // mu = c0 + c1 y on the segment containing y (exact). Beyond max F: (0, 0).
  struct Segment {
    Rational c0;
    Rational c1;
  };
  Segment segment_at(const Rational& y) const;
  double operator()(double y) const;

 private:
  std::vector<Rational> ys_;
  std::vector<Rational> mus_;
  std::vector<double> ys_d_;
  std::vector<double> c0_d_;
  std::vector<double> c1_d_;
};

}  // namespace gaplab
