#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gaplab/core_model.hpp"

namespace gaplab {

struct LatticePoint {
  std::int64_t a;
  std::int64_t m;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// All (2J+1)(J+1) lattice points sorted by the angle of the ray from the
// observer, ascending; collinear ties ordered by increasing m.
struct AngleOrdering {
  std::vector<LatticePoint> points;
  SceneConfig scene;
};

struct GapSequence {
  std::vector<double> gaps;  // gaps[j] = alpha_{j+1} - alpha_j, radians
  double delta_av = 0;       // alpha_max / N
  double alpha_max = 0;
};

// Sign of the angular comparison of two points seen from the observer of
// `scene`: negative when p is seen before q. Exact (integer cross products,
// escalating to arbitrary precision on overflow).
int compare_angle(const SceneConfig& scene, const LatticePoint& p, const LatticePoint& q);

// Requires t J^2 > J so that every ray points forward (angles below pi/2).
AngleOrdering enumerate_and_sort(const SceneConfig& scene);

// Angle between the rays to p and q via one arctangent of exact cross/dot.
double ray_gap(const SceneConfig& scene, const LatticePoint& p, const LatticePoint& q);

GapSequence gap_sequence(const AngleOrdering& ordering);

GapCurve empirical_G(const GapSequence& gaps, std::int64_t point_count, std::span<const double> lambdas);
GapCurve empirical_G(const SceneConfig& scene, std::span<const double> lambdas);

struct InterferencePair {
  int k;  // interference reaches down to row m - k
  int r;  // and up to row m + r
  friend bool operator==(const InterferencePair&, const InterferencePair&) = default;
};

InterferencePair interference_region(std::int64_t a, std::int64_t m, const SceneConfig& scene);

struct ModelGap {
  double value;
  int branch;  // 0: next point on the same row, j != 0: projection onto row m + j
};

// Leading-order prediction of the gap from (a, m) to the next point seen.
ModelGap model_gap(std::int64_t a, std::int64_t m, const SceneConfig& scene);

}  // namespace gaplab
