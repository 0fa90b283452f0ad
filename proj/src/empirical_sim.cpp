#include "gaplab/empirical_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gaplab/parallel.hpp"

namespace gaplab {

namespace {

using i128 = __int128;

mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFull));
  mpz_class out = (hi << 64) + lo;
  return neg ? mpz_class(-out) : out;
}

i128 checked_mul(i128 a, i128 b) {
  i128 out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("lattice coordinates overflow 128-bit range");
  return out;
}

i128 checked_add(i128 a, i128 b) {
  i128 out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("lattice coordinates overflow 128-bit range");
  return out;
}

// Rays from the observer scaled by den(t): x = num J^2 + den a, y = den m.
struct Ray {
  i128 x;
  i128 y;
};

Ray ray_of(const SceneConfig& s, const LatticePoint& p) {
  const i128 j2 = checked_mul(s.J, s.J);
  return {checked_add(checked_mul(s.t.num(), j2), checked_mul(s.t.den(), p.a)), checked_mul(s.t.den(), p.m)};
}

// sign(a*b - c*d)
int sign_of_difference(i128 a, i128 b, i128 c, i128 d) {
  i128 ab, cd, diff;
  if (!__builtin_mul_overflow(a, b, &ab) && !__builtin_mul_overflow(c, d, &cd) &&
      !__builtin_sub_overflow(ab, cd, &diff))
    return (diff > 0) - (diff < 0);
  mpz_class big = to_mpz(a) * to_mpz(b) - to_mpz(c) * to_mpz(d);
  return sgn(big);
}

// a*b + s*c*d as a double, exact before the final rounding.
double combine_to_double(i128 a, i128 b, i128 c, i128 d, int s) {
  i128 ab, cd, out;
  if (!__builtin_mul_overflow(a, b, &ab) && !__builtin_mul_overflow(c, d, &cd)) {
    bool ovf = s > 0 ? __builtin_add_overflow(ab, cd, &out) : __builtin_sub_overflow(ab, cd, &out);
    if (!ovf) return static_cast<double>(out);
  }
  mpz_class big = to_mpz(a) * to_mpz(b);
  if (s > 0) big += to_mpz(c) * to_mpz(d); else big -= to_mpz(c) * to_mpz(d);
  return big.get_d();
}

void require_forward_scene(const SceneConfig& s) {
  // t J^2 > J  <=>  num * J > den
  if (!(static_cast<i128>(s.t.num()) * s.J > static_cast<i128>(s.t.den())))
    throw std::domain_error("scene requires t J^2 > J (observer strictly left of the box)");
}

}  // namespace

int compare_angle(const SceneConfig& scene, const LatticePoint& p, const LatticePoint& q) {
  const Ray u = ray_of(scene, p), v = ray_of(scene, q);
  // angle(u) < angle(v)  <=>  u.y v.x < v.y u.x  (both x > 0)
  int s = sign_of_difference(u.y, v.x, v.y, u.x);
  if (s != 0) return s;
  if (p.m != q.m) return p.m < q.m ? -1 : 1;
  if (p.a != q.a) return p.a < q.a ? -1 : 1;
  return 0;
}

AngleOrdering enumerate_and_sort(const SceneConfig& scene) {
  require_forward_scene(scene);
  struct Keyed {
    Ray ray;
    LatticePoint p;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(static_cast<std::size_t>(scene.point_count()));
  for (std::int64_t m = 0; m <= scene.J; ++m)
    for (std::int64_t a = -scene.J; a <= scene.J; ++a) keyed.push_back({ray_of(scene, {a, m}), {a, m}});

  std::sort(keyed.begin(), keyed.end(), [](const Keyed& u, const Keyed& v) {
    int s = sign_of_difference(u.ray.y, v.ray.x, v.ray.y, u.ray.x);
    if (s != 0) return s < 0;
    if (u.p.m != v.p.m) return u.p.m < v.p.m;
    return u.p.a < v.p.a;
  });

  AngleOrdering out{{}, scene};
  out.points.reserve(keyed.size());
  for (const auto& k : keyed) out.points.push_back(k.p);
  return out;
}

double ray_gap(const SceneConfig& scene, const LatticePoint& p, const LatticePoint& q) {
  const Ray u = ray_of(scene, p), v = ray_of(scene, q);
  const double cross = combine_to_double(u.x, v.y, v.x, u.y, -1);
  const double dot = combine_to_double(u.x, v.x, u.y, v.y, +1);
  if (!(dot > 0)) throw std::logic_error("ray_gap: rays are not within a quarter turn");
  return std::atan2(cross, dot);
}

GapSequence gap_sequence(const AngleOrdering& ordering) {
  const auto& pts = ordering.points;
  const SceneConfig& scene = ordering.scene;
  if (pts.size() != static_cast<std::size_t>(scene.point_count()))
    throw std::invalid_argument("gap_sequence: ordering does not contain every lattice point");
  GapSequence out;
  out.gaps.resize(pts.size() - 1);
  parallel_for(out.gaps.size(), [&](std::size_t j) { out.gaps[j] = ray_gap(scene, pts[j], pts[j + 1]); });

  const Ray last = ray_of(scene, pts.back());
  out.alpha_max = std::atan2(static_cast<double>(last.y), static_cast<double>(last.x));
  out.delta_av = out.alpha_max / static_cast<double>(scene.point_count());
  return out;
}

GapCurve empirical_G(const GapSequence& gaps, std::int64_t point_count, std::span<const double> lambdas) {
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (lambdas[i] < 0) throw std::invalid_argument("empirical_G: lambda grid must be non-negative");
    if (i > 0 && lambdas[i] < lambdas[i - 1]) throw std::invalid_argument("empirical_G: lambda grid must be increasing");
  }
  std::vector<double> sorted = gaps.gaps;
  std::sort(sorted.begin(), sorted.end());
  GapCurve curve;
  curve.engine = "empirical";
  curve.lambdas.assign(lambdas.begin(), lambdas.end());
  curve.values.reserve(lambdas.size());
  const double n = static_cast<double>(point_count);
  for (double lambda : lambdas) {
    const double threshold = lambda * gaps.delta_av;
    auto it = std::lower_bound(sorted.begin(), sorted.end(), threshold);
    curve.values.push_back(static_cast<double>(sorted.end() - it) / n);
  }
  return curve;
}

GapCurve empirical_G(const SceneConfig& scene, std::span<const double> lambdas) {
  GapCurve curve = empirical_G(gap_sequence(enumerate_and_sort(scene)), scene.point_count(), lambdas);
  curve.scene = scene;
  curve.t = scene.t;
  return curve;
}

namespace {

// Smallest interference index n >= 0 with n <= x <= n+1 for x = num/den >= 0,
// taking the lower index on exact integer boundaries.
int lower_band(i128 num, i128 den) {
  if (num == 0) return 0;
  i128 q = num / den;
  return static_cast<int>(num % den == 0 ? q - 1 : q);
}

}  // namespace

InterferencePair interference_region(std::int64_t a, std::int64_t m, const SceneConfig& scene) {
  if (m < 1 || m > scene.J) throw std::domain_error("interference_region: row m must satisfy 1 <= m <= J");
  if (a < -scene.J || a > scene.J) throw std::domain_error("interference_region: a outside [-J, J]");
  // k t J^2/m - J <= a  <=>  k <= (a + J) m den / (num J^2); similarly for r with J - a.
  const i128 scale = checked_mul(scene.t.num(), checked_mul(scene.J, scene.J));
  const i128 md = checked_mul(m, scene.t.den());
  return {lower_band(checked_mul(a + scene.J, md), scale), lower_band(checked_mul(scene.J - a, md), scale)};
}

ModelGap model_gap(std::int64_t a, std::int64_t m, const SceneConfig& scene) {
  const auto [k, r] = interference_region(a, m, scene);
  const double t = scene.t.to_double();
  const double J = static_cast<double>(scene.J);
  const double unit = 1.0 / (t * t * J * J * J * J);
  // (t J^2 + a)/m = X / (den m) with X = num J^2 + den a.
  const Ray ray = ray_of(scene, {a, m});
  const i128 modulus = checked_mul(scene.t.den(), m);
  ModelGap best{static_cast<double>(m) * unit, 0};
  for (int j = -k; j <= r; ++j) {
    if (j == 0) continue;
    i128 rem = checked_mul(j, ray.x) % modulus;
    if (rem < 0) rem += modulus;
    const double frac = static_cast<double>(rem) / static_cast<double>(modulus);
    const double v = frac * static_cast<double>(m + j) * unit;
    if (v < best.value) best = {v, j};
  }
  return best;
}

}  // namespace gaplab
