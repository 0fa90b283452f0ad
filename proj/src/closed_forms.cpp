#include "gaplab/closed_forms.hpp"

#include <algorithm>
#include <cmath>

namespace gaplab {

namespace {

constexpr double kTwoThirds = 2.0 / 3.0;

void require_closed_range(double t, const char* what) {
  if (!(t > kTwoThirds))
    throw UnsupportedClosedForm(std::string(what) +
                                ": no closed form for t <= 2/3; use the 'general' engine instead");
}

}  // namespace

double G_closed(double t, double lambda) {
  require_closed_range(t, "G_closed");
  if (lambda < 0) throw std::domain_error("G_closed: lambda must be non-negative");
  const double lt = lambda * t;
  if (lt >= 2) return 0.0;
  if (t > 2) return 1 - lt / 2;
  if (t > 1) {
    if (lambda <= 1) return 1 + lt / 2 + lt * std::log(t / 2) - lt * t / 2;
    return 1 - lt / 2 + lt * std::log(lt / 2) - lt * t / 2 + t;
  }
  const double log_t = std::log(t), log_2 = std::log(2.0);
  if (lambda <= 1) return 1 + lt - lt * t + 1.5 * lt * log_t - lt * log_2;
  if (lt <= 1)
    return 1 + 5 * t - 4 * lt - lt * t + t * (2 + 3 * lambda) * std::log(lambda) + 1.5 * lt * log_t - lt * log_2;
  if (lambda <= 2)
    return -1 + 3 * t - 2 * lt + lt * t + lt * std::log(lambda / 2) - t * (2 + lambda / 2) * log_t;
  return -1 - 2 * t + lt / 2 + lt * t - t * (2 + lambda / 2) * std::log(lt / 2);
}

double g_density(double t, double lambda) {
  require_closed_range(t, "g_density");
  // every region touching lambda = 0 is linear in lambda, so g(0) is the right limit
  if (!(lambda >= 0)) throw std::domain_error("g_density: lambda must be non-negative");
  const double two_over_t = 2 / t;
  if (t > 2) {
    if (lambda < two_over_t) return t / 2;
    if (lambda == two_over_t) return t / 4;
    return 0;
  }
  if (t > 1) {
    if (lambda < 1) return t * t / 2 - t / 2 - t * std::log(t / 2);
    if (lambda < two_over_t) return t * t / 2 - t / 2 - t * std::log(lambda * t / 2);
    if (lambda == two_over_t) return t * t / 4 - t / 4;
    return 0;
  }
  const double log_t = std::log(t), log_2 = std::log(2.0);
  if (lambda < 1) return t * t - t - 1.5 * t * log_t + t * log_2;
  if (lambda < 1 / t) return t * t + t - 2 * t / lambda - 3 * t * std::log(lambda) - 1.5 * t * log_t + t * log_2;
  if (lambda <= 2) return -t * t + t - t * std::log(lambda / 2) + 0.5 * t * log_t;
  if (lambda <= two_over_t) return -t * t + 2 * t / lambda + 0.5 * t * std::log(lambda * t / 2);
  return 0;
}

AlphaVector density_from_kappa(const KappaVector& k) {
  return {-k[2] - k[5], -k[3], -k[4], -k[5], -k[7]};
}

double eval_alpha_basis(const AlphaVector& a, double t, double lambda) {
  if (!(t > 0) || !(lambda > 0)) throw std::domain_error("eval_alpha_basis: need t > 0 and lambda > 0");
  return a[0].to_double() * t + a[1].to_double() * t * t + a[2].to_double() * t / lambda +
         a[3].to_double() * t * std::log(lambda) + a[4].to_double() * t * std::log(t);
}

std::array<ExactConst, 4> check_boundary_relations(const KappaVector& ki, const KappaVector& kj,
                                                   const Border& border) {
  if (border.c <= 0) throw std::domain_error("check_boundary_relations: border constant must be positive");
  const ExactConst c(border.c);
  const ExactConst log_c = ExactConst::log_of(border.c);
  auto side = [&](const KappaVector& k) -> std::array<ExactConst, 4> {
    switch (border.kind) {
      case ConstraintKind::t:
        return {k[0] + k[1] * c + k[6] * c * log_c, k[2] + k[3] * c + k[7] * log_c, k[4], k[5]};
      case ConstraintKind::lambda:
        return {k[0], k[1] + k[2] * c + k[4] * log_c + k[5] * c * log_c, k[3], k[6] + k[7] * c};
      case ConstraintKind::lambda_t:
        return {k[0] + k[2] * c + k[5] * c * log_c, k[1] + k[3] * c + k[4] * log_c, k[6] - k[4], k[7] - k[5]};
    }
    return {};
  };
  auto li = side(ki), lj = side(kj);
  return {li[0] - lj[0], li[1] - lj[1], li[2] - lj[2], li[3] - lj[3]};
}

double asymptotic_delta_av(const SceneConfig& scene) {
  const double t = scene.t.to_double();
  const double J = static_cast<double>(scene.J);
  if (!(static_cast<__int128>(scene.t.num()) * scene.J >= scene.t.den()))
    throw std::domain_error("asymptotic_delta_av: requires t J^2 >= J");
  return 1.0 / (2 * t * J * J * J);
}

namespace {

ExactConst q(long n, long d = 1) { return ExactConst(make_rational(n, d)); }
ExactConst q_log2(long n, long d, long log_n, long log_d) {
  return q(n, d) + q(log_n, log_d) * ExactConst::log_prime(2);
}

Constraint le(ConstraintKind k, long n, long d = 1) { return {k, ConstraintOp::le, make_rational(n, d)}; }
Constraint ge(ConstraintKind k, long n, long d = 1) { return {k, ConstraintOp::ge, make_rational(n, d)}; }

}  // namespace

const std::array<KappaVector, 8>& reference_kappa_rows() {
  static const std::array<KappaVector, 8> rows = [] {
    std::array<KappaVector, 8> r;
    r[0] = {q(0), q(0), q(0), q(0), q(0), q(0), q(0), q(0)};
    r[1] = {q(1), q(0), q(-1, 2), q(0), q(0), q(0), q(0), q(0)};
    r[2] = {q(1), q(0), q_log2(1, 2, -1, 1), q(-1, 2), q(0), q(0), q(0), q(1)};
    r[3] = {q(1), q(1), q_log2(-1, 2, -1, 1), q(-1, 2), q(0), q(1), q(0), q(1)};
    r[4] = {q(1), q(0), q_log2(1, 1, -1, 1), q(-1), q(0), q(0), q(0), q(3, 2)};
    r[5] = {q(1), q(5), q_log2(-4, 1, -1, 1), q(-1), q(2), q(3), q(0), q(3, 2)};
    r[6] = {q(-1), q(3), q_log2(-2, 1, -1, 1), q(1), q(0), q(1), q(-2), q(-1, 2)};
    r[7] = {q(-1), q_log2(-2, 1, 2, 1), q_log2(1, 2, 1, 2), q(1), q(-2), q(-1, 2), q(-2), q(-1, 2)};
    return r;
  }();
  return rows;
}

const std::vector<Region>& reference_regions() {
  using K = ConstraintKind;
  static const std::vector<Region> regions = [] {
    const auto& k = reference_kappa_rows();
    std::vector<Region> r;
    r.push_back({"D0", {ge(K::lambda_t, 2)}, k[0]});
    r.push_back({"D1", {ge(K::t, 2), ge(K::lambda_t, 0), le(K::lambda_t, 2)}, k[1]});
    r.push_back({"D2", {ge(K::t, 1), le(K::t, 2), ge(K::lambda, 0), le(K::lambda, 1)}, k[2]});
    r.push_back({"D3", {ge(K::t, 1), le(K::t, 2), ge(K::lambda, 1), le(K::lambda_t, 2)}, k[3]});
    r.push_back({"D4", {ge(K::t, 2, 3), le(K::t, 1), ge(K::lambda, 0), le(K::lambda, 1)}, k[4]});
    r.push_back({"D5", {ge(K::t, 2, 3), le(K::t, 1), ge(K::lambda, 1), le(K::lambda_t, 1)}, k[5]});
    r.push_back({"D6", {ge(K::t, 2, 3), le(K::t, 1), ge(K::lambda_t, 1), le(K::lambda, 2)}, k[6]});
    r.push_back({"D7", {ge(K::t, 2, 3), le(K::t, 1), ge(K::lambda, 2), le(K::lambda_t, 2)}, k[7]});
    return r;
  }();
  return regions;
}

std::vector<double> closed_form_breakpoints(double t) {
  std::vector<double> out;
  const double top = 2 / t;
  for (double b : {1.0, 1 / t, 2.0, top})
    if (b > 0 && b <= top) out.push_back(b);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace gaplab
