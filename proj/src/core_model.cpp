#include "gaplab/core_model.hpp"

#include <cmath>

namespace gaplab {

SceneConfig::SceneConfig(RationalScale scale, std::int64_t half_width) : t(scale), J(half_width) {
  if (J < 1) throw std::invalid_argument("box half-width J must be >= 1");
}

Rational SceneConfig::observer_x() const {
  Rational j2 = make_rational(J) * make_rational(J);
  return -t.value() * j2;
}

bool GapCurve::is_non_increasing(double slack) const {
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] > values[i - 1] + slack) return false;
  return true;
}

double eval_kappa_basis(const KappaVector& k, double t, double lambda) {
  if (!(t > 0)) throw std::domain_error("eval_kappa_basis: t must be positive");
  if (lambda < 0) throw std::domain_error("eval_kappa_basis: lambda must be non-negative");
  const double log_t = std::log(t);
  double v = k[0].to_double() + k[1].to_double() * t + k[6].to_double() * t * log_t;
  if (lambda == 0) {
    if (!k[4].is_zero() || !k[5].is_zero())
      throw std::domain_error("eval_kappa_basis: log(lambda) terms at lambda = 0");
    return v;
  }
  const double lt = lambda * t;
  const double log_l = std::log(lambda);
  v += k[2].to_double() * lt + k[3].to_double() * lt * t + k[4].to_double() * t * log_l +
       k[5].to_double() * lt * log_l + k[7].to_double() * lt * log_t;
  return v;
}

bool Constraint::holds(const Rational& t, const Rational& lambda) const {
  Rational v;
  switch (kind) {
    case ConstraintKind::lambda: v = lambda; break;
    case ConstraintKind::t: v = t; break;
    case ConstraintKind::lambda_t: v = lambda * t; break;
  }
  return op == ConstraintOp::le ? v <= c : v >= c;
}

bool Constraint::holds(double t, double lambda) const { return holds(Rational(t), Rational(lambda)); }

bool Region::contains(const Rational& t, const Rational& lambda) const {
  for (const auto& c : constraints)
    if (!c.holds(t, lambda)) return false;
  return true;
}

bool Region::contains(double t, double lambda) const { return contains(Rational(t), Rational(lambda)); }

bool Region::is_zero() const {
  for (const auto& k : kappa)
    if (!k.is_zero()) return false;
  return true;
}

const Region* region_lookup(const RegionAtlas& atlas, double t, double lambda) {
  if (!(t > 0) || lambda < 0) throw std::domain_error("region_lookup: need t > 0 and lambda >= 0");
  const Rational tq(t), lq(lambda);
  if (lq * tq >= 2) {
    for (const auto& r : atlas.regions)
      if (r.is_zero() && r.contains(tq, lq)) return &r;
    return nullptr;
  }
  for (const auto& r : atlas.regions)
    if (r.contains(tq, lq)) return &r;
  return nullptr;
}

std::string to_string(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::lambda: return "lambda";
    case ConstraintKind::t: return "t";
    case ConstraintKind::lambda_t: return "lambda_t";
  }
  return "?";
}

std::string to_string(ConstraintOp op) { return op == ConstraintOp::le ? "<=" : ">="; }

ConstraintKind parse_constraint_kind(const std::string& s) {
  if (s == "lambda") return ConstraintKind::lambda;
  if (s == "t") return ConstraintKind::t;
  if (s == "lambda_t") return ConstraintKind::lambda_t;
  throw std::invalid_argument("unknown constraint kind '" + s + "'");
}

ConstraintOp parse_constraint_op(const std::string& s) {
  if (s == "<=") return ConstraintOp::le;
  if (s == ">=") return ConstraintOp::ge;
  throw std::invalid_argument("unknown constraint op '" + s + "'");
}

}  // namespace gaplab
