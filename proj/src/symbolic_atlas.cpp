#include "gaplab/symbolic_atlas.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "gaplab/general_numeric.hpp"

namespace gaplab {

namespace {

enum class Shape { constant, t, lambda_t };

// w = coef, coef * t or coef * lambda t.
struct Bound {
  Shape shape;
  Rational coef;
};

Rational bound_value(const Bound& b, const Rational& t, const Rational& lt) {
  switch (b.shape) {
    case Shape::constant: return b.coef;
    case Shape::t: return b.coef * t;
    case Shape::lambda_t: return b.coef * lt;
  }
  return 0;
}

// A lower or upper edge of a cell: lambda = c or lambda t = c.
struct Edge {
  ConstraintKind kind;
  Rational c;

  Rational at(const Rational& t) const { return kind == ConstraintKind::lambda ? c : Rational(c / t); }
  double at(double t) const { return kind == ConstraintKind::lambda ? c.get_d() : c.get_d() / t; }
  friend bool operator==(const Edge& a, const Edge& b) { return a.kind == b.kind && a.c == b.c; }
};

struct PairData {
  int k;
  int r;
  const SuperlevelFunction* mu;  // null for (0, 0)
  std::vector<Bound> bounds;      // every bound that can occur for this pair
};

std::vector<PairData> strip_pairs(int h) {
  std::vector<PairData> pairs;
  for (int k = 0; k <= h; ++k) {
    for (int r = 0; k + r <= h; ++r) {
      PairData p{k, r, nullptr, {}};
      const Rational s(k + r);
      p.bounds = {{Shape::lambda_t, make_rational(1, 2)},
                  {Shape::t, s / 2},
                  {Shape::constant, Rational(1)},
                  {Shape::t, (s + 2) / 2},
                  {Shape::t, (s + 1) / 2}};
      if (k + r > 0) {
        p.mu = &cached_superlevel(k, r);
        for (const auto& y : p.mu->breakpoints())
          if (y > 0) p.bounds.push_back({Shape::lambda_t, Rational(1 / (2 * y))});
      }
      pairs.push_back(std::move(p));
    }
  }
  return pairs;
}

class LogCache {
 public:
  const ExactConst& operator()(const Rational& c) {
    auto it = cache_.find(c);
    if (it == cache_.end()) it = cache_.emplace(c, ExactConst::log_of(c)).first;
    return it->second;
  }

 private:
  std::map<Rational, ExactConst> cache_;
};

// Adds sign * F(bound), F(w) = K1 w + (K2 t + K3 lambda t) log w - K4 lambda t^2 / w,
// expanded over the basis.
void add_antiderivative(KappaVector& acc, const Bound& b, int sign, const std::array<Rational, 4>& K,
                        LogCache& logs) {
  const Rational& c = b.coef;
  const ExactConst& L = logs(c);
  const Rational s(sign);
  const ExactConst K1c(s * K[0] * c), K2(s * K[1]), K3(s * K[2]), K4c(s * K[3] / c);
  switch (b.shape) {
    case Shape::constant:
      acc[0] += K1c;
      acc[1] += K2 * L;
      acc[2] += K3 * L;
      acc[3] -= K4c;
      break;
    case Shape::t:
      acc[1] += K1c + K2 * L;
      acc[6] += K2;
      acc[2] += K3 * L - K4c;
      acc[7] += K3;
      break;
    case Shape::lambda_t:
      acc[2] += K1c + K3 * L;
      acc[1] += K2 * L - K4c;
      acc[4] += K2;
      acc[6] += K2;
      acc[5] += K3;
      acc[7] += K3;
      break;
  }
}

void add_pair(KappaVector& acc, const PairData& p, const Rational& t, const Rational& lambda, LogCache& logs) {
  const Rational lt = lambda * t;
  const Rational s(p.k + p.r);
  const Bound& lam_half = p.bounds[0];
  const Bound& lo_t = p.bounds[1];
  const Bound& one = p.bounds[2];
  const Bound& hi_t = p.bounds[3];

  const Bound& lower = bound_value(lam_half, t, lt) >= bound_value(lo_t, t, lt) ? lam_half : lo_t;
  const Bound& upper = bound_value(one, t, lt) <= bound_value(hi_t, t, lt) ? one : hi_t;
  const Rational w_lo = bound_value(lower, t, lt), w_hi = bound_value(upper, t, lt);
  if (w_lo >= w_hi) return;

  std::vector<std::pair<Rational, const Bound*>> cuts{{w_lo, &lower}, {w_hi, &upper}};
  for (std::size_t i = 4; i < p.bounds.size(); ++i) {
    Rational v = bound_value(p.bounds[i], t, lt);
    if (v > w_lo && v < w_hi) cuts.emplace_back(std::move(v), &p.bounds[i]);
  }
  std::sort(cuts.begin(), cuts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  const Rational switch_w = (s + 1) * t / 2;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i].first == cuts[i + 1].first) continue;
    const Rational mid = (cuts[i].first + cuts[i + 1].first) / 2;
    Rational c0(1), c1(0);
    if (p.mu) {
      auto seg = p.mu->segment_at(Rational(lt / (2 * mid)));
      c0 = seg.c0;
      c1 = seg.c1;
    }
    if (c0 == 0 && c1 == 0) continue;
    std::array<Rational, 4> K;
    if (mid <= switch_w) {
      K = {2 * c0, -c0 * s, c1, -c1 * s / 2};
    } else {
      K = {-2 * c0, c0 * (s + 2), -c1, c1 * (s + 2) / 2};
    }
    add_antiderivative(acc, *cuts[i + 1].second, +1, K, logs);
    add_antiderivative(acc, *cuts[i].second, -1, K, logs);
  }
}

KappaVector halve(KappaVector kappa) {
  const ExactConst half(make_rational(1, 2));
  for (auto& x : kappa) x *= half;
  return kappa;
}

KappaVector kappa_at(const std::vector<PairData>& pairs, const Rational& t, const Rational& lambda,
                     LogCache& logs) {
  KappaVector acc;
  for (const auto& p : pairs) add_pair(acc, p, t, lambda, logs);
  return halve(std::move(acc));
}

struct Lines {
  std::set<Rational> t_lines;
  std::set<Rational> lambda_lines;
  std::set<Rational> lambda_t_lines;
};

// Where two bounds of one pair swap order.
void add_comparison(const Bound& a, const Bound& b, Lines& lines) {
  if (a.shape == b.shape || a.coef == 0 || b.coef == 0) return;
  const Bound& x = a.shape < b.shape ? a : b;
  const Bound& y = a.shape < b.shape ? b : a;
  const Rational c = x.coef / y.coef;
  if (x.shape == Shape::constant && y.shape == Shape::t) lines.t_lines.insert(c);
  else if (x.shape == Shape::constant) lines.lambda_t_lines.insert(c);
  else lines.lambda_lines.insert(c);
}

struct Cell {
  Edge lo;
  Edge hi;
  KappaVector kappa;
};

struct OpenRegion {
  Edge lo;
  Edge hi;
  KappaVector kappa;
  Rational t0;
  std::optional<Rational> t1;
};

std::string region_name(const KappaVector& kappa, int h, std::size_t index, std::map<std::string, int>& used) {
  const auto& rows = reference_kappa_rows();
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i] == kappa) {
      std::string base = "D" + std::to_string(i);
      int n = used[base]++;
      return n == 0 ? base : base + "." + std::to_string(n);
    }
  }
  return "h" + std::to_string(h) + ".R" + std::to_string(index);
}

}  // namespace

KappaVector symbolic_kappa_at(int h, const Rational& t, const Rational& lambda) {
  if (h < 0) throw std::invalid_argument("symbolic_kappa_at: h must be >= 0");
  LogCache logs;
  return kappa_at(strip_pairs(h), t, lambda, logs);
}

RegionAtlas G_general_symbolic(int h) {
  if (h < 0) throw std::invalid_argument("G_general_symbolic: h must be >= 0");
  const auto pairs = strip_pairs(h);
  const Rational t_lo = make_rational(2, h + 1);
  const std::optional<Rational> t_hi =
      h == 0 ? std::nullopt : std::optional<Rational>(make_rational(2, h));
  auto inside_strip = [&](const Rational& t) { return t > t_lo && (!t_hi || t < *t_hi); };

  Lines raw;
  for (const auto& p : pairs)
    for (std::size_t i = 0; i < p.bounds.size(); ++i)
      for (std::size_t j = i + 1; j < p.bounds.size(); ++j) add_comparison(p.bounds[i], p.bounds[j], raw);

  // Keep the lines that can meet the strip below lambda t = 2.
  Lines lines;
  const Rational lambda_cap(h + 1);
  for (const auto& c : raw.t_lines)
    if (inside_strip(c)) lines.t_lines.insert(c);
  for (const auto& c : raw.lambda_lines)
    if (c > 0 && c < lambda_cap) lines.lambda_lines.insert(c);
  for (const auto& c : raw.lambda_t_lines)
    if (c > 0 && c < 2) lines.lambda_t_lines.insert(c);

  std::set<Rational> t_cuts = lines.t_lines;
  t_cuts.insert(t_lo);
  if (t_hi) t_cuts.insert(*t_hi);
  std::vector<Rational> lt_with_top(lines.lambda_t_lines.begin(), lines.lambda_t_lines.end());
  lt_with_top.push_back(2);
  for (const auto& a : lines.lambda_lines) {
    for (const auto& b : lt_with_top) {
      Rational t = b / a;
      if (inside_strip(t)) t_cuts.insert(std::move(t));
    }
  }
  std::vector<Rational> ts(t_cuts.begin(), t_cuts.end());

  LogCache logs;
  std::vector<OpenRegion> open, closed;
  const std::size_t slabs = t_hi ? ts.size() - 1 : ts.size();
  for (std::size_t s = 0; s < slabs; ++s) {
    const Rational& a = ts[s];
    const Rational sample_t = s + 1 < ts.size() ? Rational((a + ts[s + 1]) / 2) : Rational(a + 1);

    std::vector<std::pair<Rational, Edge>> edges;
    edges.push_back({Rational(0), Edge{ConstraintKind::lambda, Rational(0)}});
    for (const auto& c : lines.lambda_lines)
      if (c * sample_t < 2) edges.push_back({c, Edge{ConstraintKind::lambda, c}});
    for (const auto& c : lt_with_top) edges.push_back({c / sample_t, Edge{ConstraintKind::lambda_t, c}});
    std::sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

    std::vector<Cell> cells;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      if (edges[i].first == edges[i + 1].first)
        throw std::logic_error("G_general_symbolic: coincident lambda breakpoints inside a slab");
      const Rational sample_lambda = (edges[i].first + edges[i + 1].first) / 2;
      KappaVector kappa = kappa_at(pairs, sample_t, sample_lambda, logs);
      if (!cells.empty() && cells.back().kappa == kappa) {
        cells.back().hi = edges[i + 1].second;
      } else {
        cells.push_back({edges[i].second, edges[i + 1].second, std::move(kappa)});
      }
    }

    const std::optional<Rational> b =
        s + 1 < ts.size() ? std::optional<Rational>(ts[s + 1]) : std::nullopt;
    std::vector<OpenRegion> next;
    std::vector<bool> continued(open.size(), false);
    for (auto& cell : cells) {
      bool found = false;
      for (std::size_t i = 0; i < open.size(); ++i) {
        if (!continued[i] && open[i].lo == cell.lo && open[i].hi == cell.hi && open[i].kappa == cell.kappa) {
          continued[i] = true;
          open[i].t1 = b;
          next.push_back(std::move(open[i]));
          found = true;
          break;
        }
      }
      if (!found) next.push_back({cell.lo, cell.hi, std::move(cell.kappa), a, b});
    }
    for (std::size_t i = 0; i < open.size(); ++i)
      if (!continued[i]) closed.push_back(std::move(open[i]));
    open = std::move(next);
  }
  for (auto& o : open) closed.push_back(std::move(o));

  std::sort(closed.begin(), closed.end(), [](const OpenRegion& x, const OpenRegion& y) {
    if (x.t0 != y.t0) return x.t0 > y.t0;
    const Rational probe = x.t1 ? Rational((x.t0 + *x.t1) / 2) : Rational(x.t0 + 1);
    return x.lo.at(probe) < y.lo.at(probe);
  });

  RegionAtlas atlas;
  atlas.h = h;
  std::set<Rational> used_t;
  for (const auto& o : closed) {
    if (inside_strip(o.t0)) used_t.insert(o.t0);
    if (o.t1 && inside_strip(*o.t1)) used_t.insert(*o.t1);
  }
  atlas.t_breakpoints.assign(used_t.rbegin(), used_t.rend());

  atlas.regions.push_back({"D0", {{ConstraintKind::lambda_t, ConstraintOp::ge, Rational(2)}}, KappaVector{}});
  std::map<std::string, int> used_names;
  std::size_t index = 1;
  for (auto& o : closed) {
    Region region;
    region.name = region_name(o.kappa, h, index++, used_names);
    region.constraints.push_back({ConstraintKind::t, ConstraintOp::ge, o.t0});
    if (o.t1) region.constraints.push_back({ConstraintKind::t, ConstraintOp::le, *o.t1});
    region.constraints.push_back({o.lo.kind, ConstraintOp::ge, o.lo.c});
    region.constraints.push_back({o.hi.kind, ConstraintOp::le, o.hi.c});
    region.kappa = std::move(o.kappa);
    atlas.regions.push_back(std::move(region));
  }
  return atlas;
}

// ---------------------------------------------------------------------------
// validation

namespace {

struct Shape2 {
  const Region* region;
  Rational t0;
  std::optional<Rational> t1;
  Edge lo;
  Edge hi;
};

std::optional<Shape2> canonical(const Region& region, std::string& why) {
  std::optional<Rational> t0, t1;
  std::optional<Edge> lo, hi;
  for (const auto& c : region.constraints) {
    if (c.kind == ConstraintKind::t) {
      auto& slot = c.op == ConstraintOp::ge ? t0 : t1;
      if (slot) {
        why = "repeated t constraint";
        return std::nullopt;
      }
      slot = c.c;
    } else {
      auto& slot = c.op == ConstraintOp::ge ? lo : hi;
      if (slot) {
        why = "repeated lambda constraint";
        return std::nullopt;
      }
      slot = Edge{c.kind, c.c};
    }
  }
  if (!lo) lo = Edge{ConstraintKind::lambda, Rational(0)};
  if (lo->c == 0) lo->kind = ConstraintKind::lambda;
  if (!t0 || *t0 <= 0) {
    why = "missing positive lower t bound";
    return std::nullopt;
  }
  if (!hi) {
    why = "missing upper lambda bound";
    return std::nullopt;
  }
  return Shape2{&region, *t0, t1, *lo, *hi};
}

long double eval_ld(const KappaVector& k, long double t, long double lambda) {
  const long double lt = lambda * t;
  long double g = k[0].to_long_double() + k[1].to_long_double() * t + k[2].to_long_double() * lt +
                  k[3].to_long_double() * lt * t + k[6].to_long_double() * t * std::log(t) +
                  k[7].to_long_double() * lt * std::log(t);
  if (!k[4].is_zero() || !k[5].is_zero()) {
    const long double ll = std::log(lambda);
    g += k[4].to_long_double() * t * ll + k[5].to_long_double() * lt * ll;
  }
  return g;
}

std::string border_str(const Border& b) {
  return to_string(b.kind) + "=" + to_string(b.c);
}

}  // namespace

nlohmann::json AtlasReport::to_json() const {
  nlohmann::json j;
  j["ok"] = ok;
  j["regions"] = region_count;
  j["failures"] = failures;
  auto& arr = j["borders"] = nlohmann::json::array();
  for (const auto& b : borders) {
    nlohmann::json e;
    e["between"] = {b.first, b.second};
    e["border"] = {{"kind", to_string(b.border.kind)}, {"c", to_string(b.border.c)}};
    e["exact"] = b.exact_zero;
    e["max_value_gap"] = b.max_value_gap;
    if (!b.exact_zero) {
      auto& res = e["residuals"] = nlohmann::json::array();
      for (const auto& r : b.residuals) res.push_back(r.str());
    }
    arr.push_back(std::move(e));
  }
  return j;
}

AtlasReport validate_atlas(const RegionAtlas& atlas, double continuity_tol) {
  AtlasReport report;
  report.region_count = atlas.regions.size();
  const KappaVector zero{};

  std::vector<Shape2> shapes;
  for (const auto& region : atlas.regions) {
    if (region.constraints.size() == 1 && region.constraints[0].kind == ConstraintKind::lambda_t &&
        region.constraints[0].op == ConstraintOp::ge && region.constraints[0].c == 2) {
      if (!region.is_zero()) report.failures.push_back(region.name + ": region lambda t >= 2 must be zero");
      continue;
    }
    std::string why;
    auto s = canonical(region, why);
    if (!s) {
      report.failures.push_back(region.name + ": " + why);
      continue;
    }
    shapes.push_back(*s);
  }

  auto record = [&](const std::string& a, const std::string& b, const KappaVector& ka, const KappaVector& kb,
                    const Border& border, auto&& sample_point) {
    BorderCheck check{a, b, border, check_boundary_relations(ka, kb, border), true, 0.0};
    for (const auto& r : check.residuals) check.exact_zero = check.exact_zero && r.is_zero();
    for (int i = 0; i < 100; ++i) {
      auto [t, lambda] = sample_point((i + 0.5) / 100.0);
      const long double gap = std::fabs(eval_ld(ka, t, lambda) - eval_ld(kb, t, lambda));
      check.max_value_gap = std::max(check.max_value_gap, static_cast<double>(gap));
    }
    if (!check.exact_zero) {
      std::ostringstream os;
      os << a << " | " << b << " along " << border_str(border) << ": residuals";
      for (const auto& r : check.residuals) os << " [" << r.str() << "]";
      report.failures.push_back(os.str());
    }
    if (!(check.max_value_gap <= continuity_tol)) {
      std::ostringstream os;
      os << a << " | " << b << " along " << border_str(border) << ": value gap " << check.max_value_gap;
      report.failures.push_back(os.str());
    }
    report.borders.push_back(std::move(check));
  };

  auto t_top = [](const Shape2& s) { return s.t1 ? s.t1->get_d() : s.t0.get_d() + 8.0; };

  for (const auto& s : shapes) {
    const Region& reg = *s.region;
    if (s.lo.kind == ConstraintKind::lambda && s.lo.c == 0) {
      const auto& k = reg.kappa;
      if (!(k[4].is_zero() && k[5].is_zero() && k[0] == ExactConst(Rational(1)) && k[1].is_zero() &&
            k[6].is_zero()))
        report.failures.push_back(reg.name + ": G != 1 along lambda = 0");
    }
    if (s.hi.kind == ConstraintKind::lambda_t && s.hi.c == 2) {
      const double t0 = s.t0.get_d(), t1 = t_top(s);
      record(reg.name, "D0", reg.kappa, zero, Border{ConstraintKind::lambda_t, Rational(2)}, [&](double u) {
        const long double t = t0 + (t1 - t0) * u;
        return std::pair<long double, long double>{t, 2 / t};
      });
    }
  }

  for (const auto& a : shapes) {
    for (const auto& b : shapes) {
      if (&a == &b) continue;
      // a below b along a shared lambda-type line
      if (a.hi == b.lo) {
        const Rational lo = std::max(a.t0, b.t0);
        std::optional<Rational> hi = a.t1;
        if (b.t1 && (!hi || *b.t1 < *hi)) hi = b.t1;
        if (!hi || *hi > lo) {
          const double t0 = lo.get_d(), t1 = hi ? hi->get_d() : t0 + 8.0;
          const Edge e = a.hi;
          record(a.region->name, b.region->name, a.region->kappa, b.region->kappa, Border{e.kind, e.c},
                 [&](double u) {
                   const long double t = t0 + (t1 - t0) * u;
                   return std::pair<long double, long double>{t, e.at(static_cast<double>(t))};
                 });
        }
      }
      // a left of b across t = c
      if (a.t1 && *a.t1 == b.t0) {
        const Rational c = b.t0;
        const Rational lo = std::max(a.lo.at(c), b.lo.at(c));
        const Rational hi = std::min(a.hi.at(c), b.hi.at(c));
        if (hi > lo) {
          const double l0 = lo.get_d(), l1 = hi.get_d(), tc = c.get_d();
          record(a.region->name, b.region->name, a.region->kappa, b.region->kappa,
                 Border{ConstraintKind::t, c}, [&](double u) {
                   return std::pair<long double, long double>{tc, l0 + (l1 - l0) * u};
                 });
        }
      }
    }
  }

  report.ok = report.failures.empty();
  return report;
}

}  // namespace gaplab
