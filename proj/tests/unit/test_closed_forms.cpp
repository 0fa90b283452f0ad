#include "doctest.h"

#include "gaplab/closed_forms.hpp"
#include "gaplab/empirical_sim.hpp"
#include "oracles.hpp"

using namespace gaplab;

namespace {

const double kT[] = {3.0, 2.0, 1.5, 1.1, 1.0, 0.82, 0.7};

bool near_break(double t, double l, double eps) {
  for (double b : {1.0, 1 / t, 2.0, 2 / t})
    if (std::fabs(l - b) < eps) return true;
  return false;
}

}  // namespace

TEST_SUITE("closed_forms") {
  TEST_CASE("G examples") {
    CHECK(G_closed(3, 0.4) == doctest::Approx(0.4).epsilon(1e-15));
    for (double t : kT) CHECK(G_closed(t, 0) == doctest::Approx(1.0).epsilon(1e-15));
    // branch 1/t <= lambda <= 2 of the h = 2 formula, written out
    const double t = 0.82, l = 1.5;
    const double direct = -1 + 3 * t - 2 * l * t + l * t * t + l * t * std::log(l / 2) - t * (2 + l / 2) * std::log(t);
    CHECK(G_closed(t, l) == doctest::Approx(direct).epsilon(1e-14));
    CHECK(G_closed(t, l) == doctest::Approx(0.102257917706565).epsilon(1e-12));
  }

  TEST_CASE("G at (0.82, 1.5) against a J = 400 simulation") {
    SceneConfig s(RationalScale(41, 50), 400);
    std::vector<double> grid{1.5};
    CHECK(std::fabs(empirical_G(s, grid).values[0] - G_closed(0.82, 1.5)) <= 0.01);
  }

  TEST_CASE("G matches the transcribed branches on a grid") {
    oracle::Rng rng(2);
    for (int i = 0; i < 3000; ++i) {
      const double t = rng.uniform(0.6667, 4), l = rng.uniform(0, 2.3 / t);
      CHECK(std::fabs(G_closed(t, l) - oracle::G_formula(t, l)) <= 1e-13);
    }
  }

  TEST_CASE("continuity across branch points") {
    for (double t : kT) {
      for (double b : {1.0, 1 / t, 2.0, 2 / t}) {
        if (b > 2 / t) continue;
        const double lo = G_closed(t, b * (1 - 1e-13)), hi = G_closed(t, b * (1 + 1e-13)), at = G_closed(t, b);
        CHECK(std::fabs(lo - at) <= 1e-12);
        CHECK(std::fabs(hi - at) <= 1e-12);
      }
    }
  }

  TEST_CASE("support and monotonicity") {
    for (double t : kT) {
      double prev = 2;
      for (double l = 0; l < 2 / t + 1; l += 0.001) {
        const double g = G_closed(t, l);
        CHECK(g <= prev + 1e-15);
        CHECK(g >= -1e-15);
        prev = g;
        if (l >= 2 / t) CHECK(g == 0);
      }
    }
  }

  TEST_CASE("no closed form at or below 2/3") {
    CHECK_THROWS_AS(G_closed(2.0 / 3, 0.5), UnsupportedClosedForm);
    CHECK_THROWS_AS(G_closed(0.5, 0.5), UnsupportedClosedForm);
    CHECK_THROWS_AS(g_density(0.35, 0.5), UnsupportedClosedForm);
    try {
      G_closed(0.5, 0.1);
    } catch (const UnsupportedClosedForm& e) {
      CHECK(std::string(e.what()).find("general") != std::string::npos);
    }
  }

  TEST_CASE("density examples") {
    CHECK(g_density(3, 0.3) == doctest::Approx(1.5));
    CHECK(g_density(3, 2.0 / 3) == doctest::Approx(0.75));
    CHECK(g_density(3, 1) == 0);
    CHECK(g_density(1.5, 2 / 1.5) == doctest::Approx(1.5 * 1.5 / 4 - 1.5 / 4));
    const double eps = 1e-4;
    const double fd = -(G_closed(1.5, 1.2 + eps) - G_closed(1.5, 1.2 - eps)) / (2 * eps);
    CHECK(std::fabs(g_density(1.5, 1.2) - fd) <= 1e-6);
  }

  TEST_CASE("density is the negative derivative and integrates back to G") {
    oracle::Rng rng(9);
    for (int i = 0; i < 300; ++i) {
      const double t = rng.uniform(0.67, 3.5), l = rng.uniform(0.01, 2 / t - 0.01);
      if (near_break(t, l, 1e-3)) continue;
      const double eps = 1e-5;
      const double fd = -(G_closed(t, l + eps) - G_closed(t, l - eps)) / (2 * eps);
      CHECK(std::fabs(g_density(t, l) - fd) <= 1e-6);
      CHECK(g_density(t, l) >= 0);
    }
    for (double t : kT) {
      for (double l : {0.05, 0.5, 1.3}) {
        if (l >= 2 / t) continue;
        std::vector<double> cuts;
        for (double b : {1.0, 1 / t, 2.0}) cuts.push_back(b);
        const double tail = oracle::gauss8_split([&](double u) { return g_density(t, u); }, l, 2 / t, cuts, 8);
        CHECK(std::fabs(tail - G_closed(t, l)) <= 1e-8);
      }
    }
  }

  TEST_CASE("alpha relations on the reference rows") {
    const auto& rows = reference_kappa_rows();
    auto a1 = density_from_kappa(rows[1]);
    CHECK(a1[0] == ExactConst(make_rational(1, 2)));
    for (int i = 1; i < 5; ++i) CHECK(a1[i].is_zero());
    for (const auto& x : density_from_kappa(rows[0])) CHECK(x.is_zero());
    auto a3 = density_from_kappa(rows[3]);
    CHECK(a3[0] == ExactConst(make_rational(-1, 2)) + ExactConst::log_prime(2));
    CHECK(a3[1] == ExactConst(make_rational(1, 2)));
    CHECK(a3[2].is_zero());
    CHECK(a3[3] == ExactConst(Rational(-1)));
    CHECK(a3[4] == ExactConst(Rational(-1)));
    CHECK(std::fabs(eval_alpha_basis(a3, 1.5, 1.2) - g_density(1.5, 1.2)) <= 1e-12);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& k = rows[i];
      auto a = density_from_kappa(k);
      CHECK(a[0] == -k[2] - k[5]);
      CHECK(a[1] == -k[3]);
      CHECK(a[2] == -k[4]);
      CHECK(a[3] == -k[5]);
      CHECK(a[4] == -k[7]);
    }
  }

  TEST_CASE("alpha rows evaluate to the listed densities inside their regions") {
    const auto& regions = reference_regions();
    oracle::Rng rng(4);
    for (int i = 0; i < 2000; ++i) {
      const double t = rng.uniform(0.67, 4), l = rng.uniform(0.001, 2 / t);
      if (near_break(t, l, 1e-9)) continue;
      for (const auto& r : regions) {
        if (r.name == "D0" || !r.contains(t, l)) continue;
        CHECK(std::fabs(eval_alpha_basis(density_from_kappa(r.kappa), t, l) - g_density(t, l)) <= 1e-12);
      }
    }
  }

  TEST_CASE("border relations on the listed examples") {
    const auto& k = reference_kappa_rows();
    auto zero = [](const std::array<ExactConst, 4>& r) {
      for (const auto& x : r)
        if (!x.is_zero()) return false;
      return true;
    };
    CHECK(zero(check_boundary_relations(k[1], k[2], {ConstraintKind::t, Rational(2)})));
    CHECK(zero(check_boundary_relations(k[2], k[3], {ConstraintKind::lambda, Rational(1)})));
    CHECK(zero(check_boundary_relations(k[0], k[1], {ConstraintKind::lambda_t, Rational(2)})));
    CHECK_FALSE(zero(check_boundary_relations(k[2], k[4], {ConstraintKind::lambda, Rational(1)})));
    CHECK_THROWS(check_boundary_relations(k[2], k[3], {ConstraintKind::lambda, Rational(0)}));
  }

  TEST_CASE("average gap") {
    CHECK(asymptotic_delta_av(SceneConfig(RationalScale(2, 1), 10)) == doctest::Approx(2.5e-4));
    CHECK(asymptotic_delta_av(SceneConfig(RationalScale(1, 1), 1)) == doctest::Approx(0.5));
    for (auto t : {RationalScale(3, 1), RationalScale(11, 10), RationalScale(1, 2)}) {
      SceneConfig s(t, 100);
      const double ratio = gap_sequence(enumerate_and_sort(s)).delta_av / asymptotic_delta_av(s);
      CHECK(ratio >= 0.9);
      CHECK(ratio <= 1.1);
    }
  }

  TEST_CASE("breakpoints listed inside the support") {
    auto b = closed_form_breakpoints(0.82);
    REQUIRE(b.size() == 4);
    CHECK(b[0] == 1.0);
    CHECK(b[1] == doctest::Approx(1 / 0.82));
    CHECK(b[3] == doctest::Approx(2 / 0.82));
    CHECK(closed_form_breakpoints(3).back() == doctest::Approx(2.0 / 3));
  }
}
