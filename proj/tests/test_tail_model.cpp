#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "summax/rng.hpp"
#include "summax/stats.hpp"
#include "summax/tail_model.hpp"

using namespace summax;

TEST_CASE("model validation") {
  CHECK_THROWS_AS((void)make_tail_model(2.5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS((void)make_tail_model(0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS((void)make_tail_model(1.0, 0.7), std::invalid_argument);
  CHECK_NOTHROW((void)make_tail_model(1.0, 0.5));
}

TEST_CASE("quantile matches the stated inverse-CDF values") {
  const TailModel one_sided = make_tail_model(1.0 - 1e-12, 1.0);
  CHECK(quantile(one_sided, 0.5) == doctest::Approx(2.0).epsilon(1e-9));

  const TailModel sym = make_tail_model(0.8, 0.5);
  for (double u : {0.05, 0.2, 0.35}) {
    CHECK(quantile(sym, u) == doctest::Approx(-quantile(sym, 1.0 - u)).epsilon(1e-12));
  }
  CHECK(std::abs(quantile(sym, 0.5 - 1e-13)) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(quantile(sym, 0.5 + 1e-13)) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_THROWS_AS((void)quantile(sym, 0.0), std::domain_error);
  CHECK_THROWS_AS((void)quantile(sym, 1.0), std::domain_error);
}

TEST_CASE("quantile sampling reproduces the law") {
  const TailModel model = make_tail_model(0.8, 0.7);
  RngStream rng(301, 0);
  const std::size_t n = 1000000;
  std::vector<double> z(n);
  for (double& x : z) x = quantile(model, rng.next_uniform());

  // KS against the model CDF.
  const KsResult ks = ks_one_sample(z, [&](double x) { return cdf(model, x); });
  CHECK(ks.p_value > 0.001);

  // Log-log tail regression: slope of log empirical survival vs log x.
  std::vector<double> abs_z(n);
  for (std::size_t i = 0; i < n; ++i) abs_z[i] = std::abs(z[i]);
  std::sort(abs_z.begin(), abs_z.end());
  std::vector<double> lx, ly;
  for (double x = 1.5; x < 200.0; x *= 1.5) {
    const auto it = std::lower_bound(abs_z.begin(), abs_z.end(), x);
    const double surv = double(abs_z.end() - it) / double(n);
    if (surv * double(n) < 100.0) break;
    lx.push_back(std::log(x));
    ly.push_back(std::log(surv));
  }
  const double slope = regression_slope(lx, ly);
  CHECK(std::abs(slope + model.alpha) < 0.05);
}

TEST_CASE("a_n normalizes the tail exactly") {
  for (double alpha : {0.3, 0.8, 1.5, 1.9}) {
    const TailModel model = make_tail_model(alpha, alpha > 1.0 ? 0.5 : 0.7);
    for (std::uint64_t n : {std::uint64_t(1), std::uint64_t(10), std::uint64_t(1000),
                            std::uint64_t(1000000)}) {
      CHECK(double(n) * tail_probability(model, a_n(model, n)) ==
            doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  CHECK(a_n(make_tail_model(0.8, 0.5), 32) == doctest::Approx(76.109255).epsilon(1e-6));
  CHECK(a_n(make_tail_model(1.0, 0.5), 17) == doctest::Approx(17.0).epsilon(1e-14));
  CHECK(a_n(make_tail_model(0.4, 0.5), 1) == 1.0);
  CHECK_THROWS_AS((void)a_n(make_tail_model(0.4, 0.5), 0), std::invalid_argument);
}

TEST_CASE("mu_integral closed form against quadrature") {
  const TailModel skewed = make_tail_model(0.5, 1.0);
  CHECK(mu_integral(skewed, 0.25) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(mu_integral(skewed, 1.0) == 0.0);
  CHECK(mu_integral(make_tail_model(0.7, 0.5), 0.3) == 0.0);

  RngStream rng(302, 0);
  for (int i = 0; i < 20; ++i) {
    const double alpha = 0.2 + 1.7 * rng.next_uniform();
    if (std::abs(alpha - 1.0) < 0.02) continue;
    const TailModel model = make_tail_model(alpha, rng.next_uniform());
    const double u = 0.05 + 0.9 * rng.next_uniform();
    const double skew = model.p - model.r();
    const auto integrand = [&](double x) {
      return skew * x * alpha * std::pow(x, -alpha - 1.0);
    };
    const double want = oracles::integrate(integrand, u, 1.0);
    CHECK(mu_integral(model, u) == doctest::Approx(want).epsilon(1e-8));
  }
}

TEST_CASE("drift constant") {
  CHECK(drift_b(make_tail_model(1.0, 0.5)) == 0.0);
  CHECK(drift_b(make_tail_model(0.5, 0.6)) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(drift_b(make_tail_model(1.7, 0.5)) == 0.0);
  CHECK(drift_b(make_tail_model(0.9, 0.5)) == 0.0);
}

TEST_CASE("centering constant matches mu_integral once thresholds clear the floor") {
  const TailModel model = make_tail_model(0.8, 0.7);
  for (std::uint64_t n : {std::uint64_t(100), std::uint64_t(10000)}) {
    for (double u : {0.2, 0.5}) {
      if (u * a_n(model, n) >= 1.0) {
        CHECK(double(n) * centering_b_n(model, n, u) ==
              doctest::Approx(mu_integral(model, u)).epsilon(1e-12));
      }
    }
  }
  CHECK(centering_b_n(make_tail_model(0.7, 0.5), 50, 0.3) == 0.0);  // symmetric law
  CHECK(centering_b_n(model, 1000, 1.0) == 0.0);                    // empty band

  // |n b_n - mu_integral| shrinks monotonically in n at fixed u.
  const double u = 0.001;
  double prev_gap = 1e300;
  for (std::uint64_t n : {std::uint64_t(1000), std::uint64_t(100000),
                          std::uint64_t(10000000)}) {
    const double gap = std::abs(double(n) * centering_b_n(model, n, u) -
                                mu_integral(model, u));
    CHECK(gap <= prev_gap + 1e-15);
    prev_gap = gap;
  }
}

TEST_CASE("small jump mean against quadrature") {
  RngStream rng(303, 0);
  for (int i = 0; i < 10; ++i) {
    const double alpha = 0.3 + 1.6 * rng.next_uniform();
    if (std::abs(alpha - 1.0) < 0.02) continue;
    const TailModel model = make_tail_model(alpha, rng.next_uniform());
    const std::uint64_t n = 1000;
    const double an = a_n(model, n);
    const double u = 0.05 + 0.5 * rng.next_uniform();
    const double skew = model.p - model.r();
    const auto integrand = [&](double x) {
      return skew * x * alpha * std::pow(x, -alpha - 1.0);
    };
    const double hi = u * an;
    const double want = hi <= 1.0 ? 0.0 : oracles::integrate(integrand, 1.0, hi) / an;
    CHECK(small_jump_mean(model, n, u) == doctest::Approx(want).epsilon(1e-8));
  }
}

TEST_CASE("karamata ratio closed form, quadrature, and limit") {
  const TailModel model = make_tail_model(0.5, 0.5);
  CHECK(karamata_ratio(model, 1.0) == 0.0);
  CHECK(karamata_ratio(model, 4.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(karamata_ratio(model, 1e12) == doctest::Approx(1.0).epsilon(1e-5));
  CHECK_THROWS_AS((void)karamata_ratio(make_tail_model(1.5, 0.5), 2.0),
                  std::invalid_argument);

  RngStream rng(304, 0);
  for (int i = 0; i < 20; ++i) {
    const double alpha = 0.2 + 0.75 * rng.next_uniform();
    const TailModel m = make_tail_model(alpha, rng.next_uniform());
    const double y = 1.0 + 20.0 * rng.next_uniform();
    const auto integrand = [&](double x) { return x * alpha * std::pow(x, -alpha - 1.0); };
    const double numer = oracles::integrate(integrand, 1.0, y);
    const double denom = y * std::pow(y, -alpha);
    CHECK(karamata_ratio(m, y) == doctest::Approx(numer / denom).epsilon(1e-8));
  }
}
