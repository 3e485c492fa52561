#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "summax/coefficients.hpp"

using namespace summax;

TEST_CASE("derived summaries match their recomputation") {
  const CoefficientSample s = make_coefficient_sample({1.0, -1.0, 1.0});
  CHECK(s.total == 1.0);
  CHECK(s.c_plus == 1.0);
  CHECK(s.c_minus == 1.0);
  CHECK(s.c_star() == 1.0);

  const CoefficientSample t = make_coefficient_sample({0.5, 0.25});
  CHECK(t.total == 0.75);
  CHECK(t.c_plus == 0.5);
  CHECK(t.c_minus == 0.0);
}

TEST_CASE("partial sum condition") {
  const auto good = check_partial_sum_condition(std::vector<double>{1.0, -1.0, 1.0});
  CHECK(good.ok);
  const auto trivially = check_partial_sum_condition(std::vector<double>{1.0, 1.0});
  CHECK(trivially.ok);
  const auto bad = check_partial_sum_condition(std::vector<double>{1.0, -2.0});
  CHECK_FALSE(bad.ok);
  CHECK(bad.worst_ratio == doctest::Approx(-1.0));
  CHECK_THROWS_AS((void)check_partial_sum_condition(std::vector<double>{1.0, -1.0}),
                  std::invalid_argument);
}

TEST_CASE("random bridge samples satisfy the partial sum condition by construction") {
  CoefficientModel model;
  model.kind = CoefficientKind::random_bridge;
  model.order = 5;
  bool saw_negative_coeff = false, saw_negative_total = false;
  for (std::uint64_t rep = 0; rep < 500; ++rep) {
    const CoefficientSample s = sample_coeffs(model, 99, rep);
    REQUIRE(s.coeffs.size() == 6);
    CHECK(check_partial_sum_condition(s.coeffs).ok);
    // re-derive the summaries
    double total = 0.0, cp = 0.0, cm = 0.0;
    for (double c : s.coeffs) {
      total += c;
      cp = std::max(cp, c);
      cm = std::max(cm, -c);
      saw_negative_coeff = saw_negative_coeff || c < 0.0;
    }
    saw_negative_total = saw_negative_total || total < 0.0;
    CHECK(s.total == doctest::Approx(total).epsilon(1e-12));
    CHECK(s.c_plus == cp);
    CHECK(s.c_minus == cm);
  }
  CHECK(saw_negative_coeff);
  CHECK(saw_negative_total);
}

TEST_CASE("equal-ratio override of the bridge gives equal weights") {
  // R_s = s/q with scale 1 gives C_i = 1/q; spot-check the arithmetic the
  // bridge uses on a deterministic ratio sequence.
  const std::uint64_t q = 4;
  std::vector<double> coeffs(q + 1);
  double prev = 0.0;
  for (std::uint64_t s = 0; s <= q; ++s) {
    const double ratio = double(s + 1) / double(q + 1);
    coeffs[s] = ratio - prev;
    prev = ratio;
  }
  for (double c : coeffs) CHECK(c == doctest::Approx(1.0 / double(q + 1)).epsilon(1e-12));
  CHECK(check_partial_sum_condition(coeffs).ok);
}

TEST_CASE("geometric truncation keeps only negligible mass") {
  CoefficientModel model;
  model.kind = CoefficientKind::infinite_geometric;
  model.rho = 0.5;
  const std::uint64_t J = geometric_truncation(model);
  CHECK(std::pow(model.rho, double(J + 1)) <= 1e-8);
  CHECK(std::pow(model.rho, double(J)) > 1e-9);

  const CoefficientSample s = sample_coeffs(model, 5, 0);
  CHECK(s.coeffs.size() == J + 1);
  CHECK(check_partial_sum_condition(s.coeffs).ok);
  // total = S (1 - rho^{J+1})
  const double scale = s.coeffs[0] / (1.0 - model.rho);
  CHECK(s.total ==
        doctest::Approx(scale * (1.0 - std::pow(model.rho, double(J + 1)))).epsilon(1e-12));
}

TEST_CASE("finite order approximation folds the tail into the last slot") {
  CoefficientModel model;
  model.kind = CoefficientKind::infinite_geometric;
  model.rho = 0.5;
  const CoefficientSample full = sample_coeffs(model, 6, 1);
  const double scale = full.coeffs[0] / (1.0 - model.rho);

  const CoefficientSample q2 = finite_order_approx(full, 2);
  REQUIRE(q2.coeffs.size() == 3);
  CHECK(q2.coeffs[0] == full.coeffs[0]);
  CHECK(q2.coeffs[1] == full.coeffs[1]);
  double tail = 0.0;
  for (std::size_t j = 2; j < full.coeffs.size(); ++j) tail += full.coeffs[j];
  CHECK(q2.coeffs[2] == tail);
  CHECK(q2.coeffs[2] == doctest::Approx(scale * 0.25).epsilon(1e-7));
  CHECK(check_partial_sum_condition(q2.coeffs).ok);

  // q beyond the support: unchanged coefficients plus a zero tail
  const CoefficientSample small = make_coefficient_sample({1.0, -0.5, 0.5});
  const CoefficientSample widened = finite_order_approx(small, 5);
  REQUIRE(widened.coeffs.size() == 6);
  CHECK(widened.coeffs[0] == 1.0);
  CHECK(widened.coeffs[1] == -0.5);
  CHECK(widened.coeffs[2] == 0.5);
  CHECK(widened.coeffs[5] == 0.0);
  CHECK(widened.total == small.total);
}

TEST_CASE("bridge partial-sum ratios are the uniform draws themselves") {
  CoefficientModel model;
  model.kind = CoefficientKind::random_bridge;
  model.order = 3;
  for (std::uint64_t rep = 0; rep < 50; ++rep) {
    const CoefficientSample s = sample_coeffs(model, 123, rep);
    double partial = 0.0;
    for (double c : s.coeffs) {
      partial += c;
      const double ratio = partial / s.total;
      CHECK(ratio >= -1e-12);
      CHECK(ratio <= 1.0 + 1e-12);
    }
    CHECK(partial / s.total == doctest::Approx(1.0).epsilon(1e-12));
  }
}
