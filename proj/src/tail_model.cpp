#include "summax/tail_model.hpp"

#include <cmath>
#include <stdexcept>

namespace summax {

void validate(const TailModel& model) {
  if (!(model.alpha > 0.0 && model.alpha < 2.0)) {
    throw std::invalid_argument("tail.alpha must lie in (0,2)");
  }
  if (!(model.p >= 0.0 && model.p <= 1.0)) {
    throw std::invalid_argument("tail.p must lie in [0,1]");
  }
  if (model.alpha == 1.0 && model.p != 0.5) {
    throw std::invalid_argument("tail.alpha = 1 requires p = 1/2 (symmetric law)");
  }
}

TailModel make_tail_model(double alpha, double p) {
  TailModel model{alpha, p};
  validate(model);
  return model;
}

double quantile(const TailModel& model, double u) {
  if (!(u > 0.0 && u < 1.0)) throw std::domain_error("quantile: u outside (0,1)");
  const double r = model.r();
  if (u < r) {
    // P(Z <= -x) = r x^-alpha  =>  x = (u/r)^{-1/alpha}
    return -std::pow(u / r, -1.0 / model.alpha);
  }
  // P(Z > x) = p x^-alpha  =>  x = ((1-u)/p)^{-1/alpha}
  return std::pow((1.0 - u) / model.p, -1.0 / model.alpha);
}

double tail_probability(const TailModel& model, double x) {
  if (x < 1.0) return 1.0;
  return std::pow(x, -model.alpha);
}

double cdf(const TailModel& model, double x) {
  const double r = model.r();
  if (x >= 1.0) return 1.0 - model.p * std::pow(x, -model.alpha);
  if (x > -1.0) return r;
  return r * std::pow(-x, -model.alpha);
}

double a_n(const TailModel& model, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("a_n: n must be >= 1");
  return std::pow(double(n), 1.0 / model.alpha);
}

double mu_integral(const TailModel& model, double u) {
  if (!(u > 0.0 && u <= 1.0)) throw std::domain_error("mu_integral: u outside (0,1]");
  if (model.alpha == 1.0) {
    // admitted only with p = r; the integrand is odd and mu symmetric
    return 0.0;
  }
  const double skew = model.p - model.r();
  return skew * (model.alpha / (1.0 - model.alpha)) *
         (1.0 - std::pow(u, 1.0 - model.alpha));
}

double drift_b(const TailModel& model) {
  if (model.alpha == 1.0) return 0.0;
  return (model.p - model.r()) * model.alpha / (1.0 - model.alpha);
}

double centering_b_n(const TailModel& model, std::uint64_t n, double u) {
  if (!(u > 0.0 && u <= 1.0)) throw std::domain_error("centering_b_n: u outside (0,1]");
  const double an = a_n(model, n);
  const double lo = std::max(1.0, u * an);  // support floor at |Z| = 1
  if (lo >= an) return 0.0;
  if (model.alpha == 1.0) return 0.0;
  const double skew = model.p - model.r();
  // E[Z 1{lo < |Z| <= an}] = skew * alpha/(1-alpha) * (an^{1-a} - lo^{1-a})
  const double one_minus_a = 1.0 - model.alpha;
  return skew * (model.alpha / one_minus_a) *
         (std::pow(an, one_minus_a) - std::pow(lo, one_minus_a)) / an;
}

double small_jump_mean(const TailModel& model, std::uint64_t n, double u) {
  if (!(u > 0.0)) throw std::domain_error("small_jump_mean: u must be positive");
  const double an = a_n(model, n);
  const double hi = u * an;
  if (hi <= 1.0) return 0.0;  // nothing below the support floor
  if (model.alpha == 1.0) return 0.0;
  const double skew = model.p - model.r();
  const double one_minus_a = 1.0 - model.alpha;
  return skew * (model.alpha / one_minus_a) * (std::pow(hi, one_minus_a) - 1.0) / an;
}

double karamata_ratio(const TailModel& model, double y) {
  if (!(model.alpha < 1.0)) {
    throw std::invalid_argument("karamata_ratio: requires alpha in (0,1)");
  }
  if (!(y >= 1.0)) throw std::domain_error("karamata_ratio: y must be >= 1");
  return (model.alpha / (1.0 - model.alpha)) * (1.0 - std::pow(y, model.alpha - 1.0));
}

}  // namespace summax
