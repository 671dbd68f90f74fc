#include "detana/forcing.hpp"

#include <algorithm>
#include <cmath>

#include "detana/quadrature.hpp"
#include "detana/rk45.hpp"

namespace detana {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

void require_entropy(double u_s) {
  if (!(u_s > 0.0))
    throw NumericsError("forcing: u_s must be > 0 (entropy condition)");
}
}  // namespace

double Forcing::mass_below(double xi, double u_s) const {
  const double hi = std::min(xi, 0.0);
  const double lo = support_left(u_s);
  if (hi <= lo) return 0.0;
  return integrate_adaptive([&](double z) { return eval(z, u_s).value; }, lo,
                            hi, 1e-12, 1e-300)
      .value;
}

double Forcing::energy(double u_s) const {
  require_entropy(u_s);
  return integrate_adaptive([&](double z) { return eval(z, u_s).value; },
                            support_left(u_s), 0.0, 1e-12, 1e-300)
      .value;
}

GaussianShockForcing::GaussianShockForcing(const ModelParams& params)
    : params_(params) {
  params_.validate();
}

ForcingEval GaussianShockForcing::eval(double xi, double u_s) const {
  require_entropy(u_s);
  ForcingEval out;
  if (xi > 0.0) return out;

  const double beta = params_.beta;
  const double center = std::pow(u_s, -params_.alpha);  // distance behind shock
  const double g = center / (2.0 * std::sqrt(beta));
  const double norm = 1.0 + std::erf(g);
  const double amp =
      1.0 / (4.0 * params_.zeta * params_.zeta * norm * std::sqrt(4.0 * kPi * beta));
  const double w = xi + center;
  const double f = amp * std::exp(-w * w / (4.0 * beta));

  // d/du_s acts on both the Gaussian center and the Erf normalization.
  const double dcenter = -params_.alpha * std::pow(u_s, -params_.alpha - 1.0);
  const double dlog =
      -dcenter * (std::exp(-g * g) / (std::sqrt(kPi * beta) * norm) +
                  w / (2.0 * beta));
  out.value = f;
  out.dvalue_dus = f * dlog;
  return out;
}

double GaussianShockForcing::mass_below(double xi, double u_s) const {
  require_entropy(u_s);
  const double beta = params_.beta;
  const double center = std::pow(u_s, -params_.alpha);
  const double g = center / (2.0 * std::sqrt(beta));
  const double norm = 1.0 + std::erf(g);
  const double z = std::min(xi, 0.0);
  const double upper = std::erf((z + center) / (2.0 * std::sqrt(beta)));
  return (upper + 1.0) / (8.0 * params_.zeta * params_.zeta * norm);
}

double GaussianShockForcing::support_left(double u_s) const {
  require_entropy(u_s);
  // 8 Gaussian half-widths past the center leave tail mass below ~1e-14.
  return -(std::pow(u_s, -params_.alpha) + 8.0 * std::sqrt(params_.beta));
}

ArrheniusNonlocalForcing::ArrheniusNonlocalForcing(const AsymptoticParams& params)
    : params_(params) {
  params_.validate();
}

namespace {

double arrhenius_rate(double lambda, double u_s, const AsymptoticParams& p) {
  const double temperature = u_s / std::sqrt(p.q) + lambda;
  if (temperature < p.t_ignition) return 0.0;
  const double arg = p.theta * p.q * temperature;
  if (arg > 700.0)
    throw NumericsError("arrhenius forcing: rate exponent overflow");
  return p.k_rate * (1.0 - lambda) * std::exp(arg);
}

// lambda(xi) from lambda(0) = 0, marching left; lambda grows toward 1.
double integrate_progress(double xi, double u_s, const AsymptoticParams& p) {
  if (xi >= 0.0) return 0.0;
  SmallVec<double, 1> y{};
  OdeOptions opt;
  opt.rtol = 1e-10;
  opt.atol = 1e-14;
  try {
    integrate_rk45(
        [&](double, const SmallVec<double, 1>& s) {
          SmallVec<double, 1> d;
          const double lam = std::clamp(s[0], 0.0, 1.0);
          d[0] = -arrhenius_rate(lam, u_s, p);
          return d;
        },
        0.0, xi, y, opt);
  } catch (const NumericsError& e) {
    throw NumericsError(std::string("arrhenius forcing: ") + e.what());
  }
  return std::clamp(y[0], 0.0, 1.0);
}

}  // namespace

double ArrheniusNonlocalForcing::progress(double xi, double u_s) const {
  require_entropy(u_s);
  return integrate_progress(xi, u_s, params_);
}

ForcingEval ArrheniusNonlocalForcing::eval(double xi, double u_s) const {
  require_entropy(u_s);
  ForcingEval out;
  if (xi > 0.0) return out;

  const auto f_of = [&](double us) {
    const double lam = integrate_progress(xi, us, params_);
    return 0.5 * arrhenius_rate(lam, us, params_);
  };
  out.value = f_of(u_s);
  const double h = 1e-6 * u_s;
  out.dvalue_dus = (f_of(u_s + h) - out.value) / h;
  return out;
}

double ArrheniusNonlocalForcing::support_left(double u_s) const {
  require_entropy(u_s);
  // March until the mixture is essentially burnt; past that point the rate
  // carries no appreciable mass.
  double xi = -1.0 / params_.k_rate;
  for (int i = 0; i < 60; ++i) {
    if (integrate_progress(xi, u_s, params_) > 1.0 - 1e-12) return 1.05 * xi;
    xi *= 2.0;
  }
  return xi;
}

ForcingEval forcing_adhoc(double xi, double u_s, const ModelParams& params) {
  return GaussianShockForcing(params).eval(xi, u_s);
}

double forcing_energy(double u_s, const ModelParams& params) {
  return GaussianShockForcing(params).energy(u_s);
}

ForcingEval forcing_arrhenius_nonlocal(double xi, double u_s,
                                       const AsymptoticParams& params) {
  return ArrheniusNonlocalForcing(params).eval(xi, u_s);
}

}  // namespace detana
