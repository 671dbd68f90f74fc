#pragma once

#include <memory>
#include <vector>

#include "detana/params.hpp"

namespace detana {

/// Forcing amplitude and its sensitivity to the shock state, at one point.
struct ForcingEval {
  double value = 0.0;       ///< f(xi, u_s); zero ahead of the shock (xi > 0)
  double dvalue_dus = 0.0;  ///< partial derivative of f with respect to u_s
};

/// A forcing function f(xi, u_s) in shock-frame coordinates, xi = x - x_s.
/// Implementations are immutable and safe to share across threads.
class Forcing {
 public:
  virtual ~Forcing() = default;

  virtual ForcingEval eval(double xi, double u_s) const = 0;

  /// Cumulative mass below xi: integral of f over (-inf, min(xi, 0)].
  /// Default implementation integrates eval() adaptively.
  virtual double mass_below(double xi, double u_s) const;

  /// Leftmost coordinate beyond which f is numerically negligible
  /// (tail mass below ~1e-14 of the total).
  virtual double support_left(double u_s) const = 0;

  /// Total release: integral of f over (-inf, 0], by adaptive quadrature.
  double energy(double u_s) const;
};

/// Shock-state-sensitive Gaussian forcing in dimensionless variables.
/// A Gaussian of width set by beta, centered a distance u_s^(-alpha) behind
/// the shock, truncated at the shock and normalized so that the total
/// release is 1/(8 zeta^2) for every u_s.
class GaussianShockForcing final : public Forcing {
 public:
  explicit GaussianShockForcing(const ModelParams& params);

  ForcingEval eval(double xi, double u_s) const override;
  double mass_below(double xi, double u_s) const override;
  double support_left(double u_s) const override;

  const ModelParams& params() const { return params_; }

 private:
  ModelParams params_;
};

/// Forcing constructed by integrating an Arrhenius reaction rate in which the
/// temperature is evaluated with the shock state: the progress variable obeys
/// d(lambda)/dxi = -k (1-lambda) exp(theta*q*(u_s/sqrt(q) + lambda)) with
/// lambda(0) = 0, and f = (k/2)(1-lambda) exp(...) at the integrated lambda.
class ArrheniusNonlocalForcing final : public Forcing {
 public:
  explicit ArrheniusNonlocalForcing(const AsymptoticParams& params);

  ForcingEval eval(double xi, double u_s) const override;
  double support_left(double u_s) const override;

  /// Progress variable lambda at xi <= 0 (monotone toward 1 as xi -> -inf).
  double progress(double xi, double u_s) const;

  const AsymptoticParams& params() const { return params_; }

 private:
  AsymptoticParams params_;
};

// Operation-style wrappers.
ForcingEval forcing_adhoc(double xi, double u_s, const ModelParams& params);
double forcing_energy(double u_s, const ModelParams& params);
ForcingEval forcing_arrhenius_nonlocal(double xi, double u_s,
                                       const AsymptoticParams& params);

}  // namespace detana
