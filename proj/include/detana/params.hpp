#pragma once

#include <cmath>

#include "detana/errors.hpp"

namespace detana {

/// Parameters of the shock-forced transonic-flow model.
///
/// All computations inside the library use dimensionless variables in which
/// the post-shock state of the steady wave is 1 and the wave speed is 1/2.
/// The dimensional scales (q, k) enter only through Scaling, at I/O
/// boundaries.
struct ModelParams {
  double alpha = 4.05;  ///< sensitivity of the forcing to the shock state (> 0)
  double beta = 0.1;    ///< reaction-zone width over induction length (> 0)
  double zeta = 1.05;   ///< overdrive factor (>= 1; > 1 for stability work)
  double q = 1.0;       ///< heat release, model units (> 0)
  double k = 1.0;       ///< induction length, model units (> 0)

  void validate(bool require_overdriven = false) const {
    if (!(alpha > 0.0)) throw ConfigError("model: alpha must be > 0");
    if (!(beta > 0.0)) throw ConfigError("model: beta must be > 0");
    if (!(q > 0.0)) throw ConfigError("model: q must be > 0");
    if (!(k > 0.0)) throw ConfigError("model: k must be > 0");
    if (!(zeta >= 1.0)) throw ConfigError("model: zeta must be >= 1");
    if (require_overdriven && !(zeta > 1.0))
      throw ConfigError("model: zeta must be > 1 (overdriven) for this operation");
  }

  /// Dimensional wave speed D = zeta * sqrt(q) of the steady wave.
  double wave_speed_dimensional() const { return zeta * std::sqrt(q); }

  /// Dimensional post-shock state u0s = 2 D.
  double post_shock_dimensional() const { return 2.0 * wave_speed_dimensional(); }
};

/// Reference scales converting dimensionless model variables to dimensional
/// ones: u = u_ref*u~, v = v_ref*v~, x = x_ref*x~, y = y_ref*y~, t = t_ref*t~,
/// f = f_ref*f~.
struct Scaling {
  double u_ref;
  double v_ref;
  double x_ref;
  double y_ref;
  double t_ref;
  double f_ref;

  static Scaling from(const ModelParams& p) {
    const double u0s = p.post_shock_dimensional();
    Scaling s;
    s.u_ref = u0s;
    s.v_ref = std::pow(u0s, 1.5);
    s.x_ref = p.k;
    s.y_ref = p.k / std::sqrt(u0s);
    s.t_ref = p.k / u0s;
    s.f_ref = u0s * u0s / p.k;
    return s;
  }
};

/// Parameters of the Arrhenius-rate closure used to build nonlocal forcing
/// functions from a temperature-sensitive reaction rate.
struct AsymptoticParams {
  double q = 5.0;         ///< scaled heat release (> 0)
  double theta = 0.4;     ///< activation energy (>= 0)
  double t_ignition = 0.0;///< rate switched off below this temperature
  double k_rate = 1.0;    ///< rate prefactor (> 0)

  /// epsilon = 1/sqrt(q), the small parameter of the closure hierarchy.
  double epsilon() const { return 1.0 / std::sqrt(q); }

  void validate() const {
    if (!(q > 0.0)) throw ConfigError("asymptotic: q must be > 0");
    if (!(theta >= 0.0)) throw ConfigError("asymptotic: theta must be >= 0");
    if (!(k_rate > 0.0)) throw ConfigError("asymptotic: k_rate must be > 0");
  }
};

}  // namespace detana
