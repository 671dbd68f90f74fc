#pragma once

#include <functional>
#include <vector>

namespace detana {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;   // estimated absolute error
  int evaluations = 0;
};

/// Adaptive Gauss-Kronrod (15-point) integration of f over [a, b].
/// Bisects the interval with the largest error estimate until
/// sum(err) <= max(atol, rtol*|value|). Throws NumericsError if the
/// subdivision budget is exhausted without meeting the tolerance.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double rtol = 1e-10,
                                    double atol = 0.0, int max_intervals = 4000);

/// Integrals of f over each [nodes[i], nodes[i+1]] segment (nodes ascending).
/// Each segment is integrated adaptively; intended for building cumulative
/// antiderivatives on a fixed grid.
std::vector<double> integrate_segments(const std::function<double(double)>& f,
                                       const std::vector<double>& nodes,
                                       double rtol = 1e-12, double atol = 0.0);

}  // namespace detana
