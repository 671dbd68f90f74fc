#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "detana/errors.hpp"

namespace detana {

/// Piecewise cubic Hermite interpolant with prescribed node slopes.
/// With exact slopes the interpolation error is O(h^4); queries outside the
/// node range clamp to the nearest end.
class HermiteCurve {
 public:
  HermiteCurve() = default;
  HermiteCurve(std::vector<double> x, std::vector<double> y,
               std::vector<double> dy)
      : x_(std::move(x)), y_(std::move(y)), dy_(std::move(dy)) {
    if (x_.size() < 2 || x_.size() != y_.size() || x_.size() != dy_.size())
      throw NumericsError("HermiteCurve: inconsistent node arrays");
    for (std::size_t i = 1; i < x_.size(); ++i)
      if (!(x_[i] > x_[i - 1]))
        throw NumericsError("HermiteCurve: nodes must be strictly ascending");
  }

  bool empty() const { return x_.empty(); }
  double x_front() const { return x_.front(); }
  double x_back() const { return x_.back(); }

  double operator()(double x) const {
    const auto [i, t, h] = locate(x);
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * y_[i] + (t3 - 2 * t2 + t) * h * dy_[i] +
           (-2 * t3 + 3 * t2) * y_[i + 1] + (t3 - t2) * h * dy_[i + 1];
  }

  double derivative(double x) const {
    const auto [i, t, h] = locate(x);
    const double t2 = t * t;
    return ((6 * t2 - 6 * t) * y_[i] + (3 * t2 - 4 * t + 1) * h * dy_[i] +
            (-6 * t2 + 6 * t) * y_[i + 1] + (3 * t2 - 2 * t) * h * dy_[i + 1]) /
           h;
  }

 private:
  struct Loc {
    std::size_t i;
    double t;
    double h;
  };

  Loc locate(double x) const {
    x = std::clamp(x, x_.front(), x_.back());
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = (it == x_.begin()) ? 0 : std::size_t(it - x_.begin()) - 1;
    i = std::min(i, x_.size() - 2);
    const double h = x_[i + 1] - x_[i];
    return Loc{i, (x - x_[i]) / h, h};
  }

  std::vector<double> x_, y_, dy_;
};

}  // namespace detana
