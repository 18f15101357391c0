#pragma once

#include <string>
#include <vector>

#include "core/growth.hpp"
#include "core/numeration.hpp"

namespace ans {

/// About `points` distinct integers spaced geometrically over [lo, hi].
std::vector<unsigned long> geometric_grid(unsigned long lo, unsigned long hi, std::size_t points);

struct FitReport {
  std::vector<unsigned long> n;
  std::vector<double> ratio;
  double min = 0, max = 0;
  double spread = 0;  // max / min
  double tolerance = 0;
  bool pass = false;
  std::string render() const;
};

/// t(n)/g(n) for the class's g on the grid; stretched exponentials use the
/// log-domain ratio (log t - polyexp·log n) / (log θ_L · (n/b)^(1/d)).
FitReport empirical_fit(const RecognizableSet& x, const GrowthClass& cls,
                        const std::vector<unsigned long>& grid, double tolerance);

/// Same ratio for an explicit sequence of logarithms log t(n).
FitReport fit_logs(const std::vector<unsigned long>& n, const std::vector<double>& log_t,
                   const GrowthClass& cls, double tolerance);

struct FamilyFit {
  std::string family;
  std::vector<double> params;
  double log_spread = 0;  // log(max/min) at the best parameters
};

/// Best achievable spread of t(n)/g(n) over each class form with free
/// parameters: (log n)^g n^f with f >= 1; n^a θ^(s n^(1/d)) with a >= 0,
/// s >= 0, d = 1..4. Each spread is a convex function of the parameters, so
/// nested golden-section search finds the minimum.
std::vector<FamilyFit> minimax_family_fits(const std::vector<unsigned long>& n,
                                           const std::vector<double>& log_t);

}  // namespace ans
