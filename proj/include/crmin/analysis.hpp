#pragma once

#include <string>
#include <vector>

#include "crmin/aux_field.hpp"
#include "crmin/cr_evolve.hpp"
#include "crmin/surface.hpp"

namespace crmin {

// Error measures over the ok-masked cells inside the fixed physical window
// |m eps| <= radius, |n eps| <= radius (so refinement compares one region).
struct ErrorReport {
  double eps = 0.0;
  double window_radius = 0.0;

  double sup_G = 0.0, mean_G = 0.0;          // |G - g o p|
  double sup_alpha = 0.0, sup_beta = 0.0;    // edge quotients vs g' at midpoints
  double sup_F = 0.0;                        // |F^eps - f| on the cone
  double surf_vertex = 0.0;                  // vs smooth reference at p_{m,n}
  double surf_diag_pointwise = 0.0;          // max_m |F_{m,m} - F0(m eps)|
  double surf_diag_curve_dist = 0.0;         // max_m dist(F_{m,m}, trace of F0)
  long long masked_in_window = 0;
};

struct ScenarioOutputs;  // defined in scenario.hpp

ErrorReport error_report(const ScenarioOutputs& out, double window_radius);

struct OrderFit {
  std::vector<double> eps;
  std::vector<double> err;
  double slope = 0.0;            // least squares on log err vs log eps
  std::vector<double> ratios;    // err_i / err_{i+1}
  bool ratio_only = false;       // set when an error underflowed
};

OrderFit order_fit(const std::vector<double>& eps, const std::vector<double>& err);

}  // namespace crmin
