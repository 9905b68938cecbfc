#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "crmin/types.hpp"

namespace crmin {

// Analytic backend available when the data was synthesized from closed-form
// (g, phi). Sampled/ingested data leaves it empty and downstream falls back
// to order-2 central differences.
struct AnalyticBackend {
  std::function<Complex(Complex)> g, dg, ddg, dddg;
  std::function<double(double)> u, v, du, dv, ddu, ddv;
};

// Bjorling data: curve, normal field and their t-derivatives on [a,b], 0 in [a,b].
struct BjorlingData {
  double a = -1.0, b = 1.0;
  std::function<Vec3(double)> F0, dF0, N0, dN0;
  std::optional<AnalyticBackend> analytic;
};

struct ValidationIssue {
  int sample = 0;
  double t = 0.0;
  std::string what;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationIssue> issues;
};

// Samples the data n_samples times across [a,b] and checks the hypotheses:
// unit normals, <dF0,N0> = 0, dF0 != 0, and genericity (dF0 not parallel dN0).
ValidationReport validate(const BjorlingData& data, int n_samples);

// phi_dot^2 = <dF0,dN0> + i s ||dF0 x dN0||, sign s resolved against the
// reconstruction identity dF0 = Re[(phi_dot^2/dG0) rho(G0)].
Complex phi_dot_squared(const BjorlingData& data, double t);

// Picks the sign of Im(candidate) minimizing the reconstruction residual.
Complex sign_resolution(const BjorlingData& data, double t, Complex candidate);

// G0 = inverse stereographic of N0; dG0 by the chain rule from dN0.
Complex G0_of(const BjorlingData& data, double t);
Complex G0_dot_of(const BjorlingData& data, double t);

}  // namespace crmin
