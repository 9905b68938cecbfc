#pragma once

#include <vector>

#include "crmin/bjorling_data.hpp"

namespace crmin {

// Sampled reparametrization quantities along the curve.
//
// Integer nodes m*eps for m in [-W-1, W+1]; half nodes (m+1/2)*eps for
// m in [-W-1, W]. phi at integer nodes comes from cumulative midpoint
// integration of phi_dot and is shared with the lattice so the diagonal
// identity p_{m,m} = phi(m eps) holds exactly.
class ReparamCurve {
 public:
  double eps = 0.0;
  int W = 0;  // half_width

  // integer-node arrays, index i = m + W + 1, m in [-W-1, W+1]
  std::vector<Complex> phi_dot2_int;
  std::vector<Complex> phi_int;   // cumulative, phi(0) = 0
  std::vector<double> u_int, v_int;
  std::vector<Complex> G0_int, G0_dot_int;

  // half-node arrays, index i = m + W + 1 for node (m+1/2)*eps, m in [-W-1, W]
  std::vector<double> u_dot_half, v_dot_half;

  BjorlingData data;  // kept for on-demand evaluation

  int int_index(int m) const { return m + W + 1; }

  Complex phi(int m) const { return phi_int[int_index(m)]; }
  Complex phi_dot2_at_node(int m) const { return phi_dot2_int[int_index(m)]; }
  Complex G0(int m) const { return G0_int[int_index(m)]; }
  Complex G0_dot(int m) const { return G0_dot_int[int_index(m)]; }

  // u_dot at (m+1/2)*eps
  double u_dot_at(int m) const { return u_dot_half[m + W + 1]; }
  double v_dot_at(int m) const { return v_dot_half[m + W + 1]; }

  // Evaluation at arbitrary t (used by the auxiliary initial rows).
  Complex phi_dot2(double t) const;
  Complex phi_dot(double t) const;        // principal sqrt, Re > 0
  double u_dot(double t) const { return phi_dot(t).real(); }
  double v_dot(double t) const { return phi_dot(t).imag(); }
  Complex G0_at(double t) const;
  Complex G0_dot_at(double t) const;

  // d/dt log(G0_dot^2/phi_dot^2), branch-free via X'/X; analytic backend when
  // present, otherwise order-2 central differences with step eps.
  Complex dlog_ratio(double t) const;
  // d/dt [ conj(phi_dot)/phi_dot * dlog_ratio ]
  Complex dlog_ratio_weighted_deriv(double t) const;

  // Second derivatives of u, v (smooth coefficient references).
  double u_ddot(double t) const;
  double v_ddot(double t) const;
};

// Builds the sampled curve on the window [-(W+1)eps, (W+1)eps]. Throws
// NonGeneric/Ambiguous from the sign resolution and QuadrantViolation when
// u_dot or v_dot is not strictly positive across the window.
ReparamCurve reparametrize(const BjorlingData& data, double eps, int half_width);

}  // namespace crmin
