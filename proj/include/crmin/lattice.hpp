#pragma once

#include <functional>
#include <vector>

#include "crmin/reparam.hpp"

namespace crmin {

// Rectangular lattice p_{m,n} = u(m eps) + i v(n eps), m,n in [-M, M],
// assembled by discrete integration of the half-node derivative samples.
class LatticeGrid {
 public:
  double eps = 0.0;
  int M = 0;

  std::vector<double> u_node, v_node;      // index m + M, size 2M+1
  std::vector<double> du_half, dv_half;    // u_dot at (m+1/2)eps, index m + M + 1, m in [-M-1, M]

  int node_index(int m) const { return m + M; }

  Complex p(int m, int n) const {
    return {u_node[node_index(m)], v_node[node_index(n)]};
  }
  // p_{m,n} - p_{m-1,n} (real, positive)
  double d1p(int m) const { return eps * du_half[m + M]; }
  // Im(p_{m,n+1} - p_{m,n}) (positive)
  double d2p(int n) const { return eps * dv_half[n + M + 1]; }

  double du_at(int m_plus_half_base) const { return du_half[m_plus_half_base + M + 1]; }
  double dv_at(int n_plus_half_base) const { return dv_half[n_plus_half_base + M + 1]; }
};

LatticeGrid build_lattice(const ReparamCurve& curve, int M);

// Vertex coefficients of the evolution equation plus smooth references.
class LatticeCoefficients {
 public:
  double eps = 0.0;
  int M = 0;
  std::vector<Complex> Mc, Xi;  // vertex (m,n), index (m+M)*(2M+1)+(n+M)

  Complex M_at(int m, int n) const { return Mc[(m + M) * (2 * M + 1) + (n + M)]; }
  Complex Xi_at(int m, int n) const { return Xi[(m + M) * (2 * M + 1) + (n + M)]; }

  // Theta^eps at a half-shifted point, from the same derivative samples.
  // Arguments are the half-node base indices: u_dot((mu+1/2)eps), v_dot((nu+1/2)eps).
  std::function<Complex(int, int)> theta_eps;

  // Smooth references Theta(xi,eta), Xi(xi,eta).
  std::function<Complex(double, double)> theta_smooth, xi_smooth;
};

LatticeCoefficients coefficients(const LatticeGrid& grid, const ReparamCurve& curve);

struct ConsistencyReport {
  double eps_coarse = 0.0, eps_fine = 0.0;
  double supM_coarse = 0.0, supM_fine = 0.0;
  double supXi_coarse = 0.0, supXi_fine = 0.0;
  double ratioM = 0.0, ratioXi = 0.0;
};

// Refinement check of |M^eps - Theta| and |Xi^eps - Xi| at co-located vertices
// inside |m eps|, |n eps| <= radius for mesh sizes eps and eps/2.
ConsistencyReport coefficient_consistency(const BjorlingData& data, double eps,
                                          double radius);

}  // namespace crmin
