#pragma once

#include <functional>
#include <vector>

#include "crmin/bjorling_data.hpp"
#include "crmin/cr_evolve.hpp"
#include "crmin/exec.hpp"

namespace crmin {

// Per-edge increments of the discrete Weierstrass one-form,
//   dF = Re[ (dp)^2 / dG * (1 - G+G, i(1 + G+G), G+ + G) ].
// Horizontal edges keyed by (m-1/2, n), vertical by (m, n+1/2).
struct EdgeIncrements {
  int M = 0;
  std::vector<Vec3> horiz;  // edge (m-1/2, n): index (m-1+M)*(2M+1)+(n+M)
  std::vector<Vec3> vert;   // edge (m, n+1/2): index (m+M)*(2M)+(n+M)
  std::vector<unsigned char> horiz_ok, vert_ok;

  int h_index(int m, int n) const { return (m - 1 + M) * (2 * M + 1) + (n + M); }
  int v_index(int m, int n) const { return (m + M) * (2 * M) + (n + M); }
};

EdgeIncrements edge_increments(const CRMapField& field, const LatticeGrid& grid,
                               Exec exec = Exec::Parallel);

// Max over all-ok quads of |sum of the four signed edge increments| divided
// by the mean edge increment norm.
double closure_defect(const EdgeIncrements& inc, const CRMapField& field,
                      const LatticeGrid& grid);

enum class SpanningTree { ZigzagColumns, ColumnRows };

class DiscreteSurface {
 public:
  int M = 0;
  double eps = 0.0;
  std::vector<Vec3> F;
  std::vector<Vec3> N;
  std::vector<unsigned char> present;

  int index(int m, int n) const { return (m + M) * (2 * M + 1) + (n + M); }
  bool has(int m, int n) const {
    return m >= -M && m <= M && n >= -M && n <= M && present[index(m, n)] != 0;
  }
};

// Accumulates the increments over a fixed spanning tree starting at the
// anchor; normals are sigma(G). Cells unreachable through ok edges stay absent.
DiscreteSurface integrate_surface(const CRMapField& field, const LatticeGrid& grid,
                                  const Vec3& anchor,
                                  SpanningTree tree = SpanningTree::ZigzagColumns);

// Max vertex distance between two integrations (path-independence audit).
double surface_disagreement(const DiscreteSurface& s1, const DiscreteSurface& s2);

// Smooth Weierstrass evaluation at z: (F_u, F_v, N).
struct WeierstrassFrame {
  Vec3 Fu, Fv, N;
};
WeierstrassFrame smooth_weierstrass(const AnalyticBackend& an, Complex z);

// Smooth reference surface; closed form when supplied, else adaptive Simpson
// of the holomorphic Weierstrass integrand along the segment anchor -> z.
class SmoothReference {
 public:
  AnalyticBackend an;
  std::function<Vec3(Complex)> closed_form;  // may be empty
  Vec3 F_at_0{};  // value at z = 0

  Vec3 F(Complex z) const;
  Vec3 N(Complex z) const;
};

// Synthesizes Bjorling data from analytic (g, phi): N0 = sigma(g o phi),
// dF0 = Re[(phi_dot^2/dG0) rho(G0)], F0 by adaptive quadrature of dF0.
BjorlingData synthesize_bjorling(const AnalyticBackend& an, double a, double b,
                                 const Vec3& anchor, double quad_tol = 1e-12);

}  // namespace crmin
