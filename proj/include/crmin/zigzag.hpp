#pragma once

#include <functional>
#include <vector>

#include "crmin/aux_field.hpp"
#include "crmin/lattice.hpp"
#include "crmin/reparam.hpp"

namespace crmin {

enum class ZigzagKind { A, B, Exact };

// Cauchy data on the zig-zag: G_{m,m} for m in [-M, M] and G_{m,m+1} for
// m in [-M, M-1].
struct ZigzagData {
  double eps = 0.0;
  int M = 0;
  ZigzagKind kind = ZigzagKind::A;
  std::vector<Complex> diag;      // G_{m,m}, index m + M
  std::vector<Complex> offdiag;   // G_{m,m+1}, index m + M
  int branch_jumps = 0;           // construction A branch-cut crossings

  Complex on_diag(int m) const { return diag[m + M]; }
  Complex off_diag(int m) const { return offdiag[m + M]; }
};

// Construction A: diagonal read off from G0, off-diagonal by the fourth-root
// extrapolation in its branch-stable ratio form.
ZigzagData init_zigzag_A(const ReparamCurve& curve, int M);

// One-point base data for construction B.
struct ZigzagBase {
  Complex G00;
  Complex dg0;   // g'(phi(0))
  Complex ddg0;  // g''(phi(0))
};

// Estimates the base from the sampled curve (chain rule + one central
// difference) when closed-form values are not supplied.
ZigzagBase estimate_base(const ReparamCurve& curve);

// Construction B: two seed values for G, alpha from the seed edge, then alpha
// propagated along the zig-zag through the initial F rows and beta recovered
// via Q = e^{eps F}.
ZigzagData init_zigzag_B(const ReparamCurve& curve, const ZigzagBase& base,
                         const AuxField& F_rows, const LatticeGrid& grid,
                         double alpha_cap = 1e6);

// Oracle data G = g o p for tests and the exact-g pipeline variant.
ZigzagData init_zigzag_exact(const std::function<Complex(Complex)>& g,
                             const LatticeGrid& grid);

}  // namespace crmin
