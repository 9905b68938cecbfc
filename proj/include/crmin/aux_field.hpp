#pragma once

#include <vector>

#include "crmin/exec.hpp"
#include "crmin/lattice.hpp"
#include "crmin/reparam.hpp"

namespace crmin {

// Semi-discrete field F^eps on the double cone |xi| + |eta| <= radius,
// eta = k*eps/2. Row parity fixes the xi offsets: even rows sample
// xi in eps(Z + 1/2), odd rows xi in eps Z.
class AuxField {
 public:
  double eps = 0.0;
  double radius = 0.0;
  int K = 0;  // rows k in [-K, K]

  // row k (index k + K): values at xi(j,k), j in [jmin[k+K], jmax[k+K]]
  std::vector<std::vector<Complex>> rows;
  std::vector<std::vector<unsigned char>> valid;
  std::vector<int> jmin;

  long long invalid_count = 0;  // nodes masked during evolution

  double eta(int k) const { return 0.5 * eps * k; }
  double xi(int j, int k) const { return eps * (j + ((k & 1) == 0 ? 0.5 : 0.0)); }

  bool has(int j, int k) const {
    if (k < -K || k > K) return false;
    const auto& r = rows[k + K];
    const int off = j - jmin[k + K];
    return off >= 0 && off < static_cast<int>(r.size());
  }
  bool ok(int j, int k) const {
    return has(j, k) && valid[k + K][j - jmin[k + K]] != 0;
  }
  Complex at(int j, int k) const { return rows[k + K][j - jmin[k + K]]; }
};

// f(xi,eta) = -1/2 (g''/g')(p(xi,eta)) (u'(xi-eta) + i v'(xi+eta)); requires
// the analytic backend.
Complex f_reference(const BjorlingData& data, double xi, double eta);

enum class InitVariant { Standard, Symmetric, Bjorling, ExactG };

// The two initial rows eta = 0 and eta = eps/2 on the cone of given radius.
AuxField initial_rows(const ReparamCurve& curve, InitVariant variant, double radius);

struct AuxCaps {
  double blowup = 1e6;
};

// Fills the double cone from the two initial rows; nodes whose update blows
// up or leaves the remainder-kernel strip are masked along with dependents.
AuxField evolve_F(const AuxField& init, const ReparamCurve& curve,
                  AuxCaps caps = {}, Exec exec = Exec::Parallel);

// Face-indexed projection F_{m-1/2,n+1/2}; face slot (fm,fn) stores the face
// with center (fm+1/2, fn+1/2), fm,fn in [-M, M-1].
class FaceField {
 public:
  int M = 0;
  double eps = 0.0;
  std::vector<Complex> F;
  std::vector<unsigned char> present;

  int index(int fm, int fn) const { return (fm + M) * (2 * M) + (fn + M); }
  bool ok(int fm, int fn) const {
    return fm >= -M && fm < M && fn >= -M && fn < M && present[index(fm, fn)] != 0;
  }
  Complex at(int fm, int fn) const { return F[index(fm, fn)]; }
};

FaceField project_to_faces(const AuxField& field, const LatticeGrid& grid);

// Max |residual| of the fully discrete evolution equation over all interior
// vertices whose four incident faces are present.
double devolveFmn_residual(const FaceField& faceF, const LatticeGrid& grid,
                           const LatticeCoefficients& coeffs);

}  // namespace crmin
