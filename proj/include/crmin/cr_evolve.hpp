#pragma once

#include <vector>

#include "crmin/exec.hpp"
#include "crmin/lattice.hpp"
#include "crmin/zigzag.hpp"

namespace crmin {

enum class CellState : unsigned char { Ok = 0, Divergent = 1, OutOfDomain = 2 };

// CR-mapping values on the index square [-M, M]^2 with a validity mask.
class CRMapField {
 public:
  double eps = 0.0;
  int M = 0;
  std::vector<Complex> G;
  std::vector<CellState> state;

  long long divergent_count = 0;
  long long out_of_domain_count = 0;

  int index(int m, int n) const { return (m + M) * (2 * M + 1) + (n + M); }
  bool ok(int m, int n) const {
    return m >= -M && m <= M && n >= -M && n <= M &&
           state[index(m, n)] == CellState::Ok;
  }
  Complex at(int m, int n) const { return G[index(m, n)]; }
};

struct EvolveCaps {
  double blowup = 1e6;
  double degeneracy_rel_tol = 1e-12;
  // Cross-ratio target from lattice point differences (default) or from the
  // stored derivative midpoint samples; identical for integration-built grids
  // up to rounding.
  bool q_from_samples = false;
};

// Fills the square by anti-diagonal sweeps away from the zig-zag. Degenerate
// or blown-up solves are masked divergent; their dependents out-of-domain.
CRMapField evolve(const ZigzagData& zigzag, const LatticeGrid& grid,
                  EvolveCaps caps = {}, Exec exec = Exec::Parallel);

// Max over all-ok quads of |CR(G...) - CR(p...)| / |CR(p...)|.
double cross_ratio_audit(const CRMapField& field, const LatticeGrid& grid,
                         Exec exec = Exec::Parallel);

// Edge quotients alpha (vertical) and beta (horizontal) of a CR map.
struct EdgeFields {
  int M = 0;
  double eps = 0.0;
  // alpha at (m, n+1/2): index (m+M)*(2M) + (n+M), n in [-M, M-1]
  // beta  at (m-1/2, n): index (m-1+M)*(2M+1) + (n+M), m-1 in [-M, M-1]
  std::vector<Complex> alpha, beta;
  std::vector<unsigned char> alpha_ok, beta_ok;

  int a_index(int m, int n) const { return (m + M) * (2 * M) + (n + M); }
  int b_index(int m, int n) const { return (m - 1 + M) * (2 * M + 1) + (n + M); }
};

EdgeFields edge_fields(const CRMapField& field, const LatticeGrid& grid);

}  // namespace crmin
