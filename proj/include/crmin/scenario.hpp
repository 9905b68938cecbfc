#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crmin/analysis.hpp"
#include "crmin/aux_field.hpp"
#include "crmin/cr_evolve.hpp"
#include "crmin/lattice.hpp"
#include "crmin/surface.hpp"
#include "crmin/zigzag.hpp"

namespace crmin {

struct ScenarioConfig {
  std::string scenario;               // identity|moebius|enneper|catenoid_ex1|curved_ex2|from-file
  std::string input_path;             // for from-file
  std::vector<double> eps_list;       // one or more mesh sizes
  int half_width = 20;
  ZigzagKind construction = ZigzagKind::A;
  InitVariant init_variant = InitVariant::Bjorling;
  double blowup_cap = 1e6;
  double degeneracy_tol = 1e-12;
  double window_radius = 0.0;         // 0 -> full window
  bool write_obj = true;
  bool write_csv = true;
  bool reflected = false;             // set when ingestion conjugated the plane
};

// Everything one (scenario, eps) run produces; the analysis layer reads it.
struct ScenarioOutputs {
  double eps = 0.0;
  BjorlingData data;
  ReparamCurve curve;
  LatticeGrid grid;
  LatticeCoefficients coeffs;
  ZigzagData zigzag;
  CRMapField field;
  AuxField auxF;
  FaceField faceF;
  DiscreteSurface surface;
  DiscreteSurface surface_alt;        // second spanning tree
  SmoothReference reference;

  double cr_audit = 0.0;
  double closure = 0.0;
  double tree_disagreement = 0.0;
  double devolve_residual = 0.0;
};

// Builtin analytic scenarios. The paper's figure curves carry a (1-i) factor
// (fourth-quadrant tangent); they are conjugated into the first quadrant at
// construction and the config records the reflection.
AnalyticBackend builtin_backend(const std::string& scenario);
BjorlingData builtin_data(const std::string& scenario, double a, double b);
SmoothReference builtin_reference(const std::string& scenario);

// Runs the full pipeline for one eps.
ScenarioOutputs run_pipeline(const ScenarioConfig& cfg, const BjorlingData& data,
                             double eps);

struct RunResult {
  int exit_code = 0;
  std::vector<ScenarioOutputs> per_eps;
  std::vector<ErrorReport> reports;
  std::vector<std::string> messages;
};

// Full scenario run: ingest/synthesize, per-eps pipelines, reports, artifacts.
RunResult run_scenario(const ScenarioConfig& cfg, const std::string& out_dir,
                       bool quiet);

}  // namespace crmin
