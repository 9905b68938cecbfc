#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "crmin/analysis.hpp"
#include "crmin/bjorling_data.hpp"
#include "crmin/scenario.hpp"
#include "crmin/surface.hpp"

namespace crmin {

// key = value configuration, '#' comments. Throws ParseError with line
// numbers and ConstraintError for invariant violations.
ScenarioConfig parse_config(const std::string& text);
ScenarioConfig parse_config_file(const std::string& path);

// ASCII OBJ: one "v x y z" line per present vertex (row-major, 17 significant
// digits), one "f a b c d" per all-present quad, counterclockwise in (m,n).
void export_obj(const DiscreteSurface& surface, const std::string& path);
void export_obj(const DiscreteSurface& surface, std::ostream& os);

// CSV ingestion: header t,F0x,F0y,F0z,N0x,N0y,N0z[,dF0x..dN0z], strictly
// increasing uniform t. Evaluators via natural cubic splines; derivative
// columns take precedence over spline derivatives. min_eps enforces the
// resolution rule step <= min_eps/4.
BjorlingData ingest_samples(const std::string& path, double min_eps);

// Writes sampled Bjorling data in the ingestion format (round-trip tests).
void write_samples(const BjorlingData& data, double step, const std::string& path);

void write_errors_csv(const std::vector<ErrorReport>& reports, const std::string& path);
void write_orders_csv(const std::vector<std::pair<std::string, OrderFit>>& fits,
                      const std::string& path);
void write_audits_csv(const std::vector<ScenarioOutputs>& runs, const std::string& path);

}  // namespace crmin
