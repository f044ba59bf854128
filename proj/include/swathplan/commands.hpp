#pragma once

// Subcommand bodies behind the swathplan executable. Each returns the process
// exit status: 0 success or pass, 1 infeasible scenario or failed verification,
// 2 usage, config or parse error.

#include <iosfwd>

#include "swathplan/scenario.hpp"

namespace swathplan {

enum ExitStatus : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitUsage = 2,
};

int cmd_width_table(const ScenarioConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_plan(const ScenarioConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_verify(const ScenarioConfig& cfg, std::istream& plan_text, std::ostream& out,
               std::ostream& err);

/// JSON geometry for a 3D sketch of the plan: sea surface, seabed plane and one
/// segment per survey line. Frame: x east of the west boundary, y north of the
/// south boundary, z up (seabed at z = -depth).
int cmd_plot_data(const ScenarioConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace swathplan
