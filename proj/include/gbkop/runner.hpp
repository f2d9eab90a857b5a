#pragma once

#include <string>

#include "gbkop/config.hpp"

namespace gbkop {

/// Executes a validated config: writes one CSV per experiment under
/// config.out_dir (plus report.txt for verify-all) and returns the process
/// exit status (0 on success / all checks passed). Evaluation failures leave
/// the partially written table behind with a .partial suffix.
int run(const RunConfig& config);

} // namespace gbkop
