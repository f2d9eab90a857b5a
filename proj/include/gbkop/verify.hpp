#pragma once

#include <string>
#include <vector>

namespace gbkop {

struct CheckResult {
    std::string id;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    std::string out_dir; // empty: skip CSV emission
    double eps = 1e-12;
};

/// Runs every theorem-level check at its pinned tolerance and returns one
/// result per check. When out_dir is set, each experiment's table is written
/// there as CSV (data only; the timestamp goes in the report, never the CSV).
std::vector<CheckResult> run_verification(const VerifyOptions& options);

bool all_pass(const std::vector<CheckResult>& results);

/// Plain-text report (one PASS/FAIL line per check, header with timestamp).
std::string render_report(const std::vector<CheckResult>& results,
                          const std::string& timestamp);

} // namespace gbkop
