#pragma once

#include <string>

#include "gbkop/analysis.hpp"

namespace gbkop {

/// Fixed CSV serialization of an experiment table: header row
/// n1,n2,x,y,observed,bound_or_limit,ratio; 17-significant-digit decimals;
/// LF line endings; no timestamps or metadata inside the data file.
std::string to_csv(const ExperimentTable& table);

/// Writes through a .partial file, renamed into place on success, so an
/// interrupted run never leaves a well-named but incomplete table behind.
void write_csv(const std::string& path, const ExperimentTable& table);

/// Number formatting shared by the CSV writer and reports (%.17g).
std::string format_number(double v);

} // namespace gbkop
