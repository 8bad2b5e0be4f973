#pragma once

/** @file
 *  Deterministic text renderings of solve traces: CSV series and a
 *  self-contained SVG line plot on a log10 residual axis. Equal traces
 *  produce byte-equal output.
 */

#include <filesystem>
#include <string>
#include <string_view>

#include "undet/solver.hpp"

namespace undet::report {

// Header "k,residual,step_norm"; floats with 17 significant digits, LF line
// endings, step_norm empty on the last row.
std::string trace_csv(const SolveTrace& trace);

// Header "k,residual_project,residual_polyak"; the shorter series leaves
// empty cells.
std::string compare_csv(const SolveTrace& project, const SolveTrace& polyak);

std::string trace_svg(const SolveTrace& trace, std::string_view title);

std::string compare_svg(const SolveTrace& project, const SolveTrace& polyak,
                        std::string_view title);

// Writes content as-is; throws std::runtime_error naming the path on failure.
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace undet::report
