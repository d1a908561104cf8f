#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lsqmc/points.hpp"

namespace lsqmc::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitResource = 2;

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 12 significant digits, '.' separator, "nan"/"inf" for non-finite values.
std::string format_number(double value);

/// 600x600 SVG 1.1 scatter: one r=1 circle per point, optional 10x10 grid.
std::string render_svg(const PointList2D& points, bool grid);

}  // namespace lsqmc::cli
