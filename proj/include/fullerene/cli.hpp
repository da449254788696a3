#pragma once

#include "fullerene/numgeom.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fullerene {

enum class OutputFormat { Text, Json };

struct CommandConfig {
    /// facevector, passport, verify, derive, compose or geometry.
    std::string command;
    /// p6, preset/file, s or "d6", target, or "barrel".
    std::string argument;
    OutputFormat format = OutputFormat::Text;
    std::optional<std::string> svg_path;
    std::optional<std::string> belyi_path;
    /// Root residual tolerance for geometry.
    double tol = 1e-12;
    unsigned max_s = 12;
};

struct RunResult {
    int status = 0;
    std::string report;
};

/// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Executes one subcommand. Never throws: errors become a nonzero status with
/// a report naming the failed check.
RunResult run(const CommandConfig& config);

struct FlatPentagon {
    /// Five vertices in the plane; the polygon closes exactly.
    std::vector<std::array<double, 2>> vertices;
    /// Gap left by the turtle walk before the closure adjustment.
    double closure_gap = 0.0;
};

/// Walks the edges with the given lengths, turning by 180 - angle at each
/// vertex, then spreads the closure gap evenly over the edges (least-squares
/// closure). lengths[i] joins vertex i to i + 1; angles[i] is at vertex i.
FlatPentagon flat_pentagon(const std::vector<double>& lengths, const std::vector<double>& angles);

std::string render_svg(const FaceGeometryReport& report);
/// Throws std::runtime_error when the file cannot be written.
void emit_svg(const FaceGeometryReport& report, const std::string& path);

}  // namespace fullerene
