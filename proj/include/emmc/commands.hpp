#pragma once

// Pipeline stages behind the CLI subcommands. Each writes its files into `out` (created on
// demand) and returns what it wrote in memory as well.

#include "emmc/config.hpp"
#include "emmc/model.hpp"
#include "emmc/optimizer.hpp"
#include "emmc/sensitivity.hpp"

#include <filesystem>
#include <optional>
#include <vector>

namespace emmc {

/// chart_<k>.csv per patch and charts.json with the distortion diagnostics.
std::vector<ChartDiagnostics> cmd_parameterize(const RunConfig& cfg, const std::filesystem::path& out);

struct LayoutSummary {
    ComponentSet design;
    double thickness_factor = 0.0;
    double C = 0.0;
    double V = 0.0;
};

/// initial.design, initial.vtk and layout.json.
LayoutSummary cmd_layout(const RunConfig& cfg, const std::filesystem::path& out);

struct OptimizeRun {
    std::optional<std::filesystem::path> resume;
    bool no_dof_removal = false;
    /// Print one progress line per iteration to stderr.
    bool verbose = false;
};

/// history.csv, checkpoints (with density VTK snapshots), final.design, final.vtk and
/// summary.json.
OptimizeResult cmd_optimize(const RunConfig& cfg, const std::filesystem::path& out, const OptimizeRun& run = {});

/// Design stored in a design file, or the initial layout when `design` is empty.
ComponentSet load_design(const RunConfig& cfg, const std::optional<std::filesystem::path>& design);

/// fd_gradients.csv; all variables unless `indices` is given.
FdReport cmd_check_gradients(const RunConfig& cfg, const std::filesystem::path& out,
                             const std::optional<std::filesystem::path>& design, double step,
                             std::vector<int> indices = {});

/// design.vtk (cell densities and displacements), tdf.csv (surface TDF per vertex) and
/// chart CSVs for a stored design.
Evaluation cmd_export(const RunConfig& cfg, const std::filesystem::path& out,
                      const std::optional<std::filesystem::path>& design);

} // namespace emmc
