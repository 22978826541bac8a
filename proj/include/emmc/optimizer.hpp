#pragma once

#include "emmc/components.hpp"
#include "emmc/mma.hpp"
#include "emmc/model.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace emmc {

/// Per-variable scale and box bounds (unscaled units) of a component layout. Chart sizes
/// are given per patch.
struct VariableScaling {
    VecX scale;
    VecX lower;
    VecX upper;

    VecX to_scaled(const VecX& d) const { return d.cwiseQuotient(scale); }
    VecX to_design(const VecX& z) const { return z.cwiseProduct(scale); }
    VecX scaled_lower() const { return lower.cwiseQuotient(scale); }
    VecX scaled_upper() const { return upper.cwiseQuotient(scale); }
};

VariableScaling variable_scaling(const ComponentSet& layout, const std::vector<Vec2>& chart_sizes);
std::vector<Vec2> chart_sizes(const std::vector<PatchDomain>& patches);

enum class Status { Running, Converged, MaxIterations };
const char* status_name(Status s);

struct HistoryRow {
    int iter = 0;
    double C = 0.0;
    double V = 0.0;
    /// max |z_k - z_{k-1}| in scaled variables, NaN on the first row.
    double delta = 0.0;
    BandStats band;
};

struct OptimizationState {
    /// Scaled design to evaluate at `iteration`.
    VecX z;
    std::optional<VecX> z_prev;
    /// Number of MMA updates performed so far.
    int iteration = 0;
    std::vector<HistoryRow> history;
    MmaState mma;
    /// Compliance of the first evaluated design; the objective is C / C_ref.
    double C_ref = 0.0;
};

/// Converged when the last recorded row has max scaled change below `tol` (needs two rows)
/// and satisfies the volume bound; otherwise finished with MaxIterations once
/// `iteration >= max_iterations`.
bool converged(const OptimizationState& state, double tol, int max_iterations, double volume_bound,
               Status* status = nullptr);

struct OptimizeOptions {
    double volume_bound = 0.4;
    double tol = 1e-4;
    int max_iterations = 300;
    MmaOptions mma;
    /// Empty: no files are written.
    std::filesystem::path output_dir;
    int checkpoint_every = 10;
    bool band_columns = false;
    std::function<void(const HistoryRow&, const Evaluation&)> on_iteration;
};

struct OptimizeResult {
    ComponentSet design;
    Status status = Status::Running;
    std::vector<HistoryRow> history;
    Evaluation final_evaluation;
    OptimizationState state;
};

/// Fresh state at the initial layout.
OptimizationState initial_state(const ComponentSet& layout, const VariableScaling& scaling);

OptimizeResult optimize(const Model& model, const ComponentSet& layout, const VariableScaling& scaling,
                        OptimizationState state, const OptimizeOptions& opt);

std::string history_csv(const std::vector<HistoryRow>& rows, bool band_columns);

/// Checkpoint = design file at `path` (the next design to evaluate) plus `path`.mma holding
/// the MMA state, C_ref, the previous design and the history so far.
void write_checkpoint(const std::filesystem::path& path, const OptimizationState& state);
OptimizationState read_checkpoint(const std::filesystem::path& path, std::size_t expected_variables);

} // namespace emmc
