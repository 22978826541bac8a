#pragma once

#include "emmc/components.hpp"
#include "emmc/config.hpp"
#include "emmc/conformal.hpp"
#include "emmc/dof_removal.hpp"
#include "emmc/embedding.hpp"
#include "emmc/fem.hpp"
#include "emmc/solid_mesh.hpp"

#include <memory>
#include <vector>

namespace emmc {

/// Conformal atlas of the configured patches, one chart per patch.
std::vector<PatchDomain> build_atlas(const SurfaceMesh& surface, const std::vector<PatchConfig>& patches);

/// Boundary-loop positions of the four corners of a patch, resolved on its cut mesh.
std::array<int, 4> resolve_corners(const CutMesh& cut, const std::vector<int>& loop, const std::vector<int>& to_global,
                                   const std::vector<CornerSpec>& corners);

/// Two crossed components along the diagonals of every grid cell, half-length = half the
/// cell diagonal, uniform half-thickness 0.4 x min(cell) x `thickness_factor`.
ComponentSet initial_layout(const std::vector<PatchConfig>& patches, double thickness_factor);

struct ModelSettings {
    double thickness = 1.0;
    int layers = 2;
    Material material;
    PanelSpec panel;
    double epsilon = 0.1;
    double alpha = 1e-3;
    double ks_l = 100.0;
    PathRule path_rule = PathRule::LoadAndSupport;
    bool dof_removal = true;
};

/// Supports and loads on surface vertices; supports and column loads act on every node
/// through the thickness.
struct SurfaceLoads {
    std::vector<std::pair<int, int>> fixed;
    std::vector<std::pair<int, Vec3>> column_loads;
    /// (vertex, layer, force)
    std::vector<std::tuple<int, int, Vec3>> point_loads;
};

struct EvalOptions {
    bool sensitivities = true;
    /// Ignored unless the model enables DOF removal.
    bool dof_removal = true;
};

struct BandStats {
    int kept_elements = 0;
    int kept_dofs = 0;
    int active_components = 0;
    bool fallback = false;
};

struct Evaluation {
    double C = 0.0;
    double V = 0.0;
    VecX dC;
    VecX dV;
    SurfaceTdf tdf;
    DensityField density;
    FemSolution fem;
    bool band_used = false;
    BandStats band;
};

class Model {
public:
    Model(std::shared_ptr<const SurfaceMesh> surface, std::vector<PatchDomain> patches, const SurfaceLoads& loads,
          ModelSettings settings);

    const SurfaceMesh& surface() const { return *surface_; }
    const std::vector<PatchDomain>& patches() const { return patches_; }
    const SolidMesh& solid() const { return *solid_; }
    const FemModel& fem() const { return *fem_; }
    const BoundaryConditions& bc() const { return bc_; }
    const ModelSettings& settings() const { return settings_; }
    TdfOptions tdf_options() const { return {settings_.ks_l, true}; }

    Evaluation evaluate(const ComponentSet& design, const EvalOptions& opt = {}) const;

private:
    std::shared_ptr<const SurfaceMesh> surface_;
    std::vector<PatchDomain> patches_;
    std::shared_ptr<const SolidMesh> solid_;
    std::unique_ptr<FemModel> fem_;
    BoundaryConditions bc_;
    ModelSettings settings_;
    std::vector<int> load_vertices_;
    std::vector<int> support_vertices_;
};

/// Loads the mesh and labels, builds the atlas, the solid mesh and the boundary conditions.
std::unique_ptr<Model> build_model(const RunConfig& cfg);

SurfaceMesh load_config_mesh(const RunConfig& cfg);

} // namespace emmc
