#pragma once

#include "emmc/components.hpp"
#include "emmc/conformal.hpp"
#include "emmc/mesh.hpp"
#include "emmc/solid_mesh.hpp"
#include "emmc/types.hpp"

#include <algorithm>
#include <memory>
#include <vector>

namespace emmc {

/// Value of a patch TDF off the patch, and of a patch without components.
inline constexpr double kExtensionConstant = -1.0;

/// Prescribed base panels. The lower band [-t/2, -t/2 + omega_bar_2) holds rho_1 and the
/// upper band (t/2 - omega_bar_1, t/2] holds rho_2.
struct PanelSpec {
    double omega_bar_1 = 0.0;
    double omega_bar_2 = 0.0;
    double rho_1 = 1.0;
    double rho_2 = 1.0;
    double modulus_scale_1 = 1.0;
    double modulus_scale_2 = 1.0;

    void validate(double t) const;
    bool has_panels() const { return omega_bar_1 > 0.0 || omega_bar_2 > 0.0; }
};

enum class Band { Lower, Design, Upper };

/// Band edges belong to the designable band. A relative tolerance of 1e-12 t absorbs
/// round-off in j t / (2 n_e).
Band classify_band(double omega, double t, const PanelSpec& panel);

/// Density of a solid point at thickness coordinate omega whose projection carries TDF
/// value `phi`.
double solid_density(double omega, double phi, double t, const PanelSpec& panel, double eps, double alpha);

/// One patch of the atlas: its faces, the local-to-global vertex map, and its chart.
struct PatchDomain {
    std::vector<int> faces;
    std::vector<int> to_global;
    std::shared_ptr<const PatchChart> chart;
    /// Cut-mesh copies of every local vertex.
    std::vector<std::vector<int>> copies;

    static PatchDomain build(const Submesh& sub, std::shared_ptr<const PatchChart> chart);
    int num_cut_vertices() const { return static_cast<int>(chart->rect_uv.rows()); }
    double chart_size() const { return std::max(chart->width, chart->height); }
};

/// Patch TDF at every cut-mesh vertex.
struct PatchTdf {
    /// phi_i(rect_uv(c)) per cut vertex c (rows) and component i (columns).
    MatX component_phi;
    /// K-S over components per cut vertex (the extension constant when there are none).
    VecX copy_phi;
    /// K-S over all copies of the same surface vertex; copies hold identical values.
    VecX phi;
};

/// Evaluates every component at every chart vertex, aggregates with K-S and reconciles
/// cut copies. `profile_floor` is forwarded to component_tdf.
PatchTdf patch_tdf(const PatchDomain& patch, const std::vector<Component<double>>& comps, double l, double profile_floor = 0.0);

/// Values of one patch field on global surface vertices.
struct PatchField {
    std::vector<int> vertices;
    VecX values;
};

/// Global TDF: per vertex, K-S over all patches, each extended by -1 off its vertex set.
/// When `weights` is given it receives the softmax weights (vertices x patches).
VecX stitch_global_tdf(const std::vector<PatchField>& fields, int num_vertices, double l, MatX* weights = nullptr);

/// Global TDF plus every intermediate needed to differentiate it.
struct SurfaceTdf {
    VecX phi;
    std::vector<PatchTdf> patches;
    MatX stitch_weights;
};

struct TdfOptions {
    double ks_l = 100.0;
    /// Evaluate components with a profile floor of 1e-2 x size_floor of their chart instead
    /// of rejecting non-positive thickness profiles.
    bool clamp_profile = true;
};

/// Minimum half-length / half-thickness of components in a W x H chart.
inline double size_floor(double width, double height) { return 0.01 * std::min(width, height); }

SurfaceTdf evaluate_surface_tdf(const std::vector<PatchDomain>& patches, const ComponentSet& comps, int num_vertices,
                                const TdfOptions& opt);

/// Gradient of sum_v g_v phi_v with respect to the flattened design vector.
VecX surface_tdf_pullback(const std::vector<PatchDomain>& patches, const ComponentSet& comps, const SurfaceTdf& tdf,
                          const VecX& g, const TdfOptions& opt);

/// Hard value of every component (global index, patch-major) at every surface vertex it
/// reaches; the maximum over cut copies is taken. Vertices outside the owning patch get -inf.
MatX component_vertex_phi(const std::vector<PatchDomain>& patches, const SurfaceTdf& tdf, int num_vertices);

/// Node-level and element-level material fields of the solid mesh.
struct DensityField {
    VecX node_density;
    /// node_density times the modulus multiplier of the node's band.
    VecX node_stiffness;
    std::vector<char> node_design;
    VecX element_density;
    VecX element_stiffness;
};

DensityField density_field(const SolidMesh& mesh, const VecX& surface_phi, const PanelSpec& panel, double eps, double alpha);

} // namespace emmc
