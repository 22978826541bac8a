#pragma once

#include "emmc/dof_removal.hpp"
#include "emmc/embedding.hpp"
#include "emmc/fem.hpp"
#include "emmc/mesh.hpp"
#include "emmc/mma.hpp"

#include <json.hpp>

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace emmc {

/// Surface vertices picked by explicit ids, by the vertex nearest to a point, or by an
/// axis-aligned box.
struct VertexSelector {
    enum class Kind { Ids, Nearest, Box };
    Kind kind = Kind::Ids;
    std::vector<int> ids;
    Vec3 point = Vec3::Zero();
    Vec3 lo = Vec3::Zero();
    Vec3 hi = Vec3::Zero();

    std::vector<int> resolve(const SurfaceMesh& mesh) const;
    bool operator==(const VertexSelector&) const = default;
};

/// Chart corner: a surface vertex (with `occurrence` picking among several boundary copies
/// of it, in loop order) or the boundary vertex nearest to a point.
struct CornerSpec {
    enum class Kind { Vertex, Point };
    Kind kind = Kind::Vertex;
    int vertex = 0;
    int occurrence = -1;
    Vec3 point = Vec3::Zero();

    bool operator==(const CornerSpec&) const = default;
};

struct PatchConfig {
    std::vector<int> labels{0};
    std::vector<int> cut_path;
    /// Empty: arc-length quartiles of the boundary loop starting at its first vertex.
    std::vector<CornerSpec> corners;
    double width = 1.0;
    double height = 1.0;
    int grid_x = 1;
    int grid_y = 1;

    bool operator==(const PatchConfig&) const = default;
};

struct FixedSpec {
    VertexSelector vertices;
    std::vector<int> axes{0, 1, 2};
    bool operator==(const FixedSpec&) const = default;
};

struct LoadSpec {
    VertexSelector vertices;
    /// Force per selected vertex.
    Vec3 force = Vec3::Zero();
    /// Column loads are split over the 2 n_e + 1 nodes through the thickness; point loads
    /// act on the node of the given layer.
    bool column = true;
    int layer = 0;
    bool operator==(const LoadSpec&) const = default;
};

struct OptimizerConfig {
    double tol = 1e-4;
    int max_iterations = 300;
    PathRule path_rule = PathRule::LoadAndSupport;
    bool dof_removal = true;
    int checkpoint_every = 10;
    MmaOptions mma;

    bool operator==(const OptimizerConfig& o) const;
};

struct RunConfig {
    std::filesystem::path mesh_path;
    std::optional<MeshFormat> mesh_format;
    std::filesystem::path labels_path;
    std::vector<PatchConfig> patches;
    double thickness = 0.0;
    int layers = 2;
    Material material;
    PanelSpec panel;
    double epsilon = 0.1;
    double alpha = 1e-3;
    double ks_l = 100.0;
    double volume_bound = 0.4;
    std::vector<FixedSpec> fixed;
    std::vector<LoadSpec> loads;
    OptimizerConfig optimizer;
    /// Initial thickness factor of the layout; defaults to volume_bound / (1.6 sqrt 2).
    std::optional<double> thickness_factor;
    std::filesystem::path output_dir = "output";

    double layout_thickness_factor() const;
    bool operator==(const RunConfig& o) const;
};

/// Relative paths are resolved against `base_dir`. Unknown keys and invalid values raise
/// ConfigError naming the field.
RunConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);
nlohmann::json to_json(const RunConfig& cfg);

} // namespace emmc
