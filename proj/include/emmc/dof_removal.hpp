#pragma once

#include "emmc/embedding.hpp"
#include "emmc/fem.hpp"
#include "emmc/types.hpp"

#include <vector>

namespace emmc {

enum class PathRule { LoadAndSupport, LoadOnly };

/// Undirected overlap graph: adjacency lists over global component indices.
using ComponentGraph = std::vector<std::vector<int>>;

/// Components i and j are adjacent when some surface vertex has phi_i > 0 and phi_j > 0.
/// `vertex_phi` is vertices x components (see component_vertex_phi).
ComponentGraph component_overlap_graph(const MatX& vertex_phi);

struct ActiveSet {
    std::vector<int> components;
    /// No cluster satisfied the path rule.
    bool fallback = false;
};

/// Union of overlap clusters containing a component with phi > 0 at a load vertex and,
/// under LoadAndSupport, also one with phi > 0 at a support vertex.
ActiveSet active_components(const ComponentGraph& graph, const MatX& vertex_phi, const std::vector<int>& load_vertices,
                            const std::vector<int>& support_vertices, PathRule rule);

struct NarrowBand {
    std::vector<int> kept_elements;
    std::vector<int> kept_nodes;
    /// Full-mesh DOF -> band DOF, -1 when removed.
    std::vector<int> dof_map;
    std::vector<int> active_components;
    /// The band could not be used; the caller solves on the full mesh.
    bool fallback = false;

    int kept_dofs() const { return 3 * static_cast<int>(kept_nodes.size()); }
};

/// Keeps elements with a node whose density, counting only active components, exceeds
/// alpha + 1e-6 (panel nodes count with their own density), plus every element touching a
/// loaded or fixed node. Face-connected clusters without a fixed node are dropped. When a
/// loaded or fixed node is lost, or nothing is active, the result is flagged as fallback.
NarrowBand narrow_band_mesh(const SolidMesh& mesh, const DensityField& field, const MatX& vertex_phi,
                            const ActiveSet& active, const BoundaryConditions& bc, double eps, double alpha);

} // namespace emmc
