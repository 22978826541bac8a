#pragma once

#include "emmc/mesh.hpp"
#include "emmc/types.hpp"

#include <filesystem>
#include <memory>

namespace emmc {

using Wedges = Eigen::Matrix<int, Eigen::Dynamic, 6>;

/// Layered prism mesh offset from a mid-surface along vertex normals.
///
/// Node (l, j), j in [-n_e, n_e], has index (j + n_e) * n_v + l. Element (m, j),
/// j in [-n_e + 1, n_e], has index (j + n_e - 1) * n_f + m and connects layer j - 1
/// (nodes 0-2) to layer j (nodes 3-5), both in the surface face's vertex order.
struct SolidMesh {
    std::shared_ptr<const SurfaceMesh> surface;
    double thickness = 0.0;
    int half_layers = 0;
    Points3 nodes;
    Wedges elements;

    int num_nodes() const { return static_cast<int>(nodes.rows()); }
    int num_elements() const { return static_cast<int>(elements.rows()); }
    int num_surface_vertices() const { return surface->num_vertices(); }
    int num_surface_faces() const { return surface->num_faces(); }

    int node_index(int l, int j) const { return (j + half_layers) * num_surface_vertices() + l; }
    int element_index(int m, int j) const { return (j + half_layers - 1) * num_surface_faces() + m; }
    int node_vertex(int n) const { return n % num_surface_vertices(); }
    int node_layer(int n) const { return n / num_surface_vertices() - half_layers; }
    int element_face(int e) const { return e % num_surface_faces(); }
    /// Layer index j of the element's top face.
    int element_layer(int e) const { return e / num_surface_faces() - half_layers + 1; }

    Eigen::Matrix<double, 6, 3> element_nodes(int e) const;
};

/// v_j = v_0 + j N t / (2 n_e). Every wedge must have a positive Jacobian determinant at
/// all quadrature points; inverted wedges raise MeshError listing them.
SolidMesh generate_offset_mesh(std::shared_ptr<const SurfaceMesh> surface, double t, int n_e);

struct ThicknessCoordinate {
    double omega;
    int vertex;
};

/// Signed offset omega = j t / (2 n_e), positive along the vertex normal, and the generator
/// surface vertex of node (l, j).
ThicknessCoordinate thickness_coordinate(const SolidMesh& mesh, int l, int j);

double wedge_volume(const Eigen::Matrix<double, 6, 3>& X);

/// Legacy ASCII unstructured grid, wedge cells (type 13). Either array may be empty.
void write_vtk(const SolidMesh& mesh, const VecX& cell_density, const VecX& displacement, const std::filesystem::path& path);

} // namespace emmc
