#pragma once

#include "emmc/types.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace emmc {

enum class MeshFormat { OFF, OBJ };

/// Indexed, oriented, manifold triangle mesh of a mid-surface.
///
/// The constructor validates every invariant and throws MeshError naming the offending
/// element: vertex indices in range, no degenerate faces (area below 1e-12 x squared
/// bounding-box diagonal), every undirected edge shared by at most two faces, and every
/// directed edge used at most once (consistent orientation).
class SurfaceMesh {
public:
    SurfaceMesh() = default;
    SurfaceMesh(Points3 vertices, Triangles faces, std::vector<int> labels = {});

    int num_vertices() const { return static_cast<int>(vertices_.rows()); }
    int num_faces() const { return static_cast<int>(faces_.rows()); }

    const Points3& vertices() const { return vertices_; }
    const Triangles& faces() const { return faces_; }
    /// Patch label per face (all zero when none were supplied).
    const std::vector<int>& labels() const { return labels_; }

    Vec3 vertex(int l) const { return vertices_.row(l).transpose(); }

    /// Faces incident to each vertex, in increasing face order.
    const std::vector<std::vector<int>>& vertex_faces() const { return vertex_faces_; }

    /// Face owning the directed edge (a, b), or -1.
    int directed_edge_face(int a, int b) const;
    bool has_edge(int a, int b) const { return directed_edge_face(a, b) >= 0 || directed_edge_face(b, a) >= 0; }
    bool is_boundary_vertex(int l) const;
    int num_edges() const { return num_edges_; }

    double bbox_diagonal() const { return bbox_diagonal_; }

    SurfaceMesh with_labels(std::vector<int> labels) const;

private:
    static std::uint64_t key(int a, int b)
    {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
    }

    Points3 vertices_;
    Triangles faces_;
    std::vector<int> labels_;
    std::vector<std::vector<int>> vertex_faces_;
    std::unordered_map<std::uint64_t, int> halfedges_;
    int num_edges_ = 0;
    double bbox_diagonal_ = 0.0;
};

SurfaceMesh load_surface_mesh(const std::filesystem::path& path, MeshFormat format);
/// Picks the format from the file extension (.off / .obj).
SurfaceMesh load_surface_mesh(const std::filesystem::path& path);
void save_off(const SurfaceMesh& mesh, const std::filesystem::path& path);

/// Sidecar label file: one integer per face line.
std::vector<int> load_face_labels(const std::filesystem::path& path, int expected_faces);

struct Topology {
    int genus = 0;
    int euler_characteristic = 0;
    int components = 0;
    /// Boundary loops, each counterclockwise with respect to the face orientation
    /// (interior on the left) and rotated to start at its smallest vertex index.
    std::vector<std::vector<int>> boundary_loops;
};

/// genus = (2c - chi - b) / 2 over the c connected components (c = 1 for a patch).
Topology genus_and_boundaries(const SurfaceMesh& mesh);

double face_area(const SurfaceMesh& mesh, int m);
/// Unit normal (L1 x L2) / |L1 x L2| with L1 = v1 - v0, L2 = v2 - v0.
Vec3 face_normal(const SurfaceMesh& mesh, int m);
/// Area-weighted 1-ring average of face normals, normalized.
Vec3 vertex_normal(const SurfaceMesh& mesh, int l);
Points3 vertex_normals(const SurfaceMesh& mesh);

/// Mesh obtained by cutting along a vertex path.
struct CutMesh {
    SurfaceMesh base;
    /// For every vertex of `base`, the vertex of the uncut mesh it was copied from.
    std::vector<int> origin;
    /// (first copy, other copy) pairs of duplicated vertices.
    std::vector<std::pair<int, int>> cut_pairs;

    /// All copies of each uncut vertex (size = number of uncut vertices).
    std::vector<std::vector<int>> copies() const;
};

/// Splits the mesh along the edges of `path` (consecutive vertex pairs; the path may
/// revisit vertices, e.g. a meridian loop followed by a longitude loop through the same
/// junction). The result must be a topological disk, otherwise "cut insufficient".
CutMesh cut_surface(const SurfaceMesh& mesh, std::span<const int> path);

/// Faces `face_ids` of `mesh` as a standalone mesh; `to_global[i]` is the source vertex of
/// local vertex i (local vertices ordered by first appearance in increasing global index).
struct Submesh {
    SurfaceMesh mesh;
    std::vector<int> to_global;
    std::vector<int> faces;
};
Submesh extract_submesh(const SurfaceMesh& mesh, std::span<const int> face_ids);

} // namespace emmc
