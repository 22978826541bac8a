#pragma once

#include "emmc/mesh.hpp"
#include "emmc/types.hpp"

#include <Eigen/SparseCore>

#include <array>
#include <complex>
#include <filesystem>
#include <memory>
#include <vector>

namespace emmc {

/// Harmonic map of a disk-topology mesh onto the closed unit disk.
struct DiskMap {
    std::shared_ptr<const CutMesh> source;
    Points2 uv;
    /// The boundary loop (counterclockwise) that was pinned to the unit circle.
    std::vector<int> boundary;
};

/// Per-face Beltrami coefficient rho + j tau.
struct BeltramiField {
    std::vector<std::complex<double>> mu;

    double max_abs() const;
    double mean_abs() const;
};

struct ChartDiagnostics {
    double mean_abs_mu = 0.0;
    double max_abs_mu = 0.0;
    double min_signed_area = 0.0;
    int flipped_faces = 0;
    /// Largest distance of any rect_uv outside [0,W]x[0,H] (0 when all inside).
    double max_outside = 0.0;
};

/// Conformal chart of one patch onto the rectangle [0,W] x [0,H].
struct PatchChart {
    std::shared_ptr<const CutMesh> cut;
    Points2 rect_uv;
    /// Cut-mesh vertices mapped to (0,0), (W,0), (W,H), (0,H).
    std::array<int, 4> corners{};
    double width = 1.0;
    double height = 1.0;
    ChartDiagnostics diagnostics;
};

/// Beltrami coefficient (df/dzbar) / (df/dz) of the affine map with Jacobian J.
std::complex<double> beltrami_from_jacobian(const Eigen::Matrix2d& J);

/// Cotangent weight of edge (a,b) summed over incident faces, clamped to [-1e6, 1e6].
Eigen::SparseMatrix<double> cotangent_stiffness(const SurfaceMesh& mesh);

/// Boundary pinned to the unit circle at arc-length-proportional angles starting with angle
/// 0 at the loop's first vertex; interior solves the cotangent Laplace equation.
DiskMap harmonic_disk_map(std::shared_ptr<const CutMesh> cut);

/// Beltrami coefficient of the piecewise-linear inverse map disk -> surface, measured in a
/// per-face orthonormal frame of the surface (e1 along the first edge, e2 = n x e1). A
/// rotation of that frame multiplies both Wirtinger derivatives by the same unit factor,
/// so mu does not depend on the frame choice.
BeltramiField beltrami_of_inverse(const DiskMap& disk);

/// Beltrami coefficient of the piecewise-linear map surface -> plane given by `uv`.
BeltramiField map_beltrami(const SurfaceMesh& mesh, const Points2& uv);

/// Signed area of every image triangle under `uv`.
VecX signed_areas(const Triangles& faces, const Points2& uv);

/// Linear Beltrami solver onto a rectangle. The boundary arcs between consecutive corners
/// map to bottom (v=0), right (u=W), top (v=H) and left (u=0); the transverse coordinate is
/// fixed on each arc and the tangential one is left free (natural condition).
PatchChart lbs_rectangle_map(const DiskMap& disk, const BeltramiField& mu, std::array<int, 4> corners, double width, double height);

/// harmonic_disk_map + beltrami_of_inverse + lbs_rectangle_map.
PatchChart build_patch_chart(std::shared_ptr<const CutMesh> cut, std::array<int, 4> corners, double width, double height);

/// Debug dump: `vertex_id,u,v` per cut-mesh vertex.
void write_chart_csv(const PatchChart& chart, const std::filesystem::path& path);

} // namespace emmc
