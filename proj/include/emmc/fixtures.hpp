#pragma once

// Procedural test geometries.

#include "emmc/mesh.hpp"

#include <vector>

namespace emmc::fixtures {

/// [0,lx] x [0,ly] at z = 0 on an nx x ny grid, two triangles per cell with alternating
/// diagonals. Vertex (i, j) has index j * (nx + 1) + i.
SurfaceMesh plate(int nx, int ny, double lx = 1.0, double ly = 1.0);

/// Unit disk in z = 0: center plus `rings` rings of `sectors * r` vertices. The outer ring
/// starts at angle 0.
SurfaceMesh disk(int rings, int sectors);

/// Upper unit hemisphere (z >= 0), open along the equator.
SurfaceMesh hemisphere(int rings, int sectors);

/// Torus with major radius R and minor radius r; vertex (i, j) = i * nv + j, i along the
/// major circle, j along the minor circle.
SurfaceMesh torus(double R, double r, int nu, int nv);

/// Meridian loop through vertex 0 followed by the longitude loop through vertex 0.
std::vector<int> torus_cut_path(int nu, int nv);

/// Open tube of radius 1 and the given height.
SurfaceMesh cylinder(int around, int along, double height);

/// Subdivided icosahedron projected to the unit sphere (level 3: 642 vertices).
SurfaceMesh icosphere(int level);

} // namespace emmc::fixtures
