#pragma once

// 6-node linear wedge: shape functions on (r, s, zeta) with (r, s) in the unit triangle and
// zeta in [-1, 1]; nodes 0-2 on zeta = -1, nodes 3-5 on zeta = +1.

#include <Eigen/Core>
#include <Eigen/LU>

#include <array>
#include <cmath>

namespace emmc::wedge {

struct GaussPoint {
    double r, s, zeta, weight;
};

/// 3-point triangle rule x 2-point Gauss rule along the axis.
inline const std::array<GaussPoint, 6>& gauss_points()
{
    static const std::array<GaussPoint, 6> pts = [] {
        const double g = 1.0 / std::sqrt(3.0);
        const double tri[3][2] = {{1.0 / 6.0, 1.0 / 6.0}, {2.0 / 3.0, 1.0 / 6.0}, {1.0 / 6.0, 2.0 / 3.0}};
        std::array<GaussPoint, 6> out{};
        int k = 0;
        for (double z : {-g, g})
            for (const auto& t : tri)
                out[k++] = {t[0], t[1], z, 1.0 / 6.0};
        return out;
    }();
    return pts;
}

/// dN/d(r, s, zeta), one column per node.
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 6> shape_derivatives(Scalar r, Scalar s, Scalar zeta)
{
    const Scalar lo = (Scalar(1) - zeta) / Scalar(2);
    const Scalar hi = (Scalar(1) + zeta) / Scalar(2);
    const Scalar L[3] = {Scalar(1) - r - s, r, s};
    const Scalar dLdr[3] = {Scalar(-1), Scalar(1), Scalar(0)};
    const Scalar dLds[3] = {Scalar(-1), Scalar(0), Scalar(1)};
    Eigen::Matrix<Scalar, 3, 6> dN;
    for (int i = 0; i < 3; ++i) {
        dN(0, i) = dLdr[i] * lo;
        dN(1, i) = dLds[i] * lo;
        dN(2, i) = -L[i] / Scalar(2);
        dN(0, i + 3) = dLdr[i] * hi;
        dN(1, i + 3) = dLds[i] * hi;
        dN(2, i + 3) = L[i] / Scalar(2);
    }
    return dN;
}

/// Jacobian d(x,y,z)/d(r,s,zeta) for node coordinates given one node per row.
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 3> jacobian(const Eigen::Matrix<Scalar, 6, 3>& X, Scalar r, Scalar s, Scalar zeta)
{
    return shape_derivatives(r, s, zeta) * X;
}

} // namespace emmc::wedge
