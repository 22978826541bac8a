#pragma once

#include <Eigen/Core>

namespace emmc {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using VecX = Eigen::VectorXd;
using MatX = Eigen::MatrixXd;

/// Row-per-point coordinate arrays, libigl style.
using Points2 = Eigen::Matrix<double, Eigen::Dynamic, 2>;
using Points3 = Eigen::Matrix<double, Eigen::Dynamic, 3>;
using Triangles = Eigen::Matrix<int, Eigen::Dynamic, 3>;

} // namespace emmc
