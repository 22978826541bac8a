#pragma once

#include "emmc/solid_mesh.hpp"
#include "emmc/types.hpp"

#include <Eigen/Core>

#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace emmc {

struct Material {
    double E = 1.0;
    double nu = 0.3;

    /// 6x6 isotropic constitutive matrix, Voigt order (xx, yy, zz, xy, yz, zx), engineering shear.
    Eigen::Matrix<double, 6, 6> elasticity() const;
    void validate() const;
};

/// Regularized step: 1 above eps, alpha below -eps, C1 cubic blend in between.
template <typename Scalar>
Scalar regularized_heaviside(Scalar x, Scalar eps, Scalar alpha)
{
    if (x > eps)
        return Scalar(1);
    if (x < -eps)
        return alpha;
    const Scalar q = x / eps;
    return Scalar(3) * (Scalar(1) - alpha) / Scalar(4) * (q - q * q * q / Scalar(3)) + (Scalar(1) + alpha) / Scalar(2);
}

template <typename Scalar>
Scalar heaviside_derivative(Scalar x, Scalar eps, Scalar alpha)
{
    if (x > eps || x < -eps)
        return Scalar(0);
    return Scalar(3) * (Scalar(1) - alpha) / Scalar(4) * (Scalar(1) / eps - x * x / (eps * eps * eps));
}

/// Mean of the six nodal regularized densities.
template <typename Derived>
typename Derived::Scalar element_density(const Eigen::MatrixBase<Derived>& phi, typename Derived::Scalar eps,
                                         typename Derived::Scalar alpha)
{
    using Scalar = typename Derived::Scalar;
    Scalar sum(0);
    for (Eigen::Index i = 0; i < phi.size(); ++i)
        sum += regularized_heaviside(phi(i), eps, alpha);
    return sum / Scalar(6);
}

using Matrix18 = Eigen::Matrix<double, 18, 18>;

/// Element stiffness of the 6-node wedge (unit density), 6-point quadrature.
/// Throws FemError on a non-positive Jacobian.
Matrix18 wedge_stiffness(const Eigen::Matrix<double, 6, 3>& X, const Material& mat);

struct BoundaryConditions {
    /// (node, axis) pairs with zero prescribed displacement.
    std::vector<std::pair<int, int>> fixed;
    std::vector<std::pair<int, Vec3>> point_loads;
    /// (surface vertex, total force), split equally over the 2 n_e + 1 nodes of the column.
    std::vector<std::pair<int, Vec3>> load_columns;

    VecX load_vector(const SolidMesh& mesh) const;
    /// Nodes carrying a nonzero load, sorted and unique.
    std::vector<int> loaded_nodes(const SolidMesh& mesh) const;
    std::vector<int> fixed_nodes() const;
    void validate(const SolidMesh& mesh) const;
};

struct FemSolution {
    /// 3 components per node; DOFs outside the solved element set are zero.
    VecX U;
    double compliance = 0.0;
    double solve_residual = 0.0;
};

/// Element stiffness matrices and volumes of a solid mesh, computed once.
class FemModel {
public:
    FemModel(std::shared_ptr<const SolidMesh> mesh, Material mat);

    const SolidMesh& mesh() const { return *mesh_; }
    std::shared_ptr<const SolidMesh> mesh_ptr() const { return mesh_; }
    const Material& material() const { return mat_; }
    const Matrix18& k0(int e) const { return k0_[static_cast<std::size_t>(e)]; }
    double volume(int e) const { return volume_(e); }
    const VecX& volumes() const { return volume_; }

    /// u_e^T k0 u_e for every element.
    VecX strain_energy_density(const VecX& U) const;

private:
    std::shared_ptr<const SolidMesh> mesh_;
    Material mat_;
    std::vector<Matrix18> k0_;
    VecX volume_;
};

/// K = sum_e coef_e k0(e), fixed DOFs eliminated, solved by sparse Cholesky. When `elements`
/// is given only those elements are assembled and DOFs not touched by them stay zero.
/// Throws FemError when K is singular or the relative residual exceeds 1e-6.
FemSolution assemble_and_solve(const FemModel& model, const VecX& coef, const BoundaryConditions& bc,
                               const std::vector<int>* elements = nullptr);

/// One-shot variant building the element matrices on the fly.
FemSolution assemble_and_solve(std::shared_ptr<const SolidMesh> mesh, const VecX& densities, const BoundaryConditions& bc,
                               const Material& mat);

} // namespace emmc
