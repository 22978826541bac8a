#pragma once

#include "emmc/embedding.hpp"
#include "emmc/fem.hpp"
#include "emmc/types.hpp"

#include <span>
#include <vector>

namespace emmc {

class Model;

struct SensitivityReport {
    VecX dC;
    VecX dV;
    double C = 0.0;
    double V = 0.0;
};

/// dC/dphi_l per surface vertex: -sum_e (u_e^T k0 u_e) sum_{design nodes of e over l} H'(phi_l) / 6.
/// `strain_energy` holds u_e^T k0 u_e per element (zero for elements outside a narrow band).
VecX compliance_phi_gradient(const SolidMesh& mesh, const DensityField& field, const VecX& surface_phi,
                             const VecX& strain_energy, double eps, double alpha);

struct VolumeFraction {
    double V = 0.0;
    /// dV/dphi_l per surface vertex.
    VecX dphi;
};

/// Solid fraction of the designable band: every element contributes vol_e / 6 per design
/// node, weighted by that node's density; panel nodes are excluded from both sums.
VolumeFraction volume_and_sensitivity(const FemModel& model, const DensityField& field, const VecX& surface_phi,
                                      double eps, double alpha);

/// Chains vertex gradients through the surface TDF to the design variables.
SensitivityReport compliance_and_volume_sensitivity(const std::vector<PatchDomain>& patches, const ComponentSet& comps,
                                                    const SurfaceTdf& tdf, const VecX& dC_dphi, const VecX& dV_dphi,
                                                    const TdfOptions& opt);

struct FdEntry {
    int index = 0;
    double analytic = 0.0;
    double fd = 0.0;
    double rel_error = 0.0;
    bool flagged = false;
};

struct FdReport {
    std::vector<FdEntry> compliance;
    std::vector<FdEntry> volume;
    int flagged() const;
    double max_rel_error() const;
};

/// Central differences of C and V with full-mesh solves. The absolute step of a variable is
/// step x max(W, H) of its patch. Entries with |a - fd| / max(|fd|, 1e-8) > 1e-3 are flagged.
FdReport fd_check(const Model& model, const ComponentSet& design, std::span<const int> indices, double step);

/// (index, analytic, fd, relative error) rows.
std::string fd_report_csv(const FdReport& report);

} // namespace emmc
