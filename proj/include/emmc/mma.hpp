#pragma once

// Method of moving asymptotes for one inequality constraint, in scaled variables.

#include "emmc/types.hpp"

namespace emmc {

struct MmaOptions {
    /// Largest step per iteration, in scaled units.
    double move_limit = 0.2;
    double asy_init = 0.5;
    double asy_decrease = 0.7;
    double asy_increase = 1.2;
    double asy_min = 0.01;
    double asy_max = 10.0;
    double albefa = 0.1;
    double raa0 = 1e-5;
};

struct MmaState {
    int iteration = 0;
    VecX xold1, xold2;
    VecX low, upp;
};

/// One MMA step for: minimize f0(x) s.t. g(x) <= 0, xmin <= x <= xmax. The subproblem dual
/// in the single multiplier is solved by bisection. Throws OptimizerError when the
/// constraint is violated and its gradient is identically zero.
VecX mma_update(MmaState& state, const VecX& x, const VecX& xmin, const VecX& xmax, const VecX& df0, double g,
                const VecX& dg, const MmaOptions& opt = {});

} // namespace emmc
