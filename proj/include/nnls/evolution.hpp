#pragma once

#include "nnls/reconstruct.hpp"

namespace nnls {

/// Advance reflection data by dt >= 0 through the explicit phase law
///   r1 -> r1 * exp(+4ik^2 dt),   r2 -> r2 * exp(-4ik^2 dt),
/// stamping t + dt (phases compose additively, so checkpointed runs are
/// exact). The moduli, hence sup_r, are unchanged.
///
/// Anti-aliasing contract: the phase must advance by at most pi/4 per grid
/// step at the edge of the k-grid, 4 k_max (t + dt) spacing <= pi/4;
/// violating resolutions are a hard error, never silent corruption.
ReflectionPair evolve_reflection(const ReflectionPair& reflection, double dt);

struct IstOptions {
    ScatterOptions scatter;
    ReconstructOptions reconstruct;
};

/// Full solution map of the Cauchy problem:
/// scatter(q0) -> reflect -> evolve to t -> reconstruct, returning q(t, .).
Potential ist_solve(const Potential& q0, double t, const UniformGrid& kgrid, const UniformGrid& xgrid,
                    const IstOptions& options = {});

}  // namespace nnls
