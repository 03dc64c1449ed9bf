#pragma once

#include "nnls/rh.hpp"

namespace nnls {

struct ReconstructOptions {
    RHOptions rh;
    int workers = 0;
    double tol_roundtrip_l2 = 1e-3;
};

/// Primary reconstruction: per x, solve the RH problem and evaluate
///   q(x) = -(sigma/pi) * int r2(k) e^{-2ikx} mu_-^(1)(x;k) dk
/// by trapezoid on the reflection's k-grid.
/// Throws a reconstruction error naming the failing x if any RH solve fails.
Potential reconstruct_q(const ReflectionPair& reflection, const UniformGrid& xgrid, int sigma,
                        const ReconstructOptions& options = {});

/// Mirror route: evaluates conj(q)(-x) = -(sigma/pi) int r1 e^{2ikx} nu_+^(2) dk,
/// then maps back to q(x) by grid reflection and conjugation. Kept as an
/// independent cross-check of reconstruct_q.
Potential reconstruct_q_mirror(const ReflectionPair& reflection, const UniformGrid& xgrid, int sigma,
                               const ReconstructOptions& options = {});

struct RoundtripOptions {
    UniformGrid kgrid{-24.0, 24.0, 1024};
    ReconstructOptions reconstruct;
    ScatterOptions scatter;
};

/// scatter -> reflect -> reconstruct (both formulas); reports relative L2 and
/// H^{1,1} errors, the two-formula agreement, and the H-script norms of
/// r1, r2 with the empirical constant of the reconstruction bound.
DiagnosticsReport roundtrip_report(const Potential& potential, const RoundtripOptions& options = {});

}  // namespace nnls
