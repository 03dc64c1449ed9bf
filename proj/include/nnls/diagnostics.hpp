#pragma once

#include "nnls/reconstruct.hpp"

namespace nnls {

/// Default tolerances at the reference resolution (x in [-16,16], n_x = 512;
/// k in [-24,24], n_k = 1024). This table is the single source of defaults;
/// every entry is configurable (CLI: --tol-<name>).
struct ToleranceSet {
    double det = 1e-6;             ///< determinant identity residual
    double sym = 1e-6;             ///< a,d conjugation-symmetry residual
    double wronskian = 1e-4;       ///< integral-expression vs Wronskian cross-check
    double jump = 1e-8;            ///< RH jump residual on converged solves
    double roundtrip_l2 = 1e-3;    ///< relative L2 roundtrip error
    double plemelj_excess = 1e-10; ///< allowed excess of ||P f||/||f|| over 1
    double q_conservation = 1e-8;  ///< |Q(t) - Q(0)| drift of the PDE reference
    double positivity_identity = 1e-12;  ///< mu+ mu- vs det(I + S_H)
    double tail_slack = 1.5;       ///< allowed factor over the fitted C/k tail law
    double compare_linf = 1e-3;    ///< IST vs split-step distance
};

struct InvariantSelection {
    bool determinant = true;
    bool symmetry = true;
    bool wronskian = true;
    bool small_norm = true;   ///< L1 bound and resonance-free minima
    bool reflection_bound = true;
    bool positivity = true;
    bool plemelj = true;      ///< L2 contraction of the projections on r1
    bool tails = true;        ///< C/k decay law of a-1, d-1, b
};

struct InvariantOptions {
    UniformGrid kgrid{-24.0, 24.0, 1024};
    ToleranceSet tol;
    int workers = 0;
};

/// Evaluate the selected invariants of one potential and report each against
/// its tolerance. The report is deterministic for fixed inputs/configuration.
DiagnosticsReport run_invariant_suite(const Potential& potential, const InvariantSelection& selection,
                                      const InvariantOptions& options = {});

struct LipschitzOptions {
    UniformGrid kgrid{-24.0, 24.0, 1024};
    ReconstructOptions reconstruct;
    ScatterOptions scatter;
};

/// Empirical continuity ratios of the scattering maps for a perturbation pair:
///   forward  ||r(q_b) - r(q_a)||_Hscript / ||q_b - q_a||_H11,
///   inverse  ||qhat_b - qhat_a||_H11 / ||r(q_b) - r(q_a)||_Hscript,
/// with ||r||_Hscript = ||r1||_Hscript + ||r2||_Hscript. Measured ratios, not
/// analytic constants. Identical inputs are rejected (undefined ratio).
DiagnosticsReport lipschitz_probe(const Potential& q_a, const Potential& q_b,
                                  const LipschitzOptions& options = {});

}  // namespace nnls
