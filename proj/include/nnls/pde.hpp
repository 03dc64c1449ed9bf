#pragma once

#include "nnls/scattering.hpp"

namespace nnls {

struct SplitStepOptions {
    bool dealias = false;            ///< 2/3-rule truncation in the linear step
    double blowup_threshold = 1e6;   ///< any |q| above this aborts as instability
    bool nonlinear_enabled = true;   ///< disabled -> exact free Schroedinger propagator
};

/// Strang split-step integrator for i q_t + q_xx + 2 sigma q^2 conj(q)(-x) = 0:
/// half nonlinear step, full linear step, half nonlinear step per dt.
///
/// Linear step: exact Fourier multiplier exp(-i xi^2 dt).
/// Nonlinear step: V(x) = q(x) conj(q)(-x) is pointwise invariant along the
/// nonlinear flow i q_t + 2 sigma q^2 conj(q)(-x) = 0 — differentiating
/// q(x,t) conj(q(-x,t)) in t and substituting q_t = 2 i sigma V q makes the
/// two terms cancel — so the substep is the exact rotation
/// q <- q exp(2 i sigma V(x) dt).
///
/// Requires a symmetric power-of-two x-grid (the reflection must be an index
/// map), dt > 0, and t an integer multiple of dt.
Potential split_step(const Potential& q0, double t, double dt, const SplitStepOptions& options = {});

/// First conserved functional Q = int q(x) conj(q)(-x) dx (the power analogue
/// for the nonlocal coupling). Both substeps above conserve it exactly, which
/// makes |Q(t) - Q(0)| a sharp integrator diagnostic.
Complex conserved_quantity(const Potential& q);

}  // namespace nnls
