#pragma once

#include "nnls/report.hpp"
#include "nnls/types.hpp"

namespace nnls {

/// Potential q(x) on a symmetric x-grid with nonlinearity sign sigma.
/// small_norm() marks the regime in which the spectral problem is free of
/// eigenvalues and resonances and |r_{1,2}| < 1 is guaranteed.
struct Potential {
    SampledField field;
    int sigma = 1;
    double l1_norm = 0.0;
    bool decayed = true;  // |q| <= 1e-8 at both grid endpoints

    bool small_norm() const { return l1_norm < 1.0 / 6.0; }
};

/// Validates sigma and finiteness, computes the L1 norm and the endpoint
/// decay flag. A non-decayed field is accepted here but rejected by
/// march_jost (the marching boundary conditions assume decay).
Potential make_potential(SampledField field, int sigma);

/// The four Jost solutions of the spatial spectral problem:
///  phi-type (first kind)  -> e1 as x -> -inf (phi_minus) or +inf (phi_plus),
///  psi-type (second kind) -> e2 likewise.
/// phi_minus and psi_plus extend analytically to Im k >= 0; phi_plus and
/// psi_minus to Im k <= 0.
enum class JostKind { phi_minus, phi_plus, psi_minus, psi_plus };

struct JostTrace {
    Complex k;
    JostKind which = JostKind::phi_minus;
    ComplexVector first;   // component 1 at every x-node
    ComplexVector second;  // component 2 at every x-node
};

/// Cumulative integrals s(x) = int_{+-inf}^{x} q(y) conj(q(-y)) dy entering
/// the large-k expansion of the Jost functions. The first- and second-kind
/// families share the same integrand, so s2_* coincides with s1_*; both are
/// kept to mirror the two expansions.
struct SFields {
    ComplexVector s1_minus, s1_plus, s2_minus, s2_plus;
};

/// March the selected Jost solution across the grid from the side where its
/// boundary value is imposed. The scheme treats the oscillatory kernels
/// exp(+-2ik(x-y)) exactly within each step and interpolates only the smooth
/// factors linearly (integrating-factor trapezoid), so the accuracy constant
/// is uniform in |k| on the real axis.
/// Errors: k outside the admissible half-plane -> domain error;
/// non-decayed potential -> rejected input.
JostTrace march_jost(const Potential& potential, Complex k, JostKind which);

SFields compute_s_fields(const Potential& potential);

struct ScatteringResiduals {
    double determinant = 0.0;  // max_k |a d + sigma b conj(b(-k)) - 1|
    double symmetry_a = 0.0;   // max_k |conj(a(-k)) - a(k)|
    double symmetry_d = 0.0;
    double tail = 0.0;         // max endpoint deviation of (a-1, d-1, b)
    double wronskian = 0.0;    // max_k cross-check vs Wronskian expressions
};

struct ScatteringData {
    UniformGrid kgrid;
    ComplexVector a, b, d;
    ComplexVector c;  // derived: c(k) = -sigma * conj(b(-k)), never independent
    int sigma = 1;
    ScatteringResiduals residuals;
    bool determinant_flagged = false;  // residual above tolerance (data still valid)
};

struct ScatterOptions {
    double tol_det = 1e-6;
    bool check_wronskian = true;
    int workers = 0;
};

/// a(k), b(k), d(k) for every k on a symmetric real grid, read off from the
/// marched phi_minus / psi_minus traces (their terminal values realize the
/// full-line integral expressions under the same quadrature). The Wronskian
/// route at the node nearest x = 0 is kept as an independent cross-check.
ScatteringData scattering_coefficients(const Potential& potential, const UniformGrid& kgrid,
                                       const ScatterOptions& options = {});

/// Reflection data r1 = b/a, r2 = conj(b(-k))/d with time stamp (t = 0 at
/// creation). -k sampling is index reflection on the symmetric grid.
struct ReflectionPair {
    UniformGrid kgrid;
    ComplexVector r1, r2;
    double t = 0.0;
    double sup_r = 0.0;
};

/// Errors: |a| or |d| below 1e-12 anywhere -> division hazard (resonance or
/// violated small-norm assumption).
ReflectionPair reflection_coefficients(const ScatteringData& data);

/// Small-norm regime report: L1 norm against 1/6 and, in the small-norm
/// regime, min|a|, min|d| against the resonance-free bound 1 - e^(1/3)/6.
DiagnosticsReport no_resonance_check(const Potential& potential, const ScatteringData& data);

}  // namespace nnls
