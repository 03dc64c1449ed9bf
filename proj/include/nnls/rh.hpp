#pragma once

#include "nnls/scattering.hpp"

#include <array>

namespace nnls {

/// Jump matrix S(x;k) of the Riemann-Hilbert problem, sampled per k:
///   [[sigma r1 r2,        sigma r2 e^{-2ikx}],
///    [r1 e^{2ikx},        0               ]].
/// Entry (2,2) is identically zero and not stored.
struct JumpMatrix {
    double x = 0.0;
    UniformGrid kgrid;
    ComplexVector s11, s12, s21;
};

JumpMatrix build_jump(const ReflectionPair& reflection, double x, int sigma);

struct RHOptions {
    double tol = 1e-10;        ///< relative Neumann update tolerance
    int max_iterations = 200;
    bool dense_fallback = true;
    bool full_matrix_mode = false;  ///< assemble the 2x2 iteration instead of per-row solves
};

/// Solution of Psi_- = P^-(Psi_- S + S) at one x, with Psi_+ = P^+(Psi_- S + S)
/// and the derived scalar fields used by the reconstruction formulas.
/// Entries are row-major: {11, 12, 21, 22}.
struct RHSolution {
    double x = 0.0;
    UniformGrid kgrid;
    std::array<ComplexVector, 4> psi_minus;
    std::array<ComplexVector, 4> psi_plus;
    ComplexVector mu_minus_1;  ///< 1 + (Psi_-)_11, first component of column mu_-
    ComplexVector nu_plus_2;   ///< 1 + (Psi_+)_22, second component of column nu_+
    double jump_residual = 0.0;
    int iterations = 0;
    bool dense_fallback_used = false;
};

/// Neumann iteration on the two decoupled rows of Psi_- (right-multiplication
/// by S never mixes rows); on non-convergence, a dense solve of the
/// discretized (I - P^-_S) system. Throws when both paths fail
/// (singular-equation regime, sup_r >= 1 or grid failure).
RHSolution solve_rh(const ReflectionPair& reflection, double x, int sigma, const RHOptions& options = {});

/// max over k of the Frobenius norm of M_+ - M_- - M_- S.
double jump_residual(const RHSolution& solution, const JumpMatrix& jump);

/// Pointwise eigenvalues mu_+- of I + S_H (Hermitian part of I + S):
///   mu_+- = [2 + sigma Re(r1 r2) +- sqrt(Re^2(r1 r2) + |r1 + sigma conj(r2)|^2)]/2.
/// mu_minus_min > 0 is the solvability margin of the singular equation.
struct PositivityReport {
    double mu_plus_min = 0.0;
    double mu_minus_min = 0.0;
    double c_minus_estimate = 0.0;
};

PositivityReport positivity_diagnostics(const ReflectionPair& reflection, int sigma);

}  // namespace nnls
