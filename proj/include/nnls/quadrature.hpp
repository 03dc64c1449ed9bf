#pragma once

#include "nnls/types.hpp"

namespace nnls {

/// Composite trapezoid of raw samples with constant spacing.
Complex trapezoid(const ComplexVector& values, double spacing);
double trapezoid(const RealVector& values, double spacing);

/// Composite trapezoid approximation of the integral of `field` over its grid.
/// Rejects non-finite samples.
Complex trapezoid_integrate(const SampledField& field);

/// Cumulative trapezoid from the left end; result[0] = 0.
ComplexVector cumulative_trapezoid(const ComplexVector& values, double spacing);

/// Centered first difference, one-sided at the endpoints. Needs n >= 3.
ComplexVector central_difference(const ComplexVector& values, double spacing);

/// Discrete analogues of the norms used as diagnostics throughout:
///   L1, L2            — plain Lebesgue norms,
///   L21               — ||<x> f||_2 with <x> = (1+x^2)^(1/2),
///   H1                — (||f||_2^2 + ||f'||_2^2)^(1/2),
///   H11               — (||<x> f||_2^2 + ||<x> f'||_2^2)^(1/2),
///   HScript           — ||f||_H1 + ||f||_L21 + sup |x f(x)|.
enum class NormKind { L1, L2, L21, H1, H11, HScript };

/// Derivative-based kinds (H1, H11, HScript) use central_difference and
/// reject grids with n < 3 as too coarse.
double weighted_norm(const SampledField& field, NormKind kind);

}  // namespace nnls
