#pragma once

#include "nnls/types.hpp"

namespace nnls {

/// Sharp half-line multiplier on the transform side, m(xi) in {0, 1}.
///
/// P+ keeps the strictly positive frequencies plus the zero mode; P- keeps
/// the strictly negative frequencies plus the Nyquist mode (applied with an
/// overall minus sign). Assigning the two self-conjugate modes whole, one to
/// each side, keeps the discrete identities exact:
///   P+ - P- = I,   P+P+ = P+,   P-P- = -P-,   P+P- = P-P+ = 0,
///   ||P+f||^2 + ||P-f||^2 = ||f||^2.
/// Note the sign convention: the pair is the signed Plemelj pair (P- acts as
/// -1 on lower half-plane data), so -P- is the complementary projection.
RealVector half_line_multiplier(Index n, int sign);

/// Plemelj boundary projection P^sign of a field sampled on a symmetric
/// power-of-two k-grid, realized as a Fourier multiplier.
/// Domain truncation means Hardy-type inputs with 1/k tails are reproduced
/// only to O(tail) accuracy; the exact identities above hold regardless.
SampledField plemelj(const SampledField& field, int sign);

/// Off-axis Cauchy integral (2*pi*i)^(-1) * int h(s)/(s - z) ds by trapezoid.
/// Requires |Im z| >= 1e-8; use plemelj for boundary values.
Complex cauchy_offaxis(const SampledField& field, Complex z);

/// max(||P+f||_2, ||P-f||_2) / ||f||_2; contract: <= 1 + 1e-10.
/// Rejects the zero field (undefined ratio).
double operator_norm_check(const SampledField& field);

}  // namespace nnls
