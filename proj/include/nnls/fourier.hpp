#pragma once

#include "nnls/types.hpp"

namespace nnls {

/// Discrete Fourier transform convention used by every module in this
/// project (fixed here, never re-derived):
///
///   forward:  X_j = n^(-1/2) * sum_m x_m exp(-2*pi*i*j*m/n)
///   inverse:  x_m = n^(-1/2) * sum_j X_j exp(+2*pi*i*j*m/n)
///
/// The pair is unitary, so inverse(forward(x)) = x and the Euclidean norm is
/// preserved (Parseval). Frequency layout of index j for samples with grid
/// spacing h:
///   j = 0            -> xi = 0 (zero mode)
///   j = 1..n/2-1     -> xi_j = 2*pi*j/(n*h)   (positive frequencies)
///   j = n/2          -> Nyquist mode, |xi| = pi/h
///   j = n/2+1..n-1   -> xi_j = 2*pi*(j-n)/(n*h) (negative frequencies)
enum class FourierDirection { forward, inverse };

/// Whole-vector unitary transforms. Size must be a power of two.
ComplexVector fft_unitary(const ComplexVector& x);
ComplexVector ifft_unitary(const ComplexVector& x);

/// Signed frequency xi_j for mode j under the layout above.
double fourier_frequency(Index j, Index n, double spacing);

/// Field-level wrapper. The grid object is carried through unchanged so that
/// inverse(forward(f)) == f including metadata; after `forward`, entry j is
/// the coefficient of frequency fourier_frequency(j, n, grid.spacing()).
SampledField fourier_pair(const SampledField& field, FourierDirection dir);

}  // namespace nnls
