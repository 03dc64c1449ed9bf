#pragma once

#include "nnls/scattering.hpp"

#include <cmath>

namespace nnls::testing {

inline UniformGrid reference_xgrid() { return {-16.0, 16.0, 512}; }
inline UniformGrid reference_kgrid() { return {-24.0, 24.0, 1024}; }

inline Potential gaussian_potential(double amplitude, double center = 0.0,
                                    UniformGrid grid = reference_xgrid(), int sigma = 1) {
    return make_potential(
        sample(grid, [=](double x) { return Complex(amplitude * std::exp(-(x - center) * (x - center)), 0.0); }),
        sigma);
}

/// Box on [lo_s, hi_s]; nodes at the jumps (when present) carry half the
/// amplitude so the trapezoid area is exact.
inline Potential box_potential(double amplitude, double lo_s, double hi_s, UniformGrid grid, int sigma = 1) {
    const double eps = 1e-9 * grid.spacing();
    return make_potential(sample(grid,
                                 [=](double x) {
                                     if (std::abs(x - lo_s) < eps || std::abs(x - hi_s) < eps)
                                         return Complex(amplitude / 2.0, 0.0);
                                     return (x > lo_s && x < hi_s) ? Complex(amplitude, 0.0) : Complex(0.0, 0.0);
                                 }),
                          sigma);
}

/// Grid with nodes exactly at 0 and 1 for the box oracle.
inline UniformGrid box_xgrid() { return {-8.0, 8.0, 4097}; }

}  // namespace nnls::testing
