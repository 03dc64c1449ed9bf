#include "nnls/cauchy.hpp"

#include "nnls/fourier.hpp"
#include "nnls/quadrature.hpp"

#include <cmath>

namespace nnls {

RealVector half_line_multiplier(Index n, int sign) {
    if (n < 2 || (n & (n - 1)) != 0)
        throw std::invalid_argument("half_line_multiplier: unsupported size (must be a power of two)");
    if (sign != 1 && sign != -1) throw std::invalid_argument("half_line_multiplier: sign must be +-1");
    RealVector m = RealVector::Zero(n);
    if (sign > 0) {
        m[0] = 1.0;  // zero mode
        for (Index j = 1; j < n / 2; ++j) m[j] = 1.0;
    } else {
        for (Index j = n / 2; j < n; ++j) m[j] = 1.0;  // Nyquist + negative modes
    }
    return m;
}

namespace {

ComplexVector apply_multiplier(const ComplexVector& v, int sign) {
    const Index n = v.size();
    RealVector m = half_line_multiplier(n, sign);
    ComplexVector hat = fft_unitary(v);
    for (Index j = 0; j < n; ++j) hat[j] *= m[j];
    ComplexVector out = ifft_unitary(hat);
    if (sign < 0) out = -out;
    return out;
}

}  // namespace

SampledField plemelj(const SampledField& field, int sign) {
    require_finite(field.values, "plemelj");
    if (!field.grid.power_of_two())
        throw std::invalid_argument("plemelj: unsupported size (must be a power of two)");
    return {field.grid, apply_multiplier(field.values, sign)};
}

Complex cauchy_offaxis(const SampledField& field, Complex z) {
    require_finite(field.values, "cauchy_offaxis");
    if (std::abs(z.imag()) < 1e-8)
        throw std::domain_error("cauchy_offaxis: z too close to the real axis, use plemelj");
    const Index n = field.grid.n;
    ComplexVector integrand(n);
    for (Index i = 0; i < n; ++i)
        integrand[i] = field.values[i] / (Complex(field.grid.node(i), 0.0) - z);
    return trapezoid(integrand, field.grid.spacing()) / (2.0 * M_PI * kImag);
}

double operator_norm_check(const SampledField& field) {
    require_finite(field.values, "operator_norm_check");
    const double nf = field.values.norm();
    if (nf == 0.0) throw std::invalid_argument("operator_norm_check: zero field, ratio undefined");
    const double np = apply_multiplier(field.values, +1).norm();
    const double nm = apply_multiplier(field.values, -1).norm();
    return std::max(np, nm) / nf;
}

}  // namespace nnls
