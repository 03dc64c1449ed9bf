#include "nnls/pde.hpp"

#include "nnls/fourier.hpp"
#include "nnls/quadrature.hpp"

#include <cmath>

namespace nnls {

namespace {

void nonlinear_half_step(ComplexVector& q, double sigma, double half_dt) {
    const Index n = q.size();
    ComplexVector v(n);
    for (Index i = 0; i < n; ++i) v[i] = q[i] * std::conj(q[n - 1 - i]);
    for (Index i = 0; i < n; ++i) q[i] *= std::exp(2.0 * kImag * sigma * v[i] * half_dt);
}

}  // namespace

Potential split_step(const Potential& q0, double t, double dt, const SplitStepOptions& options) {
    const UniformGrid& g = q0.field.grid;
    if (!g.symmetric()) throw std::invalid_argument("split_step: x-grid must be symmetric about 0");
    if (!(dt > 0.0)) throw std::invalid_argument("split_step: dt must be positive");
    if (t < 0.0) throw std::domain_error("split_step: t must be >= 0");
    const long steps = std::lround(t / dt);
    if (std::abs(static_cast<double>(steps) * dt - t) > 1e-9 * std::max(1.0, t))
        throw std::invalid_argument("split_step: t must be an integer multiple of dt");

    const Index n = g.n;
    ComplexVector lin(n);
    const double xi_max = M_PI / g.spacing();
    for (Index j = 0; j < n; ++j) {
        const double xi = fourier_frequency(j, n, g.spacing());
        lin[j] = std::exp(-kImag * xi * xi * dt);
        if (options.dealias && std::abs(xi) > (2.0 / 3.0) * xi_max) lin[j] = 0.0;
    }

    ComplexVector q = q0.field.values;
    const double sigma = q0.sigma;
    for (long s = 0; s < steps; ++s) {
        if (options.nonlinear_enabled) nonlinear_half_step(q, sigma, dt / 2.0);
        ComplexVector hat = fft_unitary(q);
        hat.array() *= lin.array();
        q = ifft_unitary(hat);
        if (options.nonlinear_enabled) nonlinear_half_step(q, sigma, dt / 2.0);
        if (q.cwiseAbs().maxCoeff() > options.blowup_threshold)
            throw std::runtime_error("split_step: instability detected (|q| exceeded blow-up threshold)");
    }
    return make_potential({g, std::move(q)}, q0.sigma);
}

Complex conserved_quantity(const Potential& q) {
    const UniformGrid& g = q.field.grid;
    if (!g.symmetric()) throw std::invalid_argument("conserved_quantity: x-grid must be symmetric about 0");
    ComplexVector integrand(g.n);
    for (Index i = 0; i < g.n; ++i) integrand[i] = q.field.values[i] * std::conj(q.field.values[g.reflect(i)]);
    return trapezoid(integrand, g.spacing());
}

}  // namespace nnls
