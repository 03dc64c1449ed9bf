#include "nnls/evolution.hpp"

#include <cmath>
#include <sstream>

namespace nnls {

ReflectionPair evolve_reflection(const ReflectionPair& reflection, double dt) {
    if (dt < 0.0) throw std::domain_error("evolve_reflection: t must be >= 0");
    const double t_total = reflection.t + dt;
    const double k_max = std::max(std::abs(reflection.kgrid.lo), std::abs(reflection.kgrid.hi));
    const double phase_per_step = 4.0 * k_max * t_total * reflection.kgrid.spacing();
    if (phase_per_step > M_PI / 4.0) {
        std::ostringstream msg;
        msg << "evolve_reflection: k-grid too coarse for t = " << t_total << " (edge phase advance "
            << phase_per_step << " rad/step > pi/4); refine n_k";
        throw std::runtime_error(msg.str());
    }

    ReflectionPair out;
    out.kgrid = reflection.kgrid;
    out.t = t_total;
    out.sup_r = reflection.sup_r;
    out.r1.resize(reflection.kgrid.n);
    out.r2.resize(reflection.kgrid.n);
    for (Index i = 0; i < reflection.kgrid.n; ++i) {
        const double k = reflection.kgrid.node(i);
        const Complex phase = std::exp(4.0 * kImag * k * k * dt);
        out.r1[i] = reflection.r1[i] * phase;
        out.r2[i] = reflection.r2[i] / phase;
    }
    return out;
}

Potential ist_solve(const Potential& q0, double t, const UniformGrid& kgrid, const UniformGrid& xgrid,
                    const IstOptions& options) {
    // The small-norm hypothesis is advisory here: the flag travels on the
    // Potential itself and the invariant suite reports it.
    const ScatteringData data = scattering_coefficients(q0, kgrid, options.scatter);
    ReflectionPair refl = reflection_coefficients(data);
    if (t != 0.0) refl = evolve_reflection(refl, t);
    return reconstruct_q(refl, xgrid, q0.sigma, options.reconstruct);
}

}  // namespace nnls
