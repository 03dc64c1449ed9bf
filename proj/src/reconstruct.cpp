#include "nnls/reconstruct.hpp"

#include "nnls/parallel.hpp"
#include "nnls/quadrature.hpp"

#include <cmath>
#include <sstream>

namespace nnls {

namespace {

// Shared per-x driver: integrate weight(k) * component(x;k) over the k-grid.
enum class Route { primary, mirror };

ComplexVector integrate_per_x(const ReflectionPair& refl, const UniformGrid& xgrid, int sigma,
                              const ReconstructOptions& opt, Route route) {
    const Index nk = refl.kgrid.n;
    const double dk = refl.kgrid.spacing();
    ComplexVector out(xgrid.n);

    parallel_for(xgrid.n, opt.workers, [&](std::ptrdiff_t j) {
        const double x = xgrid.node(j);
        RHSolution sol;
        try {
            sol = solve_rh(refl, x, sigma, opt.rh);
        } catch (const std::exception& e) {
            std::ostringstream msg;
            msg << "reconstruction failed at x = " << x << ": " << e.what();
            throw std::runtime_error(msg.str());
        }
        ComplexVector integrand(nk);
        if (route == Route::primary) {
            for (Index i = 0; i < nk; ++i) {
                const double k = refl.kgrid.node(i);
                integrand[i] = refl.r2[i] * std::exp(-2.0 * kImag * k * x) * sol.mu_minus_1[i];
            }
        } else {
            for (Index i = 0; i < nk; ++i) {
                const double k = refl.kgrid.node(i);
                integrand[i] = refl.r1[i] * std::exp(2.0 * kImag * k * x) * sol.nu_plus_2[i];
            }
        }
        out[j] = -(static_cast<double>(sigma) / M_PI) * trapezoid(integrand, dk);
    });
    return out;
}

double relative_l2(const SampledField& got, const SampledField& want) {
    SampledField diff{got.grid, got.values - want.values};
    const double denom = weighted_norm(want, NormKind::L2);
    return weighted_norm(diff, NormKind::L2) / (denom > 0.0 ? denom : 1.0);
}

}  // namespace

Potential reconstruct_q(const ReflectionPair& reflection, const UniformGrid& xgrid, int sigma,
                        const ReconstructOptions& options) {
    if (!xgrid.symmetric()) throw std::invalid_argument("reconstruct_q: x-grid must be symmetric about 0");
    ComplexVector q = integrate_per_x(reflection, xgrid, sigma, options, Route::primary);
    return make_potential({xgrid, std::move(q)}, sigma);
}

Potential reconstruct_q_mirror(const ReflectionPair& reflection, const UniformGrid& xgrid, int sigma,
                               const ReconstructOptions& options) {
    if (!xgrid.symmetric())
        throw std::invalid_argument("reconstruct_q_mirror: x-grid must be symmetric about 0");
    ComplexVector qbar_refl = integrate_per_x(reflection, xgrid, sigma, options, Route::mirror);
    ComplexVector q(xgrid.n);
    for (Index j = 0; j < xgrid.n; ++j) q[j] = std::conj(qbar_refl[xgrid.reflect(j)]);
    return make_potential({xgrid, std::move(q)}, sigma);
}

DiagnosticsReport roundtrip_report(const Potential& potential, const RoundtripOptions& options) {
    const ScatteringData data = scattering_coefficients(potential, options.kgrid, options.scatter);
    const ReflectionPair refl = reflection_coefficients(data);
    const UniformGrid& xg = potential.field.grid;
    const Potential primary = reconstruct_q(refl, xg, potential.sigma, options.reconstruct);
    const Potential mirror = reconstruct_q_mirror(refl, xg, potential.sigma, options.reconstruct);

    DiagnosticsReport rep;
    const double tol = options.reconstruct.tol_roundtrip_l2;
    rep.add_upper("roundtrip relative L2 error", relative_l2(primary.field, potential.field), tol,
                  "direct/inverse scattering bijection");

    SampledField diff{xg, primary.field.values - potential.field.values};
    const double h11_in = weighted_norm(potential.field, NormKind::H11);
    rep.add_info("roundtrip relative H11 error",
                 weighted_norm(diff, NormKind::H11) / (h11_in > 0.0 ? h11_in : 1.0),
                 "direct/inverse scattering bijection");
    rep.add_upper("two-formula agreement relative L2", relative_l2(mirror.field, primary.field), 2.0 * tol,
                  "equivalence of the two reconstruction integrals");

    const double hs_r1 = weighted_norm({refl.kgrid, refl.r1}, NormKind::HScript);
    const double hs_r2 = weighted_norm({refl.kgrid, refl.r2}, NormKind::HScript);
    rep.add_info("r1 H-script norm", hs_r1, "reflection coefficient space");
    rep.add_info("r2 H-script norm", hs_r2, "reflection coefficient space");
    const double hs_sum = hs_r1 + hs_r2;
    rep.add_info("H11-over-Hscript bound ratio",
                 weighted_norm(primary.field, NormKind::H11) / (hs_sum > 0.0 ? hs_sum : 1.0),
                 "reconstruction norm bound, empirical constant");
    rep.add_info("sup |r|", refl.sup_r, "reflection bound");
    rep.add_info("determinant residual", data.residuals.determinant, "scattering determinant identity");
    return rep;
}

}  // namespace nnls
