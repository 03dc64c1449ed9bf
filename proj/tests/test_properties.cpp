#include "nnls/cauchy.hpp"
#include "nnls/evolution.hpp"
#include "nnls/quadrature.hpp"

#include "doctest.h"
#include "helpers.hpp"

#include <cmath>
#include <random>

using namespace nnls;
using namespace nnls::testing;

namespace {

// Random small-norm complex potential: a few Gaussian bumps with random
// centers, widths, amplitudes and phases, rescaled to a target L1 norm.
Potential random_potential(unsigned seed, double l1_target = 0.12, UniformGrid g = reference_xgrid()) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> center(-4.0, 4.0), width(0.6, 1.8), phase(0.0, 2.0 * M_PI),
        amp(0.3, 1.0);
    ComplexVector v = ComplexVector::Zero(g.n);
    for (int b = 0; b < 3; ++b) {
        const double c = center(rng), w = width(rng), a = amp(rng), ph = phase(rng);
        for (Index i = 0; i < g.n; ++i) {
            const double x = g.node(i);
            v[i] += a * std::exp(-((x - c) / w) * ((x - c) / w)) * std::exp(kImag * ph);
        }
    }
    SampledField f{g, std::move(v)};
    const double l1 = weighted_norm(f, NormKind::L1);
    f.values *= (l1_target / l1);
    return make_potential(std::move(f), seed % 2 == 0 ? 1 : -1);
}

}  // namespace

TEST_CASE("scattering identities hold on random small-norm potentials") {
    UniformGrid kg(-24.0, 24.0, 512);
    for (unsigned seed : {3u, 17u, 62u, 101u}) {
        auto p = random_potential(seed);
        CAPTURE(seed);
        auto data = scattering_coefficients(p, kg);
        CHECK(data.residuals.determinant < 1e-6);
        CHECK(data.residuals.symmetry_a < 1e-6);
        CHECK(data.residuals.symmetry_d < 1e-6);
        auto refl = reflection_coefficients(data);
        CHECK(refl.sup_r < 1.0);
        // positivity margin exists whenever sup_r < 1
        auto pos = positivity_diagnostics(refl, p.sigma);
        CHECK(pos.mu_minus_min > 0.0);
        // c is the conjugate-reflected partner of b
        for (Index i = 0; i < kg.n; i += 37)
            CHECK(std::abs(data.c[i] + double(p.sigma) * std::conj(data.b[kg.reflect(i)])) == 0.0);
    }
}

TEST_CASE("evolution phase law is a unitary group on random data") {
    UniformGrid kg(-24.0, 24.0, 512);
    std::mt19937 rng(5u);
    std::normal_distribution<double> dist;
    ReflectionPair r;
    r.kgrid = kg;
    r.r1.resize(kg.n);
    r.r2.resize(kg.n);
    for (Index i = 0; i < kg.n; ++i) {
        const double damp = std::exp(-std::abs(kg.node(i)) / 6.0);
        r.r1[i] = 0.3 * damp * Complex(dist(rng), dist(rng));
        r.r2[i] = 0.3 * damp * Complex(dist(rng), dist(rng));
        r.sup_r = std::max({r.sup_r, std::abs(r.r1[i]), std::abs(r.r2[i])});
    }
    std::uniform_real_distribution<double> tdist(0.0, 0.05);
    double acc = 0.0;
    auto stepwise = r;
    for (int s = 0; s < 4; ++s) {
        const double dt = tdist(rng);
        stepwise = evolve_reflection(stepwise, dt);
        acc += dt;
    }
    auto oneshot = evolve_reflection(r, acc);
    CHECK((stepwise.r1 - oneshot.r1).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((stepwise.r2 - oneshot.r2).cwiseAbs().maxCoeff() < 1e-12);
    for (Index i = 0; i < kg.n; i += 41)
        CHECK(std::abs(stepwise.r1[i]) == doctest::Approx(std::abs(r.r1[i])).epsilon(1e-13));
}

TEST_CASE("upper-half-plane march continues a(k) analytically (Cauchy route)") {
    // a(k) - 1 extends analytically and decays in the upper half-plane, so its
    // off-axis values equal the Cauchy integral of the real-axis samples up to
    // k-domain truncation. Two independent code paths meet here: the complex-k
    // march and the off-axis Cauchy quadrature.
    auto p = gaussian_potential(0.08);
    // the comparison floor is the 1/k tail of a-1 beyond the k-domain,
    // ~1e-4 at |k| = 48; the march itself is orders tighter
    UniformGrid kg(-48.0, 48.0, 2048);
    auto data = scattering_coefficients(p, kg);
    SampledField am1{kg, data.a.array() - 1.0};
    for (double im : {0.5, 2.0}) {
        const Complex z(0.3, im);
        const Complex via_cauchy = 1.0 + cauchy_offaxis(am1, z);
        const JostTrace t = march_jost(p, z, JostKind::phi_minus);
        const Complex via_march = t.first[p.field.grid.n - 1];
        CHECK(std::abs(via_cauchy - via_march) < 2e-4);
    }
    // same for d(k) in the lower half-plane
    SampledField dm1{kg, data.d.array() - 1.0};
    const Complex zl(-0.7, -1.0);
    const Complex d_cauchy = 1.0 - cauchy_offaxis(dm1, zl);  // P- orientation: -C below the axis
    const JostTrace t = march_jost(p, zl, JostKind::psi_minus);
    CHECK(std::abs(d_cauchy - t.second[p.field.grid.n - 1]) < 2e-4);
}

TEST_CASE("reconstruction is bitwise independent of the worker count") {
    auto p = gaussian_potential(0.08, 0.3, {-16.0, 16.0, 64});
    UniformGrid kg(-24.0, 24.0, 256);
    auto refl = reflection_coefficients(scattering_coefficients(p, kg));
    ReconstructOptions one, many;
    one.workers = 1;
    many.workers = 5;
    auto qa = reconstruct_q(refl, p.field.grid, 1, one);
    auto qb = reconstruct_q(refl, p.field.grid, 1, many);
    CHECK((qa.field.values - qb.field.values).cwiseAbs().maxCoeff() == 0.0);
}
