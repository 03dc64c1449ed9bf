#include "nnls/evolution.hpp"

#include "nnls/quadrature.hpp"

#include "doctest.h"
#include "helpers.hpp"

#include <cmath>

using namespace nnls;
using namespace nnls::testing;

namespace {

ReflectionPair reference_reflection() {
    auto p = gaussian_potential(0.08);
    return reflection_coefficients(scattering_coefficients(p, reference_kgrid()));
}

}  // namespace

TEST_CASE("evolution basics") {
    ReflectionPair rz;
    rz.kgrid = reference_kgrid();
    rz.r1 = ComplexVector::Zero(rz.kgrid.n);
    rz.r2 = ComplexVector::Zero(rz.kgrid.n);
    auto ez = evolve_reflection(rz, 0.05);
    CHECK(ez.r1.cwiseAbs().maxCoeff() == 0.0);
    CHECK(ez.t == 0.05);

    CHECK_THROWS_AS(evolve_reflection(rz, -0.1), std::domain_error);
}

TEST_CASE("unimodular phases preserve the moduli and sup_r") {
    auto r = reference_reflection();
    auto e = evolve_reflection(r, 0.1);
    for (Index i = 0; i < r.kgrid.n; i += 13) {
        CHECK(std::abs(e.r1[i]) == doctest::Approx(std::abs(r.r1[i])).epsilon(1e-14));
        CHECK(std::abs(e.r2[i]) == doctest::Approx(std::abs(r.r2[i])).epsilon(1e-14));
    }
    CHECK(e.sup_r == r.sup_r);

    // L21 norm conservation (pointwise modulus is preserved)
    SampledField f0{r.kgrid, r.r1}, f1{e.kgrid, e.r1};
    CHECK(weighted_norm(f1, NormKind::L21) == doctest::Approx(weighted_norm(f0, NormKind::L21)).epsilon(1e-13));
}

TEST_CASE("phase multiplier at k = 1, t = pi/4 is -1 for both coefficients") {
    ReflectionPair r;
    r.kgrid = UniformGrid(-2.0, 2.0, 33);  // k = 1 on the grid, index 24
    r.r1 = ComplexVector::Constant(33, Complex(1.0, 0.0));
    r.r2 = ComplexVector::Constant(33, Complex(1.0, 0.0));
    auto e = evolve_reflection(r, M_PI / 4.0);
    const Index j = 24;
    CHECK(r.kgrid.node(j) == doctest::Approx(1.0));
    CHECK(std::abs(e.r1[j] - Complex(-1.0, 0.0)) < 1e-12);
    CHECK(std::abs(e.r2[j] - Complex(-1.0, 0.0)) < 1e-12);
}

TEST_CASE("group law: evolve(evolve(r,t1),t2) = evolve(r,t1+t2)") {
    auto r = reference_reflection();
    auto a = evolve_reflection(evolve_reflection(r, 0.03), 0.04);
    auto b = evolve_reflection(r, 0.07);
    CHECK((a.r1 - b.r1).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((a.r2 - b.r2).cwiseAbs().maxCoeff() < 1e-13);
    CHECK(a.t == doctest::Approx(b.t));
}

TEST_CASE("aliasing guard: coarse k-grid rejects large t") {
    auto r = reference_reflection();  // n_k = 1024, spacing ~0.0469
    // 4 * 24 * t * dk <= pi/4 caps t at ~0.174 on the reference grid
    CHECK_NOTHROW(evolve_reflection(r, 0.1));
    CHECK_THROWS_AS(evolve_reflection(r, 0.5), std::runtime_error);
}

TEST_CASE("derivative-growth bound of the evolved reflection") {
    auto r = reference_reflection();
    const double dk = r.kgrid.spacing();
    auto l2 = [&](const ComplexVector& v) {
        SampledField f{r.kgrid, v};
        return weighted_norm(f, NormKind::L2);
    };
    const double d0 = l2(central_difference(r.r1, dk));
    const double l21 = weighted_norm({r.kgrid, r.r1}, NormKind::L21);
    for (double t : {0.05, 0.15}) {
        auto e = evolve_reflection(r, t);
        const double dt_norm = l2(central_difference(e.r1, dk));
        CHECK(dt_norm <= d0 + 8.0 * t * l21 + 1e-6);
    }
}

TEST_CASE("ist_solve at t = 0 matches the roundtrip reconstruction") {
    auto p = gaussian_potential(0.08);
    auto q0 = ist_solve(p, 0.0, reference_kgrid(), p.field.grid);
    SampledField diff{p.field.grid, q0.field.values - p.field.values};
    CHECK(weighted_norm(diff, NormKind::L2) / weighted_norm(p.field, NormKind::L2) < 1e-3);

    auto pz = make_potential(sample(reference_xgrid(), [](double) { return Complex(0.0, 0.0); }), 1);
    auto qz = ist_solve(pz, 0.3, UniformGrid(-24.0, 24.0, 4096), pz.field.grid);
    CHECK(qz.field.values.cwiseAbs().maxCoeff() == 0.0);
}
