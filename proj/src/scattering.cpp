#include "nnls/scattering.hpp"

#include "nnls/parallel.hpp"
#include "nnls/quadrature.hpp"

#include <cmath>

namespace nnls {

namespace {

constexpr double kDecayThreshold = 1e-8;

// Exponential quadrature weights for int_0^h exp(theta*s/h) * (linear interp) ds:
//   c0 = (e^theta - 1 - theta)/theta^2, c1 = ((theta-1)e^theta + 1)/theta^2,
// both -> 1/2 as theta -> 0 (plain trapezoid).
struct StepWeights {
    Complex c0, c1;
};

StepWeights step_weights(Complex theta) {
    if (std::abs(theta) < 1e-5) {
        const Complex t2 = theta * theta;
        return {0.5 + theta / 6.0 + t2 / 24.0, 0.5 + theta / 3.0 + t2 / 8.0};
    }
    const Complex e = std::exp(theta);
    const Complex t2 = theta * theta;
    return {(e - 1.0 - theta) / t2, ((theta - 1.0) * e + 1.0) / t2};
}

struct MarchContext {
    const ComplexVector& q;        // q(x_m)
    const ComplexVector& q_refl;   // conj(q(-x_m))
    double step;                   // signed spacing along the march
    Complex theta;                 // 2ik * step
    Complex e_theta;
    StepWeights wp, wm;            // weights for kernels e^{+2iks}, e^{-2iks}
    int sigma;
};

// One step of the first-kind (phi) system
//   u' = q w,  w' = -sigma conj(q(-x)) u + 2ik w,
// advancing (u, w) from node m to node m +/- 1. The oscillatory kernel is
// applied exactly; the products q*w and conj(q(-x))*u are interpolated
// linearly, giving an implicit 2x2 step.
void step_phi(const MarchContext& c, Index from, Index to, Complex& u, Complex& w) {
    const double h = c.step;
    const Complex A1 = h * c.wp.c1 / c.e_theta * c.q[to];
    const Complex A2 = static_cast<double>(c.sigma) * c.e_theta * h * c.wm.c1 * c.q_refl[to];
    const Complex R1 = u + h * c.wp.c0 * c.q[from] * w;
    const Complex R2 = c.e_theta * (w - static_cast<double>(c.sigma) * h * c.wm.c0 * c.q_refl[from] * u);
    const Complex det = 1.0 + A1 * A2;
    u = (R1 + A1 * R2) / det;
    w = (R2 - A2 * R1) / det;
}

// One step of the second-kind (psi) system
//   u' = q w - 2ik u,  w' = -sigma conj(q(-x)) u.
void step_psi(const MarchContext& c, Index from, Index to, Complex& u, Complex& w) {
    const double h = c.step;
    const Complex A1 = h * c.wp.c1 / c.e_theta * c.q[to];
    const Complex B1 = h * c.wm.c1 * c.e_theta * static_cast<double>(c.sigma) * c.q_refl[to];
    const Complex R1 = (u + h * c.wp.c0 * c.q[from] * w) / c.e_theta;
    const Complex R2 = w - static_cast<double>(c.sigma) * h * c.wm.c0 * c.q_refl[from] * u;
    const Complex det = 1.0 + A1 * B1;
    u = (R1 + A1 * R2) / det;
    w = (R2 - B1 * R1) / det;
}

bool admissible(JostKind which, Complex k) {
    const double im = k.imag();
    switch (which) {
        case JostKind::phi_minus:
        case JostKind::psi_plus:
            return im >= 0.0;
        case JostKind::phi_plus:
        case JostKind::psi_minus:
            return im <= 0.0;
    }
    return false;
}

ComplexVector reflected_conjugate(const ComplexVector& q) {
    const Index n = q.size();
    ComplexVector out(n);
    for (Index i = 0; i < n; ++i) out[i] = std::conj(q[n - 1 - i]);
    return out;
}

}  // namespace

Potential make_potential(SampledField field, int sigma) {
    if (sigma != 1 && sigma != -1) throw std::invalid_argument("make_potential: sigma must be +-1");
    require_finite(field.values, "make_potential");
    Potential p;
    p.l1_norm = weighted_norm(field, NormKind::L1);
    p.decayed = std::abs(field.values[0]) <= kDecayThreshold &&
                std::abs(field.values[field.grid.n - 1]) <= kDecayThreshold;
    p.field = std::move(field);
    p.sigma = sigma;
    return p;
}

JostTrace march_jost(const Potential& potential, Complex k, JostKind which) {
    if (!admissible(which, k))
        throw std::domain_error("march_jost: k outside the analyticity half-plane of the requested function");
    if (!potential.decayed)
        throw std::invalid_argument("march_jost: potential does not decay at the grid endpoints");
    if (!potential.field.grid.symmetric())
        throw std::invalid_argument("march_jost: x-grid must be symmetric about 0");

    const UniformGrid& g = potential.field.grid;
    const Index n = g.n;
    const bool from_left = (which == JostKind::phi_minus || which == JostKind::psi_minus);
    const bool first_kind = (which == JostKind::phi_minus || which == JostKind::phi_plus);

    MarchContext c{potential.field.values,
                   reflected_conjugate(potential.field.values),
                   from_left ? g.spacing() : -g.spacing(),
                   Complex{},
                   Complex{},
                   {},
                   {},
                   potential.sigma};
    c.theta = 2.0 * kImag * k * c.step;
    c.e_theta = std::exp(c.theta);
    c.wp = step_weights(c.theta);
    c.wm = step_weights(-c.theta);

    JostTrace trace;
    trace.k = k;
    trace.which = which;
    trace.first.resize(n);
    trace.second.resize(n);

    const Index start = from_left ? 0 : n - 1;
    Complex u = first_kind ? 1.0 : 0.0;
    Complex w = first_kind ? 0.0 : 1.0;
    trace.first[start] = u;
    trace.second[start] = w;

    if (from_left) {
        for (Index m = 0; m + 1 < n; ++m) {
            if (first_kind)
                step_phi(c, m, m + 1, u, w);
            else
                step_psi(c, m, m + 1, u, w);
            trace.first[m + 1] = u;
            trace.second[m + 1] = w;
        }
    } else {
        for (Index m = n - 1; m > 0; --m) {
            if (first_kind)
                step_phi(c, m, m - 1, u, w);
            else
                step_psi(c, m, m - 1, u, w);
            trace.first[m - 1] = u;
            trace.second[m - 1] = w;
        }
    }
    return trace;
}

SFields compute_s_fields(const Potential& potential) {
    const UniformGrid& g = potential.field.grid;
    if (!g.symmetric())
        throw std::invalid_argument("compute_s_fields: grid must be symmetric about 0 (reflection undefined)");
    const ComplexVector& q = potential.field.values;
    ComplexVector integrand(g.n);
    for (Index i = 0; i < g.n; ++i) integrand[i] = q[i] * std::conj(q[g.reflect(i)]);

    SFields s;
    s.s1_minus = cumulative_trapezoid(integrand, g.spacing());
    // from +inf: s_plus(x) = s_minus(x) - s_minus(hi)
    s.s1_plus = s.s1_minus.array() - s.s1_minus[g.n - 1];
    s.s2_minus = s.s1_minus;
    s.s2_plus = s.s1_plus;
    return s;
}

ScatteringData scattering_coefficients(const Potential& potential, const UniformGrid& kgrid,
                                       const ScatterOptions& options) {
    if (!kgrid.symmetric()) throw std::invalid_argument("scattering_coefficients: k-grid must be symmetric about 0");
    const Index nk = kgrid.n;
    const Index nx = potential.field.grid.n;
    const double sigma = potential.sigma;

    ScatteringData data;
    data.kgrid = kgrid;
    data.sigma = potential.sigma;
    data.a.resize(nk);
    data.b.resize(nk);
    data.d.resize(nk);
    data.c.resize(nk);
    ComplexVector wa(nk), wb(nk), wd(nk);

    // Terminal values of the left-normalized marches realize the full-line
    // integral expressions for a, b, d under the march's own quadrature.
    const Index mid = nx / 2;  // node nearest x = 0 from above
    const double x_mid = potential.field.grid.node(mid);
    parallel_for(nk, options.workers, [&](std::ptrdiff_t i) {
        const double k = kgrid.node(i);
        const JostTrace phim = march_jost(potential, k, JostKind::phi_minus);
        const JostTrace psim = march_jost(potential, k, JostKind::psi_minus);
        data.a[i] = phim.first[nx - 1];
        data.b[i] = phim.second[nx - 1] * std::exp(-2.0 * kImag * k * potential.field.grid.hi);
        data.d[i] = psim.second[nx - 1];
        if (options.check_wronskian) {
            const JostTrace phip = march_jost(potential, k, JostKind::phi_plus);
            const JostTrace psip = march_jost(potential, k, JostKind::psi_plus);
            // Wronskian expressions; the b-Wronskian carries e^{2ikx}, which is
            // compensated so any node evaluates the x = 0 expression.
            wa[i] = phim.first[mid] * psip.second[mid] - phim.second[mid] * psip.first[mid];
            wb[i] = (phip.first[mid] * phim.second[mid] - phip.second[mid] * phim.first[mid]) *
                    std::exp(-2.0 * kImag * k * x_mid);
            wd[i] = phip.first[mid] * psim.second[mid] - phip.second[mid] * psim.first[mid];
        }
    });

    double det_res = 0.0, sym_a = 0.0, sym_d = 0.0, wron = 0.0;
    for (Index i = 0; i < nk; ++i) {
        const Index r = kgrid.reflect(i);
        data.c[i] = -sigma * std::conj(data.b[r]);
        det_res = std::max(det_res,
                           std::abs(data.a[i] * data.d[i] + sigma * data.b[i] * std::conj(data.b[r]) - 1.0));
        sym_a = std::max(sym_a, std::abs(std::conj(data.a[r]) - data.a[i]));
        sym_d = std::max(sym_d, std::abs(std::conj(data.d[r]) - data.d[i]));
        if (options.check_wronskian)
            wron = std::max({wron, std::abs(wa[i] - data.a[i]), std::abs(wb[i] - data.b[i]),
                             std::abs(wd[i] - data.d[i])});
    }
    data.residuals.determinant = det_res;
    data.residuals.symmetry_a = sym_a;
    data.residuals.symmetry_d = sym_d;
    data.residuals.wronskian = wron;
    data.residuals.tail =
        std::max({std::abs(data.a[0] - 1.0), std::abs(data.a[nk - 1] - 1.0), std::abs(data.d[0] - 1.0),
                  std::abs(data.d[nk - 1] - 1.0), std::abs(data.b[0]), std::abs(data.b[nk - 1])});
    data.determinant_flagged = det_res > options.tol_det;
    return data;
}

ReflectionPair reflection_coefficients(const ScatteringData& data) {
    const Index nk = data.kgrid.n;
    for (Index i = 0; i < nk; ++i) {
        if (std::abs(data.a[i]) < 1e-12 || std::abs(data.d[i]) < 1e-12)
            throw std::runtime_error(
                "reflection_coefficients: |a| or |d| below 1e-12 (resonance or violated small-norm assumption)");
    }
    ReflectionPair refl;
    refl.kgrid = data.kgrid;
    refl.r1.resize(nk);
    refl.r2.resize(nk);
    refl.t = 0.0;
    double sup = 0.0;
    for (Index i = 0; i < nk; ++i) {
        refl.r1[i] = data.b[i] / data.a[i];
        refl.r2[i] = std::conj(data.b[data.kgrid.reflect(i)]) / data.d[i];
        sup = std::max({sup, std::abs(refl.r1[i]), std::abs(refl.r2[i])});
    }
    refl.sup_r = sup;
    return refl;
}

DiagnosticsReport no_resonance_check(const Potential& potential, const ScatteringData& data) {
    const double bound = 1.0 - std::exp(1.0 / 3.0) / 6.0;  // ~0.76740
    double min_a = std::numeric_limits<double>::infinity();
    double min_d = min_a;
    for (Index i = 0; i < data.kgrid.n; ++i) {
        min_a = std::min(min_a, std::abs(data.a[i]));
        min_d = std::min(min_d, std::abs(data.d[i]));
    }
    DiagnosticsReport report;
    report.add_upper("L1 norm below 1/6", potential.l1_norm, 1.0 / 6.0, "small-norm hypothesis");
    if (potential.small_norm()) {
        report.add_lower("min |a| resonance-free bound", min_a, bound, "no eigenvalues or resonances");
        report.add_lower("min |d| resonance-free bound", min_d, bound, "no eigenvalues or resonances");
    } else {
        // Outside the small-norm regime the quantitative bound does not apply;
        // only the absence of zeros on the grid is meaningful.
        report.add_lower("min |a| nonvanishing", min_a, 1e-12, "no eigenvalues or resonances");
        report.add_lower("min |d| nonvanishing", min_d, 1e-12, "no eigenvalues or resonances");
    }
    return report;
}

}  // namespace nnls
