#include "nnls/diagnostics.hpp"

#include "nnls/cauchy.hpp"
#include "nnls/quadrature.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace nnls {

std::string DiagnosticsReport::table() const {
    std::ostringstream os;
    os << std::left << std::setw(44) << "invariant" << std::setw(14) << "value" << std::setw(14)
       << "tolerance" << std::setw(6) << "pass" << "anchor\n";
    for (const auto& it : items) {
        os << std::left << std::setw(44) << it.name << std::setw(14) << std::scientific
           << std::setprecision(3) << it.value;
        if (it.tolerance == 0.0 && it.pass)
            os << std::setw(14) << "-";
        else
            os << std::setw(14) << it.tolerance;
        os << std::setw(6) << (it.pass ? "ok" : "FAIL") << it.anchor << "\n";
    }
    os << "overall: " << (overall() ? "pass" : "FAIL") << "\n";
    return os.str();
}

namespace {

// Fitted C/k tail law: C from two interior tail nodes, verified at the edge.
void add_tail_item(DiagnosticsReport& rep, const UniformGrid& kg, const ComplexVector& v,
                   const Complex& limit, const char* name, double slack) {
    const Index n = kg.n;
    const Index j1 = n - 1 - n / 8, j2 = n - 1 - n / 16;
    const double c_fit = std::max(std::abs(v[j1] - limit) * std::abs(kg.node(j1)),
                                  std::abs(v[j2] - limit) * std::abs(kg.node(j2)));
    const double edge = std::abs(v[n - 1] - limit);
    const double k_max = std::abs(kg.node(n - 1));
    if (c_fit < 1e-14 && edge < 1e-14) {
        rep.add_upper(name, 0.0, slack, "scattering tail decay");
        return;
    }
    rep.add_upper(name, edge * k_max / c_fit, slack, "scattering tail decay");
}

}  // namespace

DiagnosticsReport run_invariant_suite(const Potential& potential, const InvariantSelection& sel,
                                      const InvariantOptions& opt) {
    DiagnosticsReport rep;
    ScatterOptions sc;
    sc.workers = opt.workers;
    sc.tol_det = opt.tol.det;
    sc.check_wronskian = sel.wronskian;
    const ScatteringData data = scattering_coefficients(potential, opt.kgrid, sc);

    if (sel.determinant)
        rep.add_upper("determinant identity residual", data.residuals.determinant, opt.tol.det,
                      "scattering determinant identity");
    if (sel.symmetry) {
        rep.add_upper("a conjugation-symmetry residual", data.residuals.symmetry_a, opt.tol.sym,
                      "a,d conjugation symmetry");
        rep.add_upper("d conjugation-symmetry residual", data.residuals.symmetry_d, opt.tol.sym,
                      "a,d conjugation symmetry");
    }
    if (sel.wronskian)
        rep.add_upper("Wronskian cross-check residual", data.residuals.wronskian, opt.tol.wronskian,
                      "Wronskian expressions of a, b, d");
    if (sel.small_norm) {
        DiagnosticsReport nr = no_resonance_check(potential, data);
        rep.items.insert(rep.items.end(), nr.items.begin(), nr.items.end());
    }

    bool have_reflection = true;
    ReflectionPair refl;
    try {
        refl = reflection_coefficients(data);
    } catch (const std::exception&) {
        have_reflection = false;
    }
    if (!have_reflection) {
        if (sel.reflection_bound || sel.positivity || sel.plemelj)
            throw std::runtime_error(
                "run_invariant_suite: selected checks need reflection coefficients, but a or d vanishes "
                "on the grid (missing prerequisite)");
    } else {
        if (sel.reflection_bound) {
            if (potential.small_norm()) {
                const double bound = (1.0 + std::exp(1.0 / 3.0)) / 6.0 / (1.0 - std::exp(1.0 / 3.0) / 6.0);
                rep.add_upper("sup |r| small-norm bound", refl.sup_r, bound, "reflection bound |r|<1");
            } else {
                rep.add_info("sup |r| (outside small-norm regime)", refl.sup_r, "reflection bound |r|<1");
            }
        }
        if (sel.positivity) {
            const PositivityReport pos = positivity_diagnostics(refl, potential.sigma);
            rep.add_lower("min eigenvalue of I + S_H", pos.mu_minus_min, 0.0, "Hermitian-part positivity");
            // identity mu+ mu- = 1 + sigma Re(r1 r2) - |r1 + sigma conj(r2)|^2 / 4, worst node
            double worst = 0.0;
            for (Index i = 0; i < refl.kgrid.n; ++i) {
                const Complex r1 = refl.r1[i], r2 = refl.r2[i];
                const double s = potential.sigma;
                const double re12 = (r1 * r2).real();
                const double cross = std::abs(r1 + s * std::conj(r2));
                const double root = std::sqrt(re12 * re12 + cross * cross);
                const double mu_p = (2.0 + s * re12 + root) / 2.0, mu_m = (2.0 + s * re12 - root) / 2.0;
                worst = std::max(worst, std::abs(mu_p * mu_m - (1.0 + s * re12 - cross * cross / 4.0)));
            }
            rep.add_upper("eigenvalue product identity residual", worst, opt.tol.positivity_identity,
                          "Hermitian-part eigenvalue identity");
        }
        if (sel.plemelj) {
            // zero reflection data has no meaningful ratio; record 0 <= bound
            const double ratio =
                refl.r1.norm() > 0.0 ? operator_norm_check({refl.kgrid, refl.r1}) : 0.0;
            rep.add_upper("Plemelj L2 expansion ratio", ratio, 1.0 + opt.tol.plemelj_excess,
                          "Plemelj L2 contraction");
        }
    }
    if (sel.tails) {
        add_tail_item(rep, data.kgrid, data.a, Complex(1.0, 0.0), "a tail C/k law", opt.tol.tail_slack);
        add_tail_item(rep, data.kgrid, data.d, Complex(1.0, 0.0), "d tail C/k law", opt.tol.tail_slack);
        add_tail_item(rep, data.kgrid, data.b, Complex(0.0, 0.0), "b tail C/k law", opt.tol.tail_slack);
    }
    return rep;
}

DiagnosticsReport lipschitz_probe(const Potential& q_a, const Potential& q_b, const LipschitzOptions& opt) {
    if (q_a.field.grid != q_b.field.grid)
        throw std::invalid_argument("lipschitz_probe: potentials must share one grid");
    if (!q_a.small_norm() || !q_b.small_norm())
        throw std::invalid_argument("lipschitz_probe: both potentials must be small-norm");
    SampledField dq{q_a.field.grid, q_b.field.values - q_a.field.values};
    const double dq_h11 = weighted_norm(dq, NormKind::H11);
    if (dq_h11 == 0.0) throw std::invalid_argument("lipschitz_probe: identical inputs, ratio undefined");

    const ReflectionPair ra = reflection_coefficients(scattering_coefficients(q_a, opt.kgrid, opt.scatter));
    const ReflectionPair rb = reflection_coefficients(scattering_coefficients(q_b, opt.kgrid, opt.scatter));
    SampledField dr1{opt.kgrid, rb.r1 - ra.r1};
    SampledField dr2{opt.kgrid, rb.r2 - ra.r2};
    const double dr_hs = weighted_norm(dr1, NormKind::HScript) + weighted_norm(dr2, NormKind::HScript);

    const Potential qa_hat = reconstruct_q(ra, q_a.field.grid, q_a.sigma, opt.reconstruct);
    const Potential qb_hat = reconstruct_q(rb, q_b.field.grid, q_b.sigma, opt.reconstruct);
    SampledField dqh{q_a.field.grid, qb_hat.field.values - qa_hat.field.values};
    const double dqh_h11 = weighted_norm(dqh, NormKind::H11);

    DiagnosticsReport rep;
    rep.add_info("forward ratio |dr|_Hscript / |dq|_H11", dr_hs / dq_h11, "forward-map continuity, measured");
    rep.add_info("inverse ratio |dqhat|_H11 / |dr|_Hscript", dr_hs > 0.0 ? dqh_h11 / dr_hs : 0.0,
                 "inverse-map continuity, measured");
    rep.add_info("|dq|_H11", dq_h11, "plumbing");
    rep.add_info("|dr|_Hscript", dr_hs, "plumbing");
    return rep;
}

}  // namespace nnls
