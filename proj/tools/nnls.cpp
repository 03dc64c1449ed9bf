// Command-line pipeline for the nonlocal-NLS inverse scattering toolkit.
//
// Exit codes: 0 success, 1 numerical failure (solver error or tolerance
// violation in --strict mode), 2 usage/configuration error.

#include "nnls/diagnostics.hpp"
#include "nnls/evolution.hpp"
#include "nnls/io.hpp"
#include "nnls/pde.hpp"
#include "nnls/quadrature.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <iostream>

using namespace nnls;

namespace {

struct GlobalOptions {
    int workers = 0;
    bool strict = false;
    ToleranceSet tol;
};

struct GridFlags {
    double kmin = -24.0, kmax = 24.0;
    Index nk = 1024;
    double xmin = -16.0, xmax = 16.0;
    Index nx = 512;

    UniformGrid kgrid() const { return {kmin, kmax, nk}; }
    UniformGrid xgrid() const { return {xmin, xmax, nx}; }
};

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

int finish(const GlobalOptions& g, bool tolerances_ok) {
    if (!tolerances_ok) {
        if (g.strict) {
            std::cerr << "strict mode: tolerance violation\n";
            return 1;
        }
        std::cout << "note: tolerance violation reported (non-strict mode, continuing)\n";
    }
    return 0;
}

Potential generate_potential(const std::string& kind, double amplitude, double center, double width,
                             double support_lo, double support_hi, const UniformGrid& xgrid, int sigma) {
    SampledField field;
    if (kind == "zero") {
        field = sample(xgrid, [](double) { return Complex(0.0, 0.0); });
    } else if (kind == "gaussian" || kind == "shifted_gaussian") {
        const double c = (kind == "shifted_gaussian") ? center : 0.0;
        field = sample(xgrid, [=](double x) {
            const double u = (x - c) / width;
            return Complex(amplitude * std::exp(-u * u), 0.0);
        });
    } else if (kind == "box") {
        const double eps = 1e-9 * xgrid.spacing();
        field = sample(xgrid, [=](double x) {
            if (std::abs(x - support_lo) < eps || std::abs(x - support_hi) < eps)
                return Complex(amplitude / 2.0, 0.0);
            return (x > support_lo && x < support_hi) ? Complex(amplitude, 0.0) : Complex(0.0, 0.0);
        });
    } else {
        throw std::invalid_argument("unknown potential kind: " + kind);
    }
    Potential p = make_potential(std::move(field), sigma);
    if (p.l1_norm >= 1.0)
        throw std::invalid_argument("L1 norm " + fmt(p.l1_norm) +
                                    " >= 1 violates the basic existence hypothesis");
    if (!p.small_norm())
        std::cerr << "warning: L1 norm " << p.l1_norm
                  << " >= 1/6; small-norm guarantees (no resonances, |r|<1) do not apply\n";
    return p;
}

Index next_power_of_two(double x) {
    Index n = 16;
    while (static_cast<double>(n) < x) n *= 2;
    return n;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Inverse scattering transform toolkit for the nonlocal NLS equation"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.set_config("--config", "", "flat key=value configuration file (flags override)");

    GlobalOptions g;
    app.add_option("--workers", g.workers, "worker threads for the k- and x-parallel maps (0 = auto)");
    app.add_flag("--strict", g.strict, "turn tolerance violations into exit code 1");
    app.add_option("--tol-det", g.tol.det, "determinant identity tolerance");
    app.add_option("--tol-sym", g.tol.sym, "conjugation symmetry tolerance");
    app.add_option("--tol-wronskian", g.tol.wronskian, "Wronskian cross-check tolerance");
    app.add_option("--tol-jump", g.tol.jump, "RH jump residual tolerance");
    app.add_option("--tol-roundtrip", g.tol.roundtrip_l2, "roundtrip relative L2 tolerance");
    app.add_option("--tol-qcons", g.tol.q_conservation, "PDE conserved-quantity drift tolerance");
    app.add_option("--tol-compare", g.tol.compare_linf, "IST vs split-step L-infinity tolerance");

    GridFlags grids;
    std::string input, output, csv_out, report_out, dump_psi, ist_out, pde_out;
    std::string kind = "gaussian";
    double amplitude = 0.08, center = 0.5, width = 1.0, support_lo = 0.0, support_hi = 1.0;
    double t = 0.0, dt = 1e-3;
    int sigma = 1;
    bool mirror = false, dealias = false;

    auto add_kgrid = [&](CLI::App* cmd) {
        cmd->add_option("--kmin", grids.kmin, "spectral grid lower end");
        cmd->add_option("--kmax", grids.kmax, "spectral grid upper end");
        cmd->add_option("--nk", grids.nk, "spectral sample count");
    };
    auto add_xgrid = [&](CLI::App* cmd) {
        cmd->add_option("--xmin", grids.xmin, "spatial grid lower end");
        cmd->add_option("--xmax", grids.xmax, "spatial grid upper end");
        cmd->add_option("--nx", grids.nx, "spatial sample count");
    };

    auto* cmd_generate = app.add_subcommand("generate", "write a named potential to a JSON file");
    cmd_generate->add_option("--kind", kind, "zero | gaussian | shifted_gaussian | box");
    cmd_generate->add_option("--amplitude", amplitude, "peak amplitude");
    cmd_generate->add_option("--center", center, "center of the shifted gaussian");
    cmd_generate->add_option("--width", width, "gaussian width");
    cmd_generate->add_option("--support-lo", support_lo, "box support lower edge");
    cmd_generate->add_option("--support-hi", support_hi, "box support upper edge");
    cmd_generate->add_option("--sigma", sigma, "nonlinearity sign, +1 or -1");
    add_xgrid(cmd_generate);
    cmd_generate->add_option("--out", output, "output potential JSON")->required();
    cmd_generate->add_option("--csv", csv_out, "optional CSV export (x,re,im)");

    auto* cmd_scatter = app.add_subcommand("scatter", "potential -> scattering coefficients a, b, d, c");
    cmd_scatter->add_option("--input", input, "potential JSON")->required();
    add_kgrid(cmd_scatter);
    cmd_scatter->add_option("--out", output, "output scattering JSON")->required();

    auto* cmd_reflect = app.add_subcommand("reflect", "scattering data -> reflection pair r1, r2");
    cmd_reflect->add_option("--input", input, "scattering JSON")->required();
    cmd_reflect->add_option("--out", output, "output reflection JSON")->required();
    cmd_reflect->add_option("--csv", csv_out, "optional CSV export (k,re_r1,im_r1,re_r2,im_r2)");

    auto* cmd_evolve = app.add_subcommand("evolve", "advance reflection data by the explicit phase law");
    cmd_evolve->add_option("--input", input, "reflection JSON")->required();
    cmd_evolve->add_option("--t", t, "time increment (>= 0)")->required();
    cmd_evolve->add_option("--out", output, "output reflection JSON")->required();

    auto* cmd_reconstruct =
        app.add_subcommand("reconstruct", "reflection pair -> potential via the RH problem");
    cmd_reconstruct->add_option("--input", input, "reflection JSON")->required();
    cmd_reconstruct->add_option("--sigma", sigma, "nonlinearity sign, +1 or -1");
    add_xgrid(cmd_reconstruct);
    cmd_reconstruct->add_option("--out", output, "output potential JSON")->required();
    cmd_reconstruct->add_flag("--mirror", mirror, "also run the mirror formula and report the agreement");
    cmd_reconstruct->add_option("--dump-psi", dump_psi, "debug CSV dump of Psi_- per x");

    auto* cmd_roundtrip = app.add_subcommand("roundtrip", "scatter -> reflect -> reconstruct and compare");
    cmd_roundtrip->add_option("--input", input, "potential JSON")->required();
    add_kgrid(cmd_roundtrip);
    cmd_roundtrip->add_option("--out", report_out, "optional report JSON");

    auto* cmd_pde = app.add_subcommand("pde", "split-step reference integrator");
    cmd_pde->add_option("--input", input, "potential JSON")->required();
    cmd_pde->add_option("--t", t, "final time")->required();
    cmd_pde->add_option("--dt", dt, "time step (t/dt integral)");
    cmd_pde->add_flag("--dealias", dealias, "enable 2/3-rule dealiasing");
    cmd_pde->add_option("--out", output, "output potential JSON")->required();

    auto* cmd_compare = app.add_subcommand("compare", "IST evolution vs split-step at one time");
    cmd_compare->add_option("--input", input, "potential JSON")->required();
    cmd_compare->add_option("--t", t, "final time")->required();
    cmd_compare->add_option("--dt", dt, "split-step time step");
    add_kgrid(cmd_compare);
    cmd_compare->add_option("--ist-out", ist_out, "optional IST solution JSON");
    cmd_compare->add_option("--pde-out", pde_out, "optional split-step solution JSON");
    cmd_compare->add_option("--out", report_out, "optional report JSON");

    auto* cmd_invariants = app.add_subcommand("invariants", "run the invariant suite on a potential");
    cmd_invariants->add_option("--input", input, "potential JSON")->required();
    add_kgrid(cmd_invariants);
    cmd_invariants->add_option("--out", report_out, "optional report JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Provenance prov;
    prov["tool"] = "nnls-ist 0.1.0";
    prov["workers"] = std::to_string(g.workers);
    prov["strict"] = g.strict ? "1" : "0";

    try {
        if (app.got_subcommand(cmd_generate)) {
            Potential p;
            try {
                p = generate_potential(kind, amplitude, center, width, support_lo, support_hi,
                                       grids.xgrid(), sigma);
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            }
            prov["command"] = "generate";
            prov["kind"] = kind;
            prov["amplitude"] = fmt(amplitude);
            prov["center"] = fmt(kind == "shifted_gaussian" ? center : 0.0);
            prov["width"] = fmt(width);
            prov["sigma"] = std::to_string(sigma);
            prov["grid"] = fmt(grids.xmin) + ":" + fmt(grids.xmax) + ":" + std::to_string(grids.nx);
            save_potential_json(output, p, prov);
            if (!csv_out.empty()) save_field_csv(csv_out, p.field);
            std::cout << "wrote " << output << "  (L1 norm " << p.l1_norm << ", small_norm "
                      << (p.small_norm() ? "yes" : "no") << ")\n";
            return 0;
        }

        if (app.got_subcommand(cmd_scatter)) {
            Potential p;
            try {
                p = load_potential_json(input);
            } catch (const std::exception& e) {
                std::cerr << "error reading input: " << e.what() << "\n";
                return 2;
            }
            ScatterOptions so;
            so.workers = g.workers;
            so.tol_det = g.tol.det;
            auto data = scattering_coefficients(p, grids.kgrid(), so);
            prov["command"] = "scatter";
            prov["kgrid"] = fmt(grids.kmin) + ":" + fmt(grids.kmax) + ":" + std::to_string(grids.nk);
            save_scattering_json(output, data, prov);
            std::cout << "wrote " << output << "\n  determinant residual " << data.residuals.determinant
                      << "\n  symmetry residuals " << data.residuals.symmetry_a << ", "
                      << data.residuals.symmetry_d << "\n  wronskian cross-check "
                      << data.residuals.wronskian << "\n";
            return finish(g, !data.determinant_flagged);
        }

        if (app.got_subcommand(cmd_reflect)) {
            ScatteringData data;
            try {
                data = load_scattering_json(input);
            } catch (const std::exception& e) {
                std::cerr << "error reading input: " << e.what() << "\n";
                return 2;
            }
            auto refl = reflection_coefficients(data);
            prov["command"] = "reflect";
            save_reflection_json(output, refl, prov);
            if (!csv_out.empty()) save_reflection_csv(csv_out, refl);
            std::cout << "wrote " << output << "  (sup |r| = " << refl.sup_r << ")\n";
            return finish(g, refl.sup_r < 1.0);
        }

        if (app.got_subcommand(cmd_evolve)) {
            ReflectionPair refl;
            try {
                refl = load_reflection_json(input);
            } catch (const std::exception& e) {
                std::cerr << "error reading input: " << e.what() << "\n";
                return 2;
            }
            auto out = evolve_reflection(refl, t);
            prov["command"] = "evolve";
            prov["t"] = fmt(t);
            save_reflection_json(output, out, prov);
            std::cout << "wrote " << output << "  (stamped t = " << out.t << ")\n";
            return 0;
        }

        if (app.got_subcommand(cmd_reconstruct)) {
            ReflectionPair refl;
            try {
                refl = load_reflection_json(input);
            } catch (const std::exception& e) {
                std::cerr << "error reading input: " << e.what() << "\n";
                return 2;
            }
            ReconstructOptions ro;
            ro.workers = g.workers;
            auto q = reconstruct_q(refl, grids.xgrid(), sigma, ro);
            prov["command"] = "reconstruct";
            prov["sigma"] = std::to_string(sigma);
            prov["xgrid"] = fmt(grids.xmin) + ":" + fmt(grids.xmax) + ":" + std::to_string(grids.nx);
            save_potential_json(output, q, prov);
            const bool non_realizable = (refl.r1.norm() == 0.0) != (refl.r2.norm() == 0.0);
            std::cout << "wrote " << output;
            if (non_realizable)
                std::cout << "  (non-realizable input: exactly one reflection vanishes; "
                             "inverse-machinery test data)";
            std::cout << "\n";
            if (mirror) {
                auto qm = reconstruct_q_mirror(refl, grids.xgrid(), sigma, ro);
                SampledField diff{q.field.grid, qm.field.values - q.field.values};
                const double denom = weighted_norm(q.field, NormKind::L2);
                std::cout << "mirror-formula agreement (relative L2): "
                          << weighted_norm(diff, NormKind::L2) / (denom > 0 ? denom : 1.0) << "\n";
            }
            if (!dump_psi.empty()) {
                bool header = true;
                const UniformGrid xg = grids.xgrid();
                for (Index j = 0; j < xg.n; j += std::max<Index>(1, xg.n / 16)) {
                    append_rh_debug_csv(dump_psi, solve_rh(refl, xg.node(j), sigma, ro.rh), header);
                    header = false;
                }
            }
            return 0;
        }

        if (app.got_subcommand(cmd_roundtrip)) {
            Potential p;
            try {
                p = load_potential_json(input);
            } catch (const std::exception& e) {
                std::cerr << "error reading input: " << e.what() << "\n";
                return 2;
            }
            RoundtripOptions ro;
            ro.kgrid = grids.kgrid();
            ro.scatter.workers = g.workers;
            ro.reconstruct.workers = g.workers;
            ro.reconstruct.tol_roundtrip_l2 = g.tol.roundtrip_l2;
            auto rep = roundtrip_report(p, ro);
            prov["command"] = "roundtrip";
            std::cout << rep.table();
            if (!report_out.empty()) save_report_json(report_out, rep, prov);
            return finish(g, rep.overall());
        }

        if (app.got_subcommand(cmd_pde)) {
            Potential p;
            try {
                p = load_potential_json(input);
            } catch (const std::exception& e) {
                std::cerr << "error reading input: " << e.what() << "\n";
                return 2;
            }
            SplitStepOptions so;
            so.dealias = dealias;
            const Complex q0 = conserved_quantity(p);
            auto qt = split_step(p, t, dt, so);
            const double drift = std::abs(conserved_quantity(qt) - q0);
            prov["command"] = "pde";
            prov["t"] = fmt(t);
            prov["dt"] = fmt(dt);
            prov["dealias"] = dealias ? "1" : "0";
            save_potential_json(output, qt, prov);
            std::cout << "wrote " << output << "  (|Q(t)-Q(0)| = " << drift << ")\n";
            return finish(g, drift <= g.tol.q_conservation);
        }

        if (app.got_subcommand(cmd_compare)) {
            Potential p;
            try {
                p = load_potential_json(input);
            } catch (const std::exception& e) {
                std::cerr << "error reading input: " << e.what() << "\n";
                return 2;
            }
            if (cmd_compare->get_option("--nk")->count() == 0) {
                // choose n_k from the sampling rule 4 k_max t dk <= pi/4
                const double kmax = std::max(std::abs(grids.kmin), std::abs(grids.kmax));
                const double need = 1.0 + (grids.kmax - grids.kmin) * 16.0 * kmax * t / M_PI;
                grids.nk = std::max<Index>(1024, next_power_of_two(need));
            }
            IstOptions io;
            io.scatter.workers = g.workers;
            io.reconstruct.workers = g.workers;
            auto q_ist = ist_solve(p, t, grids.kgrid(), p.field.grid, io);
            auto q_pde = split_step(p, t, dt);
            const double linf = (q_ist.field.values - q_pde.field.values).cwiseAbs().maxCoeff();
            DiagnosticsReport rep;
            rep.add_upper("IST vs split-step L-infinity distance", linf, g.tol.compare_linf,
                          "cross-method agreement of the solution map");
            rep.add_info("k-grid size used", static_cast<double>(grids.nk), "plumbing");
            std::cout << rep.table();
            prov["command"] = "compare";
            prov["t"] = fmt(t);
            prov["dt"] = fmt(dt);
            prov["nk"] = std::to_string(grids.nk);
            if (!ist_out.empty()) save_potential_json(ist_out, q_ist, prov);
            if (!pde_out.empty()) save_potential_json(pde_out, q_pde, prov);
            if (!report_out.empty()) save_report_json(report_out, rep, prov);
            return finish(g, linf <= g.tol.compare_linf);
        }

        if (app.got_subcommand(cmd_invariants)) {
            Potential p;
            try {
                p = load_potential_json(input);
            } catch (const std::exception& e) {
                std::cerr << "error reading input: " << e.what() << "\n";
                return 2;
            }
            InvariantOptions io;
            io.kgrid = grids.kgrid();
            io.tol = g.tol;
            io.workers = g.workers;
            auto rep = run_invariant_suite(p, {}, io);
            std::cout << rep.table();
            prov["command"] = "invariants";
            if (!report_out.empty()) save_report_json(report_out, rep, prov);
            return finish(g, rep.overall());
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
