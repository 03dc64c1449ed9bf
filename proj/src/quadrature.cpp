#include "nnls/quadrature.hpp"

#include <cmath>

namespace nnls {

Complex trapezoid(const ComplexVector& values, double spacing) {
    if (values.size() < 2) throw std::invalid_argument("trapezoid: need at least 2 samples");
    Complex sum = values.sum() - 0.5 * (values[0] + values[values.size() - 1]);
    return spacing * sum;
}

double trapezoid(const RealVector& values, double spacing) {
    if (values.size() < 2) throw std::invalid_argument("trapezoid: need at least 2 samples");
    return spacing * (values.sum() - 0.5 * (values[0] + values[values.size() - 1]));
}

Complex trapezoid_integrate(const SampledField& field) {
    require_finite(field.values, "trapezoid_integrate");
    return trapezoid(field.values, field.grid.spacing());
}

ComplexVector cumulative_trapezoid(const ComplexVector& values, double spacing) {
    ComplexVector out(values.size());
    out[0] = 0.0;
    for (Index i = 1; i < values.size(); ++i)
        out[i] = out[i - 1] + 0.5 * spacing * (values[i] + values[i - 1]);
    return out;
}

ComplexVector central_difference(const ComplexVector& values, double spacing) {
    const Index n = values.size();
    if (n < 3) throw std::invalid_argument("central_difference: grid too coarse (n < 3)");
    ComplexVector d(n);
    d[0] = (values[1] - values[0]) / spacing;
    for (Index i = 1; i + 1 < n; ++i) d[i] = (values[i + 1] - values[i - 1]) / (2.0 * spacing);
    d[n - 1] = (values[n - 1] - values[n - 2]) / spacing;
    return d;
}

double weighted_norm(const SampledField& field, NormKind kind) {
    require_finite(field.values, "weighted_norm");
    const double dx = field.grid.spacing();
    const ComplexVector& v = field.values;
    const Index n = v.size();

    auto l2sq = [dx](const RealVector& sq) { return trapezoid(sq, dx); };
    RealVector abs2 = v.cwiseAbs2();

    switch (kind) {
        case NormKind::L1: {
            RealVector a = v.cwiseAbs();
            return trapezoid(a, dx);
        }
        case NormKind::L2:
            return std::sqrt(l2sq(abs2));
        case NormKind::L21: {
            RealVector w(n);
            for (Index i = 0; i < n; ++i) {
                double x = field.grid.node(i);
                w[i] = (1.0 + x * x) * abs2[i];
            }
            return std::sqrt(l2sq(w));
        }
        case NormKind::H1: {
            ComplexVector d = central_difference(v, dx);
            return std::sqrt(l2sq(abs2) + l2sq(d.cwiseAbs2()));
        }
        case NormKind::H11: {
            ComplexVector d = central_difference(v, dx);
            RealVector w(n);
            for (Index i = 0; i < n; ++i) {
                double x = field.grid.node(i);
                w[i] = (1.0 + x * x) * (abs2[i] + std::norm(d[i]));
            }
            return std::sqrt(l2sq(w));
        }
        case NormKind::HScript: {
            ComplexVector d = central_difference(v, dx);
            double h1 = std::sqrt(l2sq(abs2) + l2sq(d.cwiseAbs2()));
            RealVector w(n);
            double xsup = 0.0;
            for (Index i = 0; i < n; ++i) {
                double x = field.grid.node(i);
                w[i] = (1.0 + x * x) * abs2[i];
                xsup = std::max(xsup, std::abs(x) * std::abs(v[i]));
            }
            return h1 + std::sqrt(l2sq(w)) + xsup;
        }
    }
    throw std::invalid_argument("weighted_norm: unknown kind");
}

}  // namespace nnls
