#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <stdexcept>

namespace nnls {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr Complex kImag{0.0, 1.0};

/// Closed-interval uniform grid with both endpoints sampled.
/// Nodes are lo + i*spacing, i = 0..n-1, spacing = (hi-lo)/(n-1).
/// The continuum line is truncated to [lo, hi]; grids are chosen so that the
/// fields of interest decay below ~1e-10 at the endpoints.
struct UniformGrid {
    double lo = 0.0;
    double hi = 1.0;
    Index n = 16;

    UniformGrid() = default;
    UniformGrid(double lo_, double hi_, Index n_) : lo(lo_), hi(hi_), n(n_) {
        if (!(lo < hi)) throw std::invalid_argument("UniformGrid: requires lo < hi");
        if (n < 16) throw std::invalid_argument("UniformGrid: requires n >= 16");
    }

    double spacing() const { return (hi - lo) / static_cast<double>(n - 1); }
    double node(Index i) const { return lo + spacing() * static_cast<double>(i); }

    RealVector nodes() const {
        RealVector x(n);
        for (Index i = 0; i < n; ++i) x[i] = node(i);
        return x;
    }

    /// Index of -node(i) on a grid symmetric about 0.
    Index reflect(Index i) const { return n - 1 - i; }

    bool symmetric() const { return std::abs(lo + hi) <= 1e-12 * (hi - lo); }

    bool power_of_two() const { return n > 0 && (n & (n - 1)) == 0; }

    bool operator==(const UniformGrid&) const = default;
};

/// Complex samples of a function over a uniform grid, one value per node.
struct SampledField {
    UniformGrid grid;
    ComplexVector values;

    SampledField() = default;
    SampledField(UniformGrid g, ComplexVector v) : grid(g), values(std::move(v)) {
        if (values.size() != grid.n)
            throw std::invalid_argument("SampledField: value count must equal grid.n");
    }
};

inline void require_finite(const ComplexVector& v, const char* what) {
    for (Index i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag()))
            throw std::invalid_argument(std::string(what) + ": non-finite sample");
    }
}

inline SampledField sample(const UniformGrid& g, const std::function<Complex(double)>& f) {
    ComplexVector v(g.n);
    for (Index i = 0; i < g.n; ++i) v[i] = f(g.node(i));
    return {g, std::move(v)};
}

}  // namespace nnls
