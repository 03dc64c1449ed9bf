#include "nnls/fourier.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>

namespace nnls {

namespace {

bool power_of_two(Index n) { return n > 0 && (n & (n - 1)) == 0; }

// One FFT engine per thread; Eigen::FFT caches plans per size inside the
// instance, so repeated transforms of the same length reuse twiddles.
Eigen::FFT<double>& engine() {
    thread_local Eigen::FFT<double> fft;
    return fft;
}

}  // namespace

ComplexVector fft_unitary(const ComplexVector& x) {
    if (!power_of_two(x.size()))
        throw std::invalid_argument("fft_unitary: unsupported size (must be a power of two)");
    ComplexVector out(x.size());
    engine().fwd(out, x);
    return out / std::sqrt(static_cast<double>(x.size()));
}

ComplexVector ifft_unitary(const ComplexVector& x) {
    if (!power_of_two(x.size()))
        throw std::invalid_argument("ifft_unitary: unsupported size (must be a power of two)");
    ComplexVector out(x.size());
    engine().inv(out, x);  // Eigen's inverse includes the 1/n factor
    return out * std::sqrt(static_cast<double>(x.size()));
}

double fourier_frequency(Index j, Index n, double spacing) {
    const double dxi = 2.0 * M_PI / (static_cast<double>(n) * spacing);
    const Index signed_j = (j <= n / 2) ? j : j - n;
    return dxi * static_cast<double>(signed_j);
}

SampledField fourier_pair(const SampledField& field, FourierDirection dir) {
    require_finite(field.values, "fourier_pair");
    ComplexVector out = (dir == FourierDirection::forward) ? fft_unitary(field.values)
                                                           : ifft_unitary(field.values);
    return {field.grid, std::move(out)};
}

}  // namespace nnls
