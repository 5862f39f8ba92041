#include "singcomb/lle/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace singcomb::lle {

Fft::Fft(std::size_t n) : n_(n) {
    if (n < 2 || (n & (n - 1)) != 0)
        throw std::invalid_argument("FFT size must be a power of two >= 2");
    bitrev_.resize(n);
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) ++bits;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = 0;
        for (std::size_t b = 0; b < bits; ++b)
            if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
        bitrev_[i] = r;
    }
    twiddle_.resize(n / 2);
    for (std::size_t j = 0; j < n / 2; ++j) {
        const double phi = -2.0 * std::numbers::pi *
                           static_cast<double>(j) / static_cast<double>(n);
        twiddle_[j] = {std::cos(phi), std::sin(phi)};
    }
}

void Fft::transform(std::complex<double>* data, bool conjugate) const {
    for (std::size_t i = 0; i < n_; ++i) {
        const std::size_t j = bitrev_[i];
        if (i < j) std::swap(data[i], data[j]);
    }
    for (std::size_t len = 2; len <= n_; len <<= 1) {
        const std::size_t step = n_ / len;
        for (std::size_t block = 0; block < n_; block += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                std::complex<double> w = twiddle_[k * step];
                if (conjugate) w = std::conj(w);
                const std::complex<double> u = data[block + k];
                const std::complex<double> v = data[block + k + len / 2] * w;
                data[block + k] = u + v;
                data[block + k + len / 2] = u - v;
            }
        }
    }
}

void Fft::forward(std::complex<double>* data) const { transform(data, false); }

void Fft::inverse(std::complex<double>* data) const { transform(data, true); }

}  // namespace singcomb::lle
