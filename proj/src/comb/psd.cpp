#include "singcomb/comb/psd.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "singcomb/lle/fft.hpp"

namespace singcomb::comb {

PsdResult beat_note_psd(std::span<const double> samples, double dt) {
    if (samples.size() < 256)
        throw std::invalid_argument("PSD needs at least 256 samples");
    if (!(dt > 0)) throw std::invalid_argument("dt must be positive");

    std::size_t n = 1;
    while (n * 2 <= samples.size()) n *= 2;

    // Periodic Hann window.
    std::vector<std::complex<double>> x(n);
    double wsum2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w =
            0.5 * (1.0 - std::cos(2.0 * std::numbers::pi *
                                  static_cast<double>(i) /
                                  static_cast<double>(n)));
        x[i] = samples[i] * w;
        wsum2 += w * w;
    }
    const lle::Fft fft(n);
    fft.forward(x.data());

    const double fs = 1.0 / dt;
    const double df = fs / static_cast<double>(n);
    PsdResult r;
    r.resolution_floor = df;
    const std::size_t half = n / 2;
    r.frequency.resize(half + 1);
    r.power.resize(half + 1);
    const double norm = 1.0 / (wsum2 * fs);
    for (std::size_t j = 0; j <= half; ++j) {
        double p = std::norm(x[j]) * norm;
        if (j > 0 && j < half) p += std::norm(x[n - j]) * norm;
        r.frequency[j] = df * static_cast<double>(j);
        r.power[j] = p;
    }

    // Dominant line, DC excluded.
    std::size_t peak = 1;
    for (std::size_t j = 2; j <= half; ++j)
        if (r.power[j] > r.power[peak]) peak = j;
    double offdc = 0.0;
    for (std::size_t j = 1; j <= half; ++j) offdc += r.power[j];
    if (r.power[peak] <= 0.0 || offdc <= 1e-30 * (r.power[0] + 1e-300))
        throw std::domain_error("constant series: no spectral line");
    r.peak_bin = peak;

    // FWHM by linear interpolation around the peak.
    const double halfmax = 0.5 * r.power[peak];
    double left = r.frequency[peak];
    for (std::size_t j = peak; j-- > 0;) {
        if (r.power[j] < halfmax) {
            const double frac =
                (r.power[j + 1] - halfmax) / (r.power[j + 1] - r.power[j]);
            left = r.frequency[j + 1] - frac * df;
            break;
        }
        left = r.frequency[j];
    }
    double right = r.frequency[peak];
    for (std::size_t j = peak + 1; j <= half; ++j) {
        if (r.power[j] < halfmax) {
            const double frac =
                (r.power[j - 1] - halfmax) / (r.power[j - 1] - r.power[j]);
            right = r.frequency[j - 1] + frac * df;
            break;
        }
        right = r.frequency[j];
    }
    r.fwhm = right - left;
    return r;
}

}  // namespace singcomb::comb
