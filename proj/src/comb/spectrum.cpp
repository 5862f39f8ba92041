#include "singcomb/comb/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "singcomb/lle/fft.hpp"

namespace singcomb::comb {

double Spectrum::total() const {
    double t = 0.0;
    for (double p : power) t += p;
    return t;
}

Spectrum power_spectrum(const lle::DimerField& field, bool include_b) {
    const std::size_t m = field.modes();
    const lle::Fft fft(m);
    const double inv = 1.0 / static_cast<double>(m);
    std::vector<std::complex<double>> work = field.a;
    fft.forward(work.data());
    Spectrum s;
    s.power.resize(m);
    for (std::size_t j = 0; j < m; ++j) s.power[j] = std::norm(work[j] * inv);
    if (include_b) {
        work = field.b;
        fft.forward(work.data());
        for (std::size_t j = 0; j < m; ++j)
            s.power[j] += std::norm(work[j] * inv);
    }
    return s;
}

double spectral_fidelity(const Spectrum& s1, const Spectrum& s2) {
    if (s1.power.size() != s2.power.size())
        throw std::invalid_argument("spectra differ in length");
    const double t1 = s1.total();
    const double t2 = s2.total();
    if (t1 == 0.0 && t2 == 0.0)
        throw std::invalid_argument("fidelity of two zero spectra");
    if (s1.power == s2.power) return 1.0;
    double num = 0.0;
    for (std::size_t j = 0; j < s1.power.size(); ++j)
        num += std::sqrt(s1.power[j] * s2.power[j]);
    const double f = num / std::sqrt(t1 * t2);
    return std::clamp(f, 0.0, 1.0);
}

}  // namespace singcomb::comb
