#include "singcomb/lle/stability.hpp"

#include <cmath>
#include <stdexcept>

#include "singcomb/lle/fft.hpp"

namespace singcomb::lle {

std::string to_string(Stability s) {
    switch (s) {
        case Stability::stable: return "Stable";
        case Stability::unstable: return "Unstable";
        case Stability::blowup: return "Blowup";
        case Stability::undecided: return "Undecided";
    }
    return "Undecided";
}

namespace {

// Combined mode-power spectrum |A_k|^2 + |B_k|^2 (1/M convention).
std::vector<double> mode_powers(const DimerField& field, const Fft& fft) {
    const std::size_t m = field.modes();
    std::vector<std::complex<double>> ka = field.a;
    std::vector<std::complex<double>> kb = field.b;
    fft.forward(ka.data());
    fft.forward(kb.data());
    std::vector<double> p(m);
    const double inv = 1.0 / static_cast<double>(m);
    for (std::size_t j = 0; j < m; ++j)
        p[j] = std::norm(ka[j] * inv) + std::norm(kb[j] * inv);
    return p;
}

}  // namespace

Stability classify_stability(const Trajectory& trajectory, double epsilon,
                             double trailing_fraction) {
    if (trajectory.blew_up()) return Stability::blowup;
    const std::size_t n = trajectory.snapshots.size();
    if (n < 4)
        throw std::invalid_argument(
            "classification needs at least 4 recorded snapshots");
    if (!(trailing_fraction > 0.0) || trailing_fraction > 1.0)
        throw std::invalid_argument("trailing fraction must be in (0, 1]");

    std::size_t window =
        static_cast<std::size_t>(std::floor(trailing_fraction * n));
    if (window < 2) window = 2;
    const std::size_t start = n - window;

    const Fft fft(trajectory.modes);
    std::vector<double> prev = mode_powers(trajectory.snapshots[start], fft);
    std::size_t exceeded = 0;
    std::size_t pairs = 0;
    for (std::size_t i = start + 1; i < n; ++i) {
        std::vector<double> cur = mode_powers(trajectory.snapshots[i], fft);
        double num = 0.0, den = 0.0;
        for (std::size_t j = 0; j < cur.size(); ++j) {
            const double d = cur[j] - prev[j];
            num += d * d;
            den += prev[j] * prev[j];
        }
        const double rel =
            den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
        if (rel >= epsilon) ++exceeded;
        ++pairs;
        prev.swap(cur);
    }
    if (pairs == 0) return Stability::undecided;
    if (exceeded == 0) return Stability::stable;
    if (2 * exceeded > pairs) return Stability::unstable;
    return Stability::undecided;
}

}  // namespace singcomb::lle
