#include "singcomb/comb/teeth.hpp"

#include <algorithm>
#include <cmath>

namespace singcomb::comb {

namespace {

double bisect_crossing(const lle::CouplingProfile& profile, std::size_t modes,
                       double level, double lo, double hi, double glo,
                       double tolerance) {
    // Invariant: g(lo) and g(hi) have opposite signs.
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gmid = profile.at_mode(mid, modes) - level;
        if (std::abs(gmid) < tolerance) return mid;
        if ((gmid < 0) == (glo < 0)) {
            lo = mid;
            glo = gmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<ToothSet> comb_teeth(const lle::CouplingProfile& profile,
                                 std::span<const algebra::Rational> levels,
                                 std::size_t modes, double tolerance) {
    const lle::RingGrid grid(modes);
    const long half = static_cast<long>(modes) / 2;

    std::vector<ToothSet> result;
    result.reserve(levels.size());
    for (const auto& level_q : levels) {
        const double level = level_q.to_double();
        ToothSet teeth;
        teeth.level = level_q;

        // Samples at integer modes, centered order, plus the wrap point.
        std::vector<double> g(modes + 1);
        double max_abs = 0.0;
        for (std::size_t i = 0; i <= modes; ++i) {
            const double kappa = static_cast<double>(-half + static_cast<long>(i));
            g[i] = profile.at_mode(kappa, modes) - level;
            max_abs = std::max(max_abs, std::abs(g[i]));
        }
        if (max_abs < 1e-12) {
            teeth.degenerate = true;  // profile sits on the level everywhere
            result.push_back(std::move(teeth));
            continue;
        }
        for (std::size_t i = 0; i < modes; ++i) {
            const double k0 = static_cast<double>(-half + static_cast<long>(i));
            if (g[i] == 0.0) {
                teeth.positions.push_back(k0);
                continue;
            }
            if (g[i] * g[i + 1] < 0.0) {
                teeth.positions.push_back(bisect_crossing(
                    profile, modes, level, k0, k0 + 1.0, g[i], tolerance));
            }
        }
        std::sort(teeth.positions.begin(), teeth.positions.end());
        result.push_back(std::move(teeth));
    }
    return result;
}

}  // namespace singcomb::comb
