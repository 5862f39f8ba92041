#include "singcomb/lle/steady_state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace singcomb::lle {

namespace {

// Real roots (with multiplicity) of t^3 + p*t + q = 0.
std::vector<double> depressed_cubic_roots(double p, double q) {
    const double disc = -4.0 * p * p * p - 27.0 * q * q;
    std::vector<double> roots;
    if (p == 0.0 && q == 0.0) {
        roots.assign(3, 0.0);
        return roots;
    }
    // Double roots make disc = 0 exactly; keep them on the three-root
    // branch when roundoff pushes it slightly negative.
    const double scale =
        std::max({std::abs(p * p * p), q * q, 1e-300});
    if (disc >= -1e-9 * scale) {
        const double m = 2.0 * std::sqrt(std::max(-p, 0.0) / 3.0);
        if (m == 0.0) {
            roots.assign(3, 0.0);
            return roots;
        }
        double arg = 3.0 * q / (p * m);
        arg = std::clamp(arg, -1.0, 1.0);
        const double theta = std::acos(arg);
        for (int k = 0; k < 3; ++k)
            roots.push_back(
                m * std::cos(theta / 3.0 -
                             2.0 * std::numbers::pi * static_cast<double>(k) / 3.0));
    } else if (p < 0.0) {
        // One real root: hyperbolic cosine branch.
        const double m = 2.0 * std::sqrt(-p / 3.0);
        const double arg = -3.0 * std::abs(q) / (p * m);  // > 1 here
        const double t = -std::copysign(1.0, q) * m *
                         std::cosh(std::acosh(arg) / 3.0);
        roots.push_back(t);
    } else if (p > 0.0) {
        const double m = 2.0 * std::sqrt(p / 3.0);
        const double arg = 3.0 * q / (p * m);
        roots.push_back(-m * std::sinh(std::asinh(arg) / 3.0));
    } else {
        roots.push_back(std::cbrt(-q));
    }
    return roots;
}

}  // namespace

std::vector<double> homogeneous_steady_states(double detuning, double power) {
    if (!(power >= 0) || !std::isfinite(power) || !std::isfinite(detuning))
        throw std::invalid_argument("power must be finite and >= 0");
    if (power == 0.0) return {0.0};

    // rho^3 - 2*detuning*rho^2 + (1 + detuning^2)*rho - power = 0
    const double b = -2.0 * detuning;
    const double c = 1.0 + detuning * detuning;
    const double d = -power;
    const double shift = -b / 3.0;
    const double p = c - b * b / 3.0;
    const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;

    auto f = [&](double r) {
        return ((r + b) * r + c) * r + d;
    };
    auto fp = [&](double r) { return (3.0 * r + 2.0 * b) * r + c; };

    std::vector<double> roots;
    for (double t : depressed_cubic_roots(p, q)) {
        double r = t + shift;
        // Newton polish; keep a step only if it reduces the residual.
        for (int it = 0; it < 4; ++it) {
            const double deriv = fp(r);
            if (deriv == 0.0) break;
            const double next = r - f(r) / deriv;
            if (std::abs(f(next)) < std::abs(f(r)))
                r = next;
            else
                break;
        }
        if (r >= -1e-12) roots.push_back(std::max(r, 0.0));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::complex<double> flat_state_amplitude(double detuning, double power,
                                          double rho) {
    return std::sqrt(power) /
           std::complex<double>(1.0, detuning - rho);
}

}  // namespace singcomb::lle
