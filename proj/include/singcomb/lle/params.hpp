#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace singcomb::lle {

// Ring grid of M azimuthal points theta_j = 2*pi*j/M carrying mode
// numbers k in {-M/2 .. M/2-1}. M is a power of two, at least 16.
struct RingGrid {
    std::size_t modes;

    explicit RingGrid(std::size_t m) : modes(m) {
        if (m < 16 || (m & (m - 1)) != 0)
            throw std::invalid_argument(
                "grid needs a power-of-two mode count >= 16");
    }

    // Natural (FFT) array index -> signed mode number.
    long mode_number(std::size_t j) const {
        return j < modes / 2 ? static_cast<long>(j)
                             : static_cast<long>(j) - static_cast<long>(modes);
    }
};

// Momentum-dependent inter-field coupling a(k), real-valued across the
// Brillouin zone. The cosine kind is a0 + a1*cos(2*pi*k/M * s); tables
// hold one value per mode in natural (FFT) order and interpolate
// linearly (periodically) between modes.
struct CouplingProfile {
    enum class Kind { constant, cosine, table };

    Kind kind = Kind::constant;
    double a0 = 0.0;
    double a1 = 0.0;
    int scale = 1;
    std::vector<double> values;  // table kind only, natural order

    static CouplingProfile constant(double a0);
    static CouplingProfile cosine(double a0, double a1, int scale = 1);
    static CouplingProfile table(std::vector<double> values);

    // Continuous interpolant at a (possibly fractional) mode number.
    double at_mode(double kappa, std::size_t modes) const;
    // One value per mode, natural order.
    std::vector<double> sample(std::size_t modes) const;
};

// Normalized two-field Lugiato-Lefever parameters. Loss, time, and field
// amplitudes are in standard dimensionless units (loss rate 1). The two
// detunings coincide until disorder splits them.
struct LLEParams {
    double detuning_a = 0.0;
    double detuning_b = 0.0;
    double pump_amplitude = 0.0;  // power P = pump_amplitude^2
    double dispersion_d2 = 0.0;
    CouplingProfile coupling;
    int kerr_sign = +1;
    bool pump_both_fields = false;

    // Test hooks for the conservative / linear limits.
    double loss = 1.0;
    bool kerr_enabled = true;

    static LLEParams with_detuning(double detuning) {
        LLEParams p;
        p.detuning_a = detuning;
        p.detuning_b = detuning;
        return p;
    }

    void validate() const;
};

struct DisorderTargets {
    bool detuning = false;
    bool coupling = true;
};

// Multiplicative disorder: each targeted value q becomes q*(1 + eta*u)
// with u uniform in [-1, 1] from a counter-based generator, so identical
// (spec, params) inputs give identical perturbations.
struct DisorderSpec {
    double strength = 0.0;  // eta >= 0, relative
    std::uint64_t seed = 0;
    DisorderTargets targets;
};

struct EvolutionConfig {
    double dt = 1e-3;
    long steps = 1000;
    long record_every = 100;
    double blowup_bound = 1e6;  // on max field amplitude

    void validate() const;
};

}  // namespace singcomb::lle
